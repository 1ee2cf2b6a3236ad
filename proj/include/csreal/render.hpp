// Canonical text and LaTeX rendering of polynomials and operators.  Term
// order is the graded-lexicographic order of the polynomial ring, so output
// is deterministic and usable in golden-file comparisons.
#pragma once

#include "csreal/diffop.hpp"
#include "csreal/realization.hpp"

#include <string>

namespace csreal {

// "z[1,0]" / "zbar[1,0]" from the root coordinates of the context's
// Delta_+ list; "j1".."jr" for the weight indeterminates.
VarNamer default_namer(const OrbitContext& ctx);

// "z_{\alpha_{1}+2\alpha_{2}}", "\bar{z}_{...}", "j_{1}".
VarNamer latex_namer(const OrbitContext& ctx);

// Declared in polynomial.hpp: render(const Polynomial&, const VarNamer&).

// "j1 + 2*z[1]*d[1]" style; the derivative symbol reuses the z name with a
// leading "d" ("dbar" never occurs: operators are holomorphic).
std::string render(const DiffOp& op, const VarNamer& name);

std::string render_latex(const Polynomial& p, const VarNamer& name);
std::string render_latex(const DiffOp& op, const OrbitContext& ctx);

}  // namespace csreal
