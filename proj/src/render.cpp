#include "csreal/render.hpp"

#include <sstream>

namespace csreal {
namespace {

std::string coords_csv(const Root& r) {
    std::string s;
    for (size_t i = 0; i < r.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r.coords[i]);
    }
    return s;
}

std::string root_latex(const RootSystem& rs, const Root& r) {
    // \alpha_{1}+2\alpha_{2}, mirroring the a1+2a2 text grammar.
    std::string s;
    bool first = true;
    for (size_t i = 0; i < r.coords.size(); ++i) {
        int c = r.coords[i];
        if (c == 0) continue;
        if (c > 0 && !first) s += "+";
        if (c == -1)
            s += "-";
        else if (c != 1)
            s += std::to_string(c);
        s += "\\alpha_{" + std::to_string(i + 1) + "}";
        first = false;
    }
    if (first) s = "0";
    (void)rs;
    return s;
}

// |c| as "5" or "(5/7)"; the sign is emitted by the caller.
std::string abs_coeff(const Rational& c, bool latex) {
    Rational a = c < 0 ? -c : c;
    if (denominator(a) == 1) return numerator(a).str();
    if (latex) return "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
    return "(" + numerator(a).str() + "/" + denominator(a).str() + ")";
}

std::string monomial_str(const Monomial& m, const VarNamer& name, bool latex) {
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) s += latex ? " " : "*";
        s += name(v);
        if (e != 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    return s;
}

std::string render_impl(const Polynomial& p, const VarNamer& name, bool latex) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        bool neg = c < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        Rational a = neg ? -c : c;
        if (m.empty()) {
            s += abs_coeff(a, latex);
        } else {
            if (a != 1) s += abs_coeff(a, latex) + (latex ? " " : "*");
            s += monomial_str(m, name, latex);
        }
    }
    return s;
}

std::string render_op_impl(const DiffOp& op, const VarNamer& name,
                           const std::function<std::string(int)>& deriv, bool latex) {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Polynomial& p, const std::string& suffix) {
        if (p.is_zero()) return;
        std::string body = render_impl(p, name, latex);
        if (!suffix.empty()) {
            bool wrap = p.terms().size() > 1 || body[0] == '-';
            if (wrap) body = "(" + body + ")";
            if (body == "(1)" || body == "1")
                body = suffix;
            else
                body += (latex ? " " : "*") + suffix;
        }
        if (!first) out << " + ";
        out << body;
        first = false;
    };
    emit(op.scalar(), "");
    for (const auto& [zi, q] : op.derivatives()) emit(q, deriv(zi));
    if (first) return "0";
    return out.str();
}

}  // namespace

VarNamer default_namer(const OrbitContext& ctx) {
    const auto roots = ctx.delta_plus();
    const int rank = ctx.root_system().rank();
    return [roots, rank](Var v) -> std::string {
        switch (v.kind) {
            case VarKind::Z:
                return "z[" + coords_csv(roots.at(v.index)) + "]";
            case VarKind::ZBar:
                return "zbar[" + coords_csv(roots.at(v.index)) + "]";
            case VarKind::J:
                return "j" + std::to_string(v.index + 1);
        }
        return "?";
    };
}

VarNamer latex_namer(const OrbitContext& ctx) {
    const RootSystem& rs = ctx.root_system();
    const auto roots = ctx.delta_plus();
    return [&rs, roots](Var v) -> std::string {
        switch (v.kind) {
            case VarKind::Z:
                return "z_{" + root_latex(rs, roots.at(v.index)) + "}";
            case VarKind::ZBar:
                return "\\bar{z}_{" + root_latex(rs, roots.at(v.index)) + "}";
            case VarKind::J:
                return "j_{" + std::to_string(v.index + 1) + "}";
        }
        return "?";
    };
}

std::string render(const Polynomial& p, const VarNamer& name) {
    return render_impl(p, name, false);
}

std::string render(const DiffOp& op, const VarNamer& name) {
    auto deriv = [&name](int zi) {
        std::string zn = name(zvar(zi));
        return "d" + zn.substr(1);
    };
    return render_op_impl(op, name, deriv, false);
}

std::string render_latex(const Polynomial& p, const VarNamer& name) {
    return render_impl(p, name, true);
}

std::string render_latex(const DiffOp& op, const OrbitContext& ctx) {
    const RootSystem& rs = ctx.root_system();
    auto name = latex_namer(ctx);
    auto roots = ctx.delta_plus();
    auto deriv = [&rs, roots](int zi) {
        return "\\partial_{" + root_latex(rs, roots.at(zi)) + "}";
    };
    return render_op_impl(op, name, deriv, true);
}

}  // namespace csreal
