// gl(3) with polynomial coefficients and the ordered-product-of-exponentials
// realization engine for SU(3)/S(U(1)^3): operators D_{C_ij} in the product
// coordinates (z12, z13, z23) acting on a maximal-weight orbit with weight
// (w1, w2, w3).
//
// Variable conventions in this module: zvar(0) = z12, zvar(1) = z13,
// zvar(2) = z23; jvar(i) = w_{i+1}.  zbarvar mirrors zvar for the kernel.
#pragma once

#include "csreal/diffop.hpp"
#include "csreal/oracle.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace csreal {

// An element sum_{ij} c[i][j] C_{ij} of gl(3) over the polynomial ring.
struct Gl3 {
    std::array<std::array<Polynomial, 3>, 3> c;

    static Gl3 basis(int i, int j);  // C_{ij}, 0-based indices
    bool is_zero() const;

    Gl3& operator+=(const Gl3& o);
    friend Gl3 operator+(Gl3 a, const Gl3& b) { return a += b; }
    friend Gl3 operator*(const Polynomial& p, const Gl3& x);
    friend bool operator==(const Gl3& a, const Gl3& b) { return a.c == b.c; }
};

// [a, b] through [C_ij, C_kl] = d_jk C_il - d_il C_kj.
Gl3 gl3_bracket(const Gl3& a, const Gl3& b);

// Ad(exp(a)) x = sum 1/k! ad_a^k x; requires ad_a nilpotent (throws otherwise).
Gl3 gl3_ad_exp(const Gl3& a, const Gl3& x);

// One factor exp(sum_c z_c C_{row,col}) of the ordered product; generators
// within one group must commute (checked).
struct ProductFactor {
    int coord;     // z-variable index of the coordinate
    int row, col;  // 0-based generator C_{row,col}
};
using ProductOrdering = std::vector<std::vector<ProductFactor>>;

// exp(z23 C23) exp(z12 C12 + z13 C13), leftmost group first.
ProductOrdering su3_standard_ordering();

// E C_x = Ad(E) C_x E for E the ordered product: decomposes Ad(E) x into
// lambda_c M_c (with d_c E = M_c E) plus a part evaluated on the maximal
// weight vector (C_ii -> w_i; lowering C_ij, i>j, vanish through the bra).
// Throws std::logic_error when the ordering does not span the raising part.
DiffOp realize_product(const ProductOrdering& ordering, const Gl3& x);

// All nine D_{C_ij}, keyed by (i, j) 0-based.
std::map<std::pair<int, int>, DiffOp> su3_operator_table();

// Direct-homomorphism certificate: [D_X, D_Y] = D_{[X,Y]} for all 81 pairs.
VerificationReport gl3_bracket_check(const std::map<std::pair<int, int>, DiffOp>& table);

// "z12"/"z13"/"z23", "w1".."w3".
VarNamer gl3_namer();

// Reproducing kernel Delta_1^{j1} Delta_2^{j2} expanded in z and zbar, for
// integer j1, j2 >= 0.
Polynomial su3_kernel(int j1, int j2);

// Coordinate change between the single-exponential zeta chart and the product
// chart: z12 = zeta12, z13 = zeta13 + (1/2) zeta12 zeta23, z23 = zeta23.
// Both maps substitute into the same zvar slots; they compose to the identity.
std::map<Var, Polynomial> su3_zeta_to_z();
std::map<Var, Polynomial> su3_z_to_zeta();

}  // namespace csreal
