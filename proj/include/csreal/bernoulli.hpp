// Series coefficients c_k of x/(1 - e^{-x}) and the companion d_k, generated
// exactly from their triangular recursions and cross-checked against each
// other at construction time.
#pragma once

#include "csreal/rational.hpp"

#include <vector>

namespace csreal {

struct CoeffTable {
    std::vector<Rational> c;  // length n+1: c_0 .. c_n
    std::vector<Rational> d;  // length n:   d_0 .. d_{n-1}
};

// Solves 1/n! = sum_{k=0}^n c_k / (n-k+1)! for c_0..c_n, sets
// d_k = (-1)^k c_{k+1}, and verifies d against its own recursion
// 1/(n+2)! = sum_{k=0}^n d_k / (n-k+1)!.  Throws std::invalid_argument for
// n < 1 and std::logic_error if the cross-check ever fails.
CoeffTable coeff_table(int n);

}  // namespace csreal
