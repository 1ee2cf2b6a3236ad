#include "csreal/diffop.hpp"

namespace csreal {

DiffOp diffop_commutator(const DiffOp& a, const DiffOp& b) {
    DiffOp r;
    for (const auto& [i, qa] : a.derivatives()) {
        r.add_scalar(qa * b.scalar().derivative(zvar(i)));
        for (const auto& [j, qb] : b.derivatives())
            r.add_derivative(j, qa * qb.derivative(zvar(i)));
    }
    for (const auto& [i, qb] : b.derivatives()) {
        r.add_scalar(Rational(-1) * (qb * a.scalar().derivative(zvar(i))));
        for (const auto& [j, qa] : a.derivatives())
            r.add_derivative(j, Rational(-1) * (qb * qa.derivative(zvar(i))));
    }
    return r;
}

}  // namespace csreal
