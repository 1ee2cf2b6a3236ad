// First-order differential operators P + sum_b Q_b d/dz_b with polynomial
// coefficients.  The derivative index b is the z-variable index of a root in
// the ambient Delta_+ list.
#pragma once

#include "csreal/polynomial.hpp"

#include <map>

namespace csreal {

class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(Polynomial scalar) : scalar_(std::move(scalar)) {}

    const Polynomial& scalar() const { return scalar_; }
    const std::map<int, Polynomial>& derivatives() const { return derivs_; }

    Polynomial derivative_coeff(int b) const {
        auto it = derivs_.find(b);
        return it == derivs_.end() ? Polynomial() : it->second;
    }

    void add_scalar(const Polynomial& p) { scalar_ += p; }
    void add_derivative(int b, const Polynomial& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = derivs_.emplace(b, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) derivs_.erase(it);
        }
    }

    bool is_zero() const { return scalar_.is_zero() && derivs_.empty(); }

    DiffOp& operator+=(const DiffOp& o) {
        scalar_ += o.scalar_;
        for (const auto& [b, q] : o.derivs_) add_derivative(b, q);
        return *this;
    }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(const DiffOp& a) { return Rational(-1) * a; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a += Rational(-1) * b; }
    friend DiffOp operator*(const Rational& c, const DiffOp& op) {
        DiffOp r(c * op.scalar_);
        for (const auto& [b, q] : op.derivs_) r.add_derivative(b, c * q);
        return r;
    }
    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.scalar_ == b.scalar_ && a.derivs_ == b.derivs_;
    }

    // Applies the operator to a polynomial (derivatives act on z-variables).
    Polynomial apply(const Polynomial& f) const {
        Polynomial r = scalar_ * f;
        for (const auto& [b, q] : derivs_) r += q * f.derivative(zvar(b));
        return r;
    }

private:
    Polynomial scalar_;
    std::map<int, Polynomial> derivs_;
};

// [a, b] = a.b - b.a.  The second-order parts cancel identically, so the
// result is again first order:
//   scalar:     sum_i QA_i d_i(PB) - QB_i d_i(PA)
//   derivative: sum_i QA_i d_i(QB_j) - QB_i d_i(QA_j)
DiffOp diffop_commutator(const DiffOp& a, const DiffOp& b);

}  // namespace csreal
