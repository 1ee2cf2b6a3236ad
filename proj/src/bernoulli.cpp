#include "csreal/bernoulli.hpp"

#include <stdexcept>

namespace csreal {

CoeffTable coeff_table(int n) {
    if (n < 1) throw std::invalid_argument("coeff_table requires n >= 1");
    CoeffTable t;
    t.c.resize(n + 1);
    for (int m = 0; m <= n; ++m) {
        // 1/m! = sum_{k=0}^{m} c_k / (m-k+1)!  with the k=m term c_m / 1!.
        Rational s = Rational(1, factorial(m));
        for (int k = 0; k < m; ++k) s -= t.c[k] / Rational(factorial(m - k + 1));
        t.c[m] = s;
    }
    t.d.resize(n);
    for (int k = 0; k < n; ++k) t.d[k] = (k % 2 == 0 ? 1 : -1) * t.c[k + 1];

    // Independent recursion for d: 1/(m+2)! = sum_{k=0}^{m} d_k / (m-k+1)!.
    for (int m = 0; m < n; ++m) {
        Rational s = Rational(1, factorial(m + 2));
        for (int k = 0; k < m; ++k) s -= t.d[k] / Rational(factorial(m - k + 1));
        if (t.d[m] != s)
            throw std::logic_error("coefficient tables disagree at d_" + std::to_string(m));
    }
    return t;
}

}  // namespace csreal
