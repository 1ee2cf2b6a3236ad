#include "csreal/liepoly.hpp"

#include <stdexcept>

namespace csreal {

LiePoly bracket(const LiePoly& a, const LiePoly& b, const StructureConstants& sc) {
    const RootSystem& rs = sc.root_system();
    LiePoly out;
    for (const auto& [ga, pa] : a.coefficients()) {
        for (const auto& [gb, pb] : b.coefficients()) {
            Polynomial p = pa * pb;
            if (p.is_zero()) continue;
            if (ga.cartan && gb.cartan) continue;
            if (ga.cartan || gb.cartan) {
                // [H_i, E_beta] = beta(H_i) E_beta, antisymmetrized.
                int i = ga.cartan ? ga.index : gb.index;
                const GenId e = ga.cartan ? gb : ga;
                int sign = ga.cartan ? 1 : -1;
                const Root& beta = rs.all_roots()[e.index];
                int pair = rs.pairing(beta, i);
                if (pair != 0) out.add(e, Rational(sign * pair) * p);
                continue;
            }
            const Root& ra = rs.all_roots()[ga.index];
            const Root& rb = rs.all_roots()[gb.index];
            Root s = ra + rb;
            if (s.is_zero()) {
                auto cv = rs.coroot_coords(ra);
                for (int i = 0; i < rs.rank(); ++i)
                    if (cv[i] != 0) out.add(GenId::H(i), Rational(cv[i]) * p);
            } else if (auto idx = rs.find_root(s)) {
                Rational n = sc.n(ra, rb);
                if (n != 0) out.add(GenId::E(*idx), n * p);
            }
        }
    }
    return out;
}

LiePoly ad_power_series(const LiePoly& z, const LiePoly& x,
                        const std::vector<Rational>& coeffs,
                        const StructureConstants& sc) {
    const RootSystem& rs = sc.root_system();
    const size_t dim = rs.all_roots().size() + rs.rank();
    LiePoly out, power = x;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (power.is_zero()) break;
        if (k > dim)
            throw std::runtime_error("ad series does not terminate: non-nilpotent input");
        if (coeffs[k] != 0) out += coeffs[k] * power;
        if (k + 1 < coeffs.size()) power = bracket(z, power, sc);
    }
    return out;
}

}  // namespace csreal
