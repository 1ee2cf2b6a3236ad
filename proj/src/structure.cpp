#include "csreal/structure.hpp"

#include <functional>
#include <stdexcept>

namespace csreal {
namespace {

// Computes the full table recursively from the extraspecial-pair values,
// using the standard Chevalley-basis identities:
//   (i)   n_{a,b} = -n_{b,a} = -n_{-a,-b}
//   (ii)  a+b+c=0  =>  n_{a,b}/(c,c) = n_{b,c}/(a,a) = n_{c,a}/(b,b)
//   (iii) a+b+c+d=0, no two opposite =>
//         n_{a,b}n_{c,d}/(a+b,a+b) + n_{b,c}n_{a,d}/(b+c,b+c)
//           + n_{c,a}n_{b,d}/(c+a,c+a) = 0
// Every reduction strictly decreases the height of the pair's sum, so the
// recursion terminates.
class Builder {
public:
    explicit Builder(const RootSystem& rs) : rs_(rs) {
        const auto& pos = rs.positive_roots();
        for (size_t g = 0; g < pos.size(); ++g) {
            if (pos[g].height() == 1) continue;
            for (size_t a = 0; a < pos.size(); ++a) {
                Root rest = pos[g] - pos[a];
                if (rest.is_positive() && rs.is_root(rest)) {
                    extraspecial_[static_cast<int>(g)] = static_cast<int>(a);
                    break;  // pos is sorted, so the first hit is minimal
                }
            }
        }
    }

    Rational n(const Root& a, const Root& b) {
        Root s = a + b;
        if (s.is_zero() || !rs_.is_root(s)) return 0;
        auto key = std::make_pair(rs_.root_index(a), rs_.root_index(b));
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Rational v = compute(a, b, s);
        memo_[key] = v;
        return v;
    }

private:
    Rational compute(const Root& a, const Root& b, const Root& s) {
        if (s.height() < 0) return -n(-a, -b);
        const bool aneg = !a.is_positive(), bneg = !b.is_positive();
        if (aneg && bneg) throw std::logic_error("impossible sign pattern");
        if (aneg) {
            // triple (a, b, -s): n_{a,b} = (s,s)/(b,b) * n_{-s,a}
            return rs_.inner(s, s) / rs_.inner(b, b) * n(-s, a);
        }
        if (bneg) return -n(b, a);
        // both positive
        int ia = rs_.positive_index(a), ib = rs_.positive_index(b);
        if (ia > ib) return -n(b, a);
        int ig = rs_.positive_index(s);
        int ix = extraspecial_.at(ig);
        const Root& x = rs_.positive_roots()[ix];
        Root y = s - x;
        if (ia == ix) {
            // extraspecial pair: n = p+1, p the depth of the string b - k a.
            int p = 0;
            Root down = b - a;
            while (!down.is_zero() && rs_.is_root(down)) {
                ++p;
                down = down - a;
            }
            return p + 1;
        }
        Rational t = 0;
        Root ya = y - a, xb = x - b;
        if (!ya.is_zero() && rs_.is_root(ya) && !xb.is_zero() && rs_.is_root(xb))
            t += n(y, -a) * n(x, -b) / rs_.inner(ya, ya);
        Root xa = x - a, yb = y - b;
        if (!xa.is_zero() && rs_.is_root(xa) && !yb.is_zero() && rs_.is_root(yb))
            t += n(-a, x) * n(y, -b) / rs_.inner(xa, xa);
        return rs_.inner(s, s) * t / n(x, y);
    }

    const RootSystem& rs_;
    std::map<int, int> extraspecial_;  // positive index of gamma -> index of alpha
    std::map<std::pair<int, int>, Rational> memo_;
};

}  // namespace

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(&rs) {
    Builder builder(rs);
    const auto& all = rs.all_roots();
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            Root s = all[i] + all[j];
            if (s.is_zero() || !rs.is_root(s)) continue;
            table_[{static_cast<int>(i), static_cast<int>(j)}] = builder.n(all[i], all[j]);
        }
}

Rational StructureConstants::n(const Root& a, const Root& b) const {
    auto ia = rs_->find_root(a), ib = rs_->find_root(b);
    if (!ia || !ib) return 0;
    auto it = table_.find({*ia, *ib});
    return it == table_.end() ? Rational(0) : it->second;
}

}  // namespace csreal
