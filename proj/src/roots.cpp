#include "csreal/roots.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace csreal {

LieType::LieType(Family f, int r) : family(f), rank(r) {
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("invalid Lie type " + std::string(1, char(f)) +
                                    std::to_string(r) + ": " + what);
    };
    if (r < 1) fail("rank must be positive");
    switch (f) {
        case Family::A: break;
        case Family::B:
            if (r < 2) fail("B requires rank >= 2");
            break;
        case Family::C:
            if (r < 2) fail("C requires rank >= 2");
            break;
        case Family::D:
            if (r < 3) fail("D requires rank >= 3");
            break;
        case Family::E:
            if (r < 6 || r > 8) fail("E requires rank in {6,7,8}");
            break;
        case Family::F:
            if (r != 4) fail("F requires rank 4");
            break;
        case Family::G:
            if (r != 2) fail("G requires rank 2");
            break;
        default: fail("unknown family");
    }
}

LieType LieType::parse(const std::string& s) {
    if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
        throw std::invalid_argument("cannot parse Lie type '" + s + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G')
        throw std::invalid_argument("unknown family in '" + s + "'");
    int r;
    try {
        r = std::stoi(s.substr(1));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rank in '" + s + "'");
    }
    return LieType(static_cast<Family>(f), r);
}

std::string LieType::name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Root Root::operator+(const Root& o) const {
    Root r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}
Root Root::operator-(const Root& o) const {
    Root r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}
Root Root::operator-() const {
    Root r = *this;
    for (int& c : r.coords) c = -c;
    return r;
}
bool Root::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

std::vector<std::vector<int>> cartan_matrix_for(LieType t) {
    const int l = t.rank;
    std::vector<std::vector<int>> A(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) A[i][i] = 2;
    auto chain = [&](int i, int j) { A[i][j] = A[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
            // last simple root short: <a_{l-1}, a_l^vee> = -2
            A[l - 2][l - 1] = -2;
            break;
        case Family::C:
            for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
            A[l - 1][l - 2] = -2;
            break;
        case Family::D:
            for (int i = 0; i + 1 < l - 1; ++i) chain(i, i + 1);
            chain(l - 3, l - 1);
            break;
        case Family::E:
            // Bourbaki numbering: node 2 attaches to node 4.
            chain(0, 2);
            chain(2, 3);
            chain(1, 3);
            for (int i = 3; i + 1 < l; ++i) chain(i, i + 1);
            break;
        case Family::F:
            chain(0, 1);
            chain(1, 2);
            chain(2, 3);
            A[1][2] = -2;  // a2 long, a3 short
            break;
        case Family::G:
            chain(0, 1);
            A[1][0] = -3;  // a1 short, a2 long
            break;
    }
    return A;
}

RootSystem::RootSystem(LieType t) : type_(t), cartan_(cartan_matrix_for(t)) {
    const int l = t.rank;

    // half_norm_ d_i with (a_i,a_j) = A[i][j] d_j symmetric; d_0 = 1.
    half_norm_.assign(l, Rational(0));
    half_norm_[0] = 1;
    std::vector<int> todo{0};
    while (!todo.empty()) {
        int i = todo.back();
        todo.pop_back();
        for (int j = 0; j < l; ++j) {
            if (j == i || cartan_[i][j] == 0 || half_norm_[j] != 0) continue;
            half_norm_[j] = half_norm_[i] * cartan_[j][i] / cartan_[i][j];
            todo.push_back(j);
        }
    }

    for (int i = 0; i < l; ++i) {
        Root r;
        r.coords.assign(l, 0);
        r.coords[i] = 1;
        simple_.push_back(r);
    }

    // Closure by root strings: alpha + a_j is a root iff p - <alpha, a_j^vee> > 0,
    // where p is the number of steps the string through a_j extends below alpha.
    std::set<Root> pos(simple_.begin(), simple_.end());
    std::vector<Root> frontier = simple_;
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const Root& alpha : frontier) {
            for (int j = 0; j < l; ++j) {
                int p = 0;
                Root down = alpha - simple_[j];
                while (!down.is_zero() && pos.count(down)) {
                    ++p;
                    down = down - simple_[j];
                }
                if (p - pairing(alpha, j) > 0) {
                    Root up = alpha + simple_[j];
                    if (pos.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }

    positive_.assign(pos.begin(), pos.end());
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        // Within a height, earlier simple roots first: a1 before a2.
        return a.coords > b.coords;
    });

    all_roots_ = positive_;
    for (const Root& r : positive_) all_roots_.push_back(-r);
    for (size_t i = 0; i < all_roots_.size(); ++i) index_[all_roots_[i]] = static_cast<int>(i);
}

int RootSystem::root_index(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end())
        throw std::invalid_argument("not a root: " + render_root(r));
    return it->second;
}

std::optional<int> RootSystem::find_root(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int RootSystem::positive_index(const Root& r) const {
    int i = root_index(r);
    if (i >= static_cast<int>(positive_.size()))
        throw std::invalid_argument("not a positive root: " + render_root(r));
    return i;
}

int RootSystem::pairing(const Root& alpha, int i) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += alpha.coords[j] * cartan_[j][i];
    return s;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
    Rational s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            if (a.coords[i] != 0 && b.coords[j] != 0)
                s += Rational(a.coords[i] * b.coords[j]) * cartan_[i][j] * half_norm_[j];
    return s;
}

std::vector<int> RootSystem::coroot_coords(const Root& alpha) const {
    Rational d_alpha = inner(alpha, alpha) / 2;
    std::vector<int> cv(rank());
    for (int i = 0; i < rank(); ++i) {
        Rational c = Rational(alpha.coords[i]) * half_norm_[i] / d_alpha;
        if (denominator(c) != 1)
            throw std::logic_error("non-integer coroot coordinate");
        cv[i] = static_cast<int>(numerator(c));
    }
    return cv;
}

std::string RootSystem::render_root(const Root& r) const {
    std::string out;
    for (size_t i = 0; i < r.coords.size(); ++i) {
        int c = r.coords[i];
        if (c == 0) continue;
        if (c > 0 && !out.empty()) out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += std::to_string(c);
        out += "a" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

Root RootSystem::parse_root(const std::string& s) const {
    Root r;
    r.coords.assign(rank(), 0);
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') ++i;
        else if (s[i] == '-') { sign = -1; ++i; }
        int coef = 1;
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) coef = std::stoi(s.substr(start, i - start));
        if (i >= s.size() || s[i] != 'a')
            throw std::invalid_argument("cannot parse root '" + s + "'");
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("cannot parse root '" + s + "'");
        int idx = std::stoi(s.substr(start, i - start));
        if (idx < 1 || idx > rank())
            throw std::invalid_argument("simple-root index out of range in '" + s + "'");
        r.coords[idx - 1] += sign * coef;
    }
    if (!is_root(r)) throw std::invalid_argument("'" + s + "' is not a root of " + type_.name());
    return r;
}

int nu_degree(const RootSystem& rs) { return rs.highest_root().height() - 1; }

ParabolicChoice partition(const RootSystem& rs, const std::set<int>& excluded) {
    for (int i : excluded)
        if (i < 0 || i >= rs.rank())
            throw std::invalid_argument("excluded index out of range");
    ParabolicChoice pc;
    pc.excluded = excluded;
    pc.tags.reserve(rs.all_roots().size());
    for (const Root& r : rs.all_roots()) {
        bool reductive = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (r.coords[i] != 0 && !excluded.count(i)) reductive = false;
        if (reductive)
            pc.tags.push_back(RootTag::DeltaZero);
        else
            pc.tags.push_back(r.is_positive() ? RootTag::DeltaPlus : RootTag::DeltaMinus);
    }
    return pc;
}

}  // namespace csreal
