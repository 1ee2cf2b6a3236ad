// Structure constants n_{a,b} of the Cartan-Weyl bracket, in the Chevalley
// normalization with signs fixed by extraspecial pairs.
#pragma once

#include "csreal/rational.hpp"
#include "csreal/roots.hpp"

#include <map>
#include <utility>

namespace csreal {

class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs);

    const RootSystem& root_system() const { return *rs_; }

    // n_{a,b}; zero when a+b is not a root (a+b = 0 is the Cartan case and is
    // handled by the bracket, not this table).
    Rational n(const Root& a, const Root& b) const;

    const std::map<std::pair<int, int>, Rational>& table() const { return table_; }

private:
    const RootSystem* rs_;
    std::map<std::pair<int, int>, Rational> table_;
};

inline StructureConstants structure_constants(const RootSystem& rs) {
    return StructureConstants(rs);
}

}  // namespace csreal
