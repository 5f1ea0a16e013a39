#pragma once

#include <compare>
#include <string>

namespace jetvpa {

// A jet variable x^j_(-i): generator index j >= 1 of the base ring at
// level i >= 1. Level-1 variables are identified with the base-ring
// generators themselves.
//
// The canonical variable listing is by (level, gen) ascending: all base
// generators first, then level 2, and so on. Monomial orders treat
// variables earlier in this listing as larger, so
// x1_1 > x2_1 > ... > x1_2 > x2_2 > ...
struct VarId {
    int level = 1;  // i in x^j_(-i)
    int gen = 1;    // j

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId base_var(int gen) { return VarId{1, gen}; }
inline VarId jet_var(int gen, int level) { return VarId{level, gen}; }

// Text form used by the polynomial grammar: x{j}_{i}.
inline std::string var_name(VarId v) {
    return "x" + std::to_string(v.gen) + "_" + std::to_string(v.level);
}

}  // namespace jetvpa
