#pragma once

#include <optional>
#include <vector>

#include "jetvpa/order.hpp"
#include "jetvpa/polynomial.hpp"

namespace jetvpa {

// The unique reduced Groebner basis of an ideal for a given order, over
// an explicit ambient variable set (the ambient matters: the zero ideal
// in n variables has dimension n).
struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    std::vector<Polynomial> basis;    // reduced, monic, sorted by leading monomial
    std::vector<VarId> variables;     // ambient, canonical order

    bool is_unit_ideal() const;
    bool is_zero_ideal() const { return basis.empty(); }
};

// Buchberger with the normal selection strategy (smallest lcm first) and
// the coprimality + chain elimination criteria. Deterministic: identical
// inputs give identical bases.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order,
                         std::vector<VarId> variables);
// Ambient variables inferred from the generators.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order);

// Unique remainder of p modulo the basis; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// true iff every generator of B reduces to zero against A.
bool ideal_contains(const GroebnerBasis& a, const std::vector<Polynomial>& gens_b);

struct DimensionReport {
    long krull_dimension = 0;  // -1 for the unit ideal (Spec of the zero ring is empty)
    bool zero_dimensional = false;
    bool unit_ideal = false;
    std::optional<long> quotient_dimension;  // present iff zero_dimensional
    std::vector<VarId> independent_set;      // witness when dimension > 0
};

// Krull dimension of the quotient ring, as the maximum size of a variable
// subset independent modulo the leading-term ideal. Combinatorial search;
// intended for small variable counts.
DimensionReport krull_dimension(const GroebnerBasis& gb);

// The standard monomials (those outside the leading-term ideal), sorted
// ascending under the basis order. Throws unless the ideal is
// zero-dimensional.
std::vector<Monomial> quotient_basis(const GroebnerBasis& gb);

}  // namespace jetvpa
