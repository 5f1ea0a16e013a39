#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetvpa/polynomial.hpp"

namespace jetvpa {

// An affine presentation R = Q[x^1,...,x^r] / <f_1,...,f_s>. Relations
// mention level-1 variables only; an empty relation list presents affine
// space.
struct Presentation {
    int num_generators = 1;
    std::vector<Polynomial> relations;
    std::vector<std::string> names;  // optional, size 0 or num_generators

    void validate() const;  // throws std::invalid_argument on violations
    long max_relation_weight() const;  // -1 when there are no relations
};

// A polynomial ring on jet variables together with the derivation T
//   T x^j_(-i) = i x^j_(-i-1),
// truncated at order m (levels 1..m+1, T kills level m+1 and beyond) or
// unbounded.
class DifferentialRing {
  public:
    DifferentialRing(Presentation pres, std::optional<int> truncation_order);

    static DifferentialRing truncated(Presentation pres, int order) {
        return DifferentialRing(std::move(pres), order);
    }
    static DifferentialRing unbounded(Presentation pres) {
        return DifferentialRing(std::move(pres), std::nullopt);
    }

    const Presentation& presentation() const { return pres_; }
    int num_generators() const { return pres_.num_generators; }
    std::optional<int> truncation_order() const { return truncation_; }
    int max_level() const;  // m+1 when truncated; throws when unbounded

    // All variables of the truncated ring (levels 1..m+1), canonical order.
    std::vector<VarId> variables() const;
    // Variables of level <= max_weight, canonical order (a weight window
    // of the unbounded ring).
    std::vector<VarId> variables_up_to_weight(long max_weight) const;

    bool in_range(const Polynomial& p) const;

  private:
    Presentation pres_;
    std::optional<int> truncation_;
};

// The derivation T, extended from variables by linearity and Leibniz.
// Raises the weight of weight-homogeneous input by exactly 1 unless the
// truncation kills it.
Polynomial derive(const DifferentialRing& ring, const Polynomial& p);
Polynomial derive_n(const DifferentialRing& ring, const Polynomial& p, int n);

// Generators of a jet-scheme ideal (or a weight window of the arc-space
// ideal) together with the ambient ring and variable set.
struct JetIdeal {
    DifferentialRing ring;
    std::vector<Polynomial> generators;
    std::vector<VarId> variables;
};

// Order-m jet ideal: ring truncated at m, generators
// { T^j f_i : 0 <= j <= m } under the truncated derivation, zero
// generators dropped.
JetIdeal jet_ideal(const Presentation& pres, int order);

// Weight-w window of the arc-space ideal: untruncated derivation, all
// T^j f_i of weight <= w. Requires w >= every relation weight.
JetIdeal arc_ideal_truncation(const Presentation& pres, long max_weight);

}  // namespace jetvpa
