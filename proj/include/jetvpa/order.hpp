#pragma once

#include <compare>
#include <string>
#include <vector>

#include "jetvpa/monomial.hpp"

namespace jetvpa {

enum class OrderTag {
    lex,
    degrevlex,
    // weight (level-sum) first, ties broken by degrevlex; the default.
    // Weight-homogeneous ideals get weight-compatible leading terms.
    weighted_degrevlex,
};

// A multiplicative well-order on monomials. Variable precedence defaults
// to the canonical listing (see VarId); an explicit ranking (largest
// variable first) may be supplied, with unlisted variables appended in
// canonical order after the listed ones.
class MonomialOrder {
  public:
    static MonomialOrder lex() { return MonomialOrder(OrderTag::lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(OrderTag::degrevlex); }
    static MonomialOrder weighted_degrevlex() {
        return MonomialOrder(OrderTag::weighted_degrevlex);
    }

    MonomialOrder with_ranking(std::vector<VarId> vars_largest_first) const {
        MonomialOrder o = *this;
        o.ranking_ = std::move(vars_largest_first);
        return o;
    }

    OrderTag tag() const { return tag_; }

    // greater / less / equal in the monomial order
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    std::string name() const;
    static MonomialOrder from_name(const std::string& name);  // throws on unknown

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  private:
    explicit MonomialOrder(OrderTag tag) : tag_(tag) {}

    OrderTag tag_;
    std::vector<VarId> ranking_;
};

}  // namespace jetvpa
