#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetvpa/variable.hpp"

namespace jetvpa {

// A power product of jet variables. Factors are kept sorted by VarId with
// strictly positive exponents, so equal monomials have identical
// representations. Total degree and weight (sum of level * exponent, the
// conformal grading) are cached.
class Monomial {
  public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);

    static Monomial variable(VarId v, int exp = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int degree() const { return degree_; }
    long weight() const { return weight_; }
    int exponent(VarId v) const;
    int max_level() const;

    Monomial operator*(const Monomial& rhs) const;
    // Exact division: nullopt unless rhs divides *this.
    std::optional<Monomial> operator/(const Monomial& rhs) const;
    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Storage order only (used for canonical term maps); monomial orders
    // for Groebner computations live in MonomialOrder.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.factors_ <=> b.factors_;
    }

    std::string str() const;

  private:
    std::vector<Factor> factors_;
    int degree_ = 0;
    long weight_ = 0;

    void recompute_caches();
};

}  // namespace jetvpa
