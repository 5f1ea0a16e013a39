#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "jetvpa/monomial.hpp"
#include "jetvpa/order.hpp"
#include "jetvpa/scalar.hpp"

namespace jetvpa {

// Exact-rational multivariate polynomial over jet variables. Terms are a
// canonical map with no zero coefficients, so equal polynomials have
// identical representations. Values are immutable in spirit: all
// operations return fresh polynomials.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Scalar>;

    Polynomial() = default;
    explicit Polynomial(Scalar constant);
    explicit Polynomial(long constant);

    static Polynomial variable(VarId v);
    static Polynomial term(Monomial m, Scalar c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t num_terms() const { return terms_.size(); }

    Scalar coefficient(const Monomial& m) const;
    Scalar constant_term() const { return coefficient(Monomial{}); }

    int degree() const;    // max total degree; -1 for the zero polynomial
    long weight() const;   // max weight; -1 for the zero polynomial
    int max_level() const; // highest variable level mentioned; 0 if constant
    bool is_weight_homogeneous() const;
    Polynomial weight_component(long w) const;

    std::set<VarId> variables() const;
    // true when every variable mentioned has the given level
    bool only_level(int level) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial pow(unsigned e) const;

    Polynomial partial_derivative(VarId v) const;

    std::pair<Monomial, Scalar> leading_term(const MonomialOrder& order) const;
    Monomial leading_monomial(const MonomialOrder& order) const;
    // divide by the leading coefficient
    Polynomial monic(const MonomialOrder& order) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Canonical text form: terms descending under the default
    // weighted-degrevlex order. parse_polynomial() inverts this.
    std::string str() const;

  private:
    TermMap terms_;

    void add_term(const Monomial& m, const Scalar& c);
    friend Polynomial poly_sum_helper(const Polynomial&, const Polynomial&, bool);
};

Polynomial operator*(const Scalar& c, const Polynomial& p);

}  // namespace jetvpa
