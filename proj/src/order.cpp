#include "jetvpa/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetvpa {

namespace {

// Exponents of both monomials aligned to their common variable support,
// listed largest variable first.
struct AlignedExps {
    std::vector<int> a, b;
};

AlignedExps align(const Monomial& ma, const Monomial& mb,
                  const std::vector<VarId>& ranking) {
    std::vector<VarId> vars;
    for (const auto& [v, e] : ma.factors()) vars.push_back(v);
    for (const auto& [v, e] : mb.factors()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    if (!ranking.empty()) {
        std::vector<VarId> ordered;
        for (VarId r : ranking)
            if (std::find(vars.begin(), vars.end(), r) != vars.end())
                ordered.push_back(r);
        for (VarId v : vars)
            if (std::find(ordered.begin(), ordered.end(), v) == ordered.end())
                ordered.push_back(v);
        vars = std::move(ordered);
    }
    // canonical VarId order ascending == precedence descending already

    AlignedExps out;
    out.a.reserve(vars.size());
    out.b.reserve(vars.size());
    for (VarId v : vars) {
        out.a.push_back(ma.exponent(v));
        out.b.push_back(mb.exponent(v));
    }
    return out;
}

std::strong_ordering lex_compare(const AlignedExps& e) {
    for (size_t i = 0; i < e.a.size(); ++i)
        if (e.a[i] != e.b[i]) return e.a[i] <=> e.b[i];
    return std::strong_ordering::equal;
}

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b,
                                       const AlignedExps& e) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    // reverse-lex tiebreak: scan from the smallest variable; the monomial
    // with the smaller exponent at the first difference is the larger one
    for (size_t i = e.a.size(); i-- > 0;)
        if (e.a[i] != e.b[i]) return e.b[i] <=> e.a[i];
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    AlignedExps e = align(a, b, ranking_);
    switch (tag_) {
        case OrderTag::lex:
            return lex_compare(e);
        case OrderTag::degrevlex:
            return degrevlex_compare(a, b, e);
        case OrderTag::weighted_degrevlex:
            if (a.weight() != b.weight()) return a.weight() <=> b.weight();
            return degrevlex_compare(a, b, e);
    }
    throw std::logic_error("MonomialOrder: bad tag");
}

std::string MonomialOrder::name() const {
    switch (tag_) {
        case OrderTag::lex: return "lex";
        case OrderTag::degrevlex: return "degrevlex";
        case OrderTag::weighted_degrevlex: return "wdegrevlex";
    }
    return "?";
}

MonomialOrder MonomialOrder::from_name(const std::string& name) {
    if (name == "lex") return lex();
    if (name == "degrevlex") return degrevlex();
    if (name == "wdegrevlex" || name == "weighted-degrevlex") return weighted_degrevlex();
    throw std::invalid_argument("unsupported monomial order: " + name);
}

}  // namespace jetvpa
