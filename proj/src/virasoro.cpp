#include "jetvpa/virasoro.hpp"

#include <numeric>
#include <stdexcept>

namespace jetvpa {

Scalar minimal_central_charge(int p, int q) {
    if (p < 2 || q < 2)
        throw std::invalid_argument("minimal_central_charge: p, q must be >= 2");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("minimal_central_charge: p, q must be coprime");
    long diff = static_cast<long>(p) - q;
    return Scalar(1) - make_scalar(6 * diff * diff, static_cast<long>(p) * q);
}

VirasoroParams minimal_params(int p, int q) {
    return VirasoroParams{minimal_central_charge(p, q), std::make_pair(p, q)};
}

namespace {

void partitions_rec(int n, int min_part, int max_part, Partition& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (int part = std::min(n, max_part); part >= min_part; --part) {
        acc.push_back(part);
        partitions_rec(n - part, min_part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n, int min_part) {
    std::vector<Partition> out;
    Partition acc;
    partitions_rec(n, min_part, n, acc, out);
    return out;
}

std::vector<std::vector<Partition>> vacuum_basis(int N) {
    std::vector<std::vector<Partition>> out;
    for (int level = 0; level <= N; ++level) out.push_back(partitions(level, 2));
    return out;
}

VirasoroModule::VirasoroModule(VirasoroParams params, Scalar h, bool vacuum, int cutoff)
    : params_(std::move(params)), h_(std::move(h)), vacuum_(vacuum), cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("VirasoroModule: cutoff must be >= 0");
}

VirasoroModule VirasoroModule::vacuum(VirasoroParams params, int cutoff) {
    return VirasoroModule(std::move(params), Scalar(0), true, cutoff);
}

VirasoroModule VirasoroModule::highest_weight(VirasoroParams params, Scalar h, int cutoff) {
    return VirasoroModule(std::move(params), std::move(h), false, cutoff);
}

const std::vector<Partition>& VirasoroModule::level_basis(int level) const {
    auto it = basis_cache_.find(level);
    if (it == basis_cache_.end())
        it = basis_cache_.emplace(level, partitions(level, vacuum_ ? 2 : 1)).first;
    return it->second;
}

namespace {

void accumulate(VirasoroModule::State& state, const Partition& word, const Scalar& coeff) {
    if (coeff == 0) return;
    auto it = state.find(word);
    if (it == state.end()) {
        state.emplace(word, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) state.erase(it);
    }
}

void accumulate(VirasoroModule::State& state, const VirasoroModule::State& other,
                const Scalar& factor) {
    for (const auto& [word, coeff] : other) accumulate(state, word, coeff * factor);
}

long word_level(const Partition& word) {
    long lvl = 0;
    for (int part : word) lvl += part;
    return lvl;
}

}  // namespace

// Normal ordering terminates: each recursion either shortens the word or
// inserts into a word all of whose parts are <= j already.
VirasoroModule::State VirasoroModule::lower(int j, const Partition& word) const {
    State out;
    if (word.empty() || j >= word.front()) {
        if (vacuum_ && j == 1 && word.empty()) return out;  // L_{-1} vac = 0
        Partition fresh;
        fresh.reserve(word.size() + 1);
        fresh.push_back(j);
        fresh.insert(fresh.end(), word.begin(), word.end());
        accumulate(out, fresh, Scalar(1));
        return out;
    }
    const int n1 = word.front();
    const Partition tail(word.begin() + 1, word.end());
    // L_{-j} L_{-n1} = L_{-n1} L_{-j} + (n1 - j) L_{-(j+n1)}
    for (const auto& [w, coeff] : lower(j, tail))
        accumulate(out, lower(n1, w), coeff);
    accumulate(out, lower(j + n1, tail), Scalar(n1 - j));
    return out;
}

VirasoroModule::State VirasoroModule::raise(int m, const Partition& word) const {
    State out;
    if (word.empty()) return out;  // L_m kills the cyclic vector for m >= 1
    const int n1 = word.front();
    const Partition tail(word.begin() + 1, word.end());

    // [L_m, L_{-n1}] = (m + n1) L_{m-n1} + delta_{m,n1} (m^3 - m)/12 c
    if (m == n1) {
        Scalar l0 = Scalar(word_level(tail)) + h_;
        accumulate(out, tail, Scalar(m + n1) * l0);
        Scalar central = make_scalar(static_cast<long>(m) * m * m - m, 12) *
                         params_.central_charge;
        accumulate(out, tail, central);
    } else if (m > n1) {
        accumulate(out, raise(m - n1, tail), Scalar(m + n1));
    } else {
        accumulate(out, lower(n1 - m, tail), Scalar(m + n1));
    }
    // pass-through term L_{-n1} (L_m tail)
    for (const auto& [w, coeff] : raise(m, tail))
        accumulate(out, lower(n1, w), coeff);
    return out;
}

Scalar VirasoroModule::pair_with_vacuum_side(const Partition& bra, const Partition& ket) const {
    State state;
    state.emplace(ket, Scalar(1));
    for (int part : bra) {
        State next;
        for (const auto& [w, coeff] : state) accumulate(next, raise(part, w), coeff);
        state = std::move(next);
        if (state.empty()) return Scalar(0);
    }
    auto it = state.find(Partition{});
    return it == state.end() ? Scalar(0) : it->second;
}

const QMatrix& VirasoroModule::gram_matrix(int level) const {
    if (level > cutoff_) throw std::invalid_argument("gram_matrix: level beyond cutoff");
    auto it = gram_cache_.find(level);
    if (it != gram_cache_.end()) return it->second;

    const auto& basis = level_basis(level);
    const size_t n = basis.size();
    QMatrix g(n, QVector(n, Scalar(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Scalar value = pair_with_vacuum_side(basis[i], basis[j]);
            g[i][j] = value;
            g[j][i] = value;
        }
    return gram_cache_.emplace(level, std::move(g)).first->second;
}

Scalar VirasoroModule::gram_determinant(int level) const {
    return determinant(gram_matrix(level));
}

std::vector<SingularLevel> singular_levels(const VirasoroModule& module) {
    std::vector<SingularLevel> out;
    for (int level = 0; level <= module.cutoff(); ++level) {
        const QMatrix& g = module.gram_matrix(level);
        if (g.empty()) continue;
        auto kernel = kernel_basis(g, static_cast<int>(g.size()));
        if (!kernel.empty()) out.push_back(SingularLevel{level, std::move(kernel)});
    }
    return out;
}

GroebnerBasis c2_image(const VirasoroModule& module) {
    const VarId x = base_var(1);
    std::vector<Polynomial> images;
    for (const SingularLevel& sl : singular_levels(module)) {
        const auto& basis = module.level_basis(sl.level);
        // only an even level has the pure L_{-2}^k state
        Partition pure;
        if (sl.level % 2 == 0) pure.assign(sl.level / 2, 2);
        for (const QVector& vec : sl.kernel) {
            Polynomial image;
            if (!pure.empty() || sl.level == 0) {
                for (size_t i = 0; i < basis.size(); ++i) {
                    if (basis[i] == pure && vec[i] != 0)
                        image = Polynomial::term(Monomial::variable(x, sl.level / 2), vec[i]);
                }
            }
            if (!image.is_zero()) images.push_back(image);
        }
    }
    return buchberger(images, MonomialOrder::weighted_degrevlex(), {x});
}

}  // namespace jetvpa
