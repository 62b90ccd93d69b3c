#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "zonal/indices.hpp"
#include "zonal/wreath.hpp"

namespace zonal {

namespace detail {

// Visits all r-tuples with entry sum n, ascending in the tail ordering of
// indices.hpp (entry 0 absorbs the remainder).
template <class Visitor>
void for_each_weight_tuple(long r, long n, Visitor&& visit) {
    std::vector<int> tuple(r, 0);
    std::function<void(long, long)> rec = [&](long pos, long used) {
        if (pos == r) {
            tuple[0] = static_cast<int>(n - used);
            visit(const_cast<const std::vector<int>&>(tuple));
            return;
        }
        for (long v = 0; v <= n - used; ++v) {
            tuple[pos] = static_cast<int>(v);
            rec(pos + 1, used + v);
        }
        tuple[pos] = 0;
    };
    rec(r == 1 ? r : 1, 0);
}

}  // namespace detail

inline CosetIndex identity_coset(const GroupParams& params) {
    CosetIndex idx;
    idx.counts.assign(params.r, 0);
    idx.counts[0] = static_cast<int>(params.n);
    return idx;
}

inline bool is_valid_coset(const CosetIndex& idx, const GroupParams& params) {
    if (static_cast<long>(idx.counts.size()) != params.r) return false;
    for (int c : idx.counts)
        if (c < 0) return false;
    return idx.degree() == params.n && idx.weighted_sum() % params.d == 0;
}

// All (l_0,...,l_{r-1}) with sum n and sum i*l_i = 0 mod d, ordered by tail.
inline std::vector<CosetIndex> enumerate_double_cosets(const GroupParams& params) {
    std::vector<CosetIndex> out;
    detail::for_each_weight_tuple(params.r, params.n, [&](const std::vector<int>& t) {
        CosetIndex idx{t};
        if (idx.weighted_sum() % params.d == 0) out.push_back(std::move(idx));
    });
    return out;
}

// |S_n x S_n| = n! * multinomial(n; l): the coset contains multinomial(n; l)
// left cosets of n! elements each.
inline Integer double_coset_size(const CosetIndex& idx, const GroupParams& params) {
    if (!is_valid_coset(idx, params)) throw std::invalid_argument("double_coset_size: invalid coset index");
    return factorial(params.n) * multinomial(params.n, idx.counts);
}

// |D_l| / |G| = d * multinomial(n; l) / r^n
inline Rational coset_weight(const CosetIndex& idx, const GroupParams& params) {
    return Rational(Integer(params.d) * multinomial(params.n, idx.counts), pow(Integer(params.r), static_cast<unsigned>(params.n)));
}

// Gamma = <(0 1 ... r-1)^p> acts on positions; translate_weights applies the
// j-th generator power, sending the entry at position i to position i + j*p.
inline std::vector<int> translate_weights(const std::vector<int>& tuple, long j, const GroupParams& params) {
    const long r = params.r;
    std::vector<int> out(r);
    long shift = ((j * params.p()) % r + r) % r;
    for (long i = 0; i < r; ++i) out[i] = tuple[(i - shift + r) % r];
    return out;
}

// Canonical representative (minimal tail over the Gamma-orbit) and the
// stabilizer order of a weight tuple.
inline SphericalIndex canonical_spherical_index(const std::vector<int>& tuple, const GroupParams& params) {
    if (static_cast<long>(tuple.size()) != params.r)
        throw std::invalid_argument("canonical_spherical_index: tuple length must equal r");
    long sum = 0;
    for (int t : tuple) {
        if (t < 0) throw std::invalid_argument("canonical_spherical_index: negative entry");
        sum += t;
    }
    if (sum != params.n) throw std::invalid_argument("canonical_spherical_index: entries must sum to n");
    SphericalIndex best{tuple, 1};
    int stabilizer = 0;
    for (long j = 0; j < params.d; ++j) {
        auto image = translate_weights(tuple, j, params);
        if (image == tuple) ++stabilizer;
        if (detail::reduced_compare(image, best.rep) < 0) best.rep = std::move(image);
    }
    best.stabilizer_order = stabilizer;
    return best;
}

inline long orbit_size(const SphericalIndex& idx, const GroupParams& params) {
    return params.d / idx.stabilizer_order;
}

// One canonical representative per Gamma-orbit of weight tuples, ordered by
// tail.
inline std::vector<SphericalIndex> enumerate_spherical_indices(const GroupParams& params) {
    std::vector<SphericalIndex> out;
    detail::for_each_weight_tuple(params.r, params.n, [&](const std::vector<int>& t) {
        auto canon = canonical_spherical_index(t, params);
        if (canon.rep == t) out.push_back(std::move(canon));
    });
    return out;
}

// Number of (a_1,...,a_n) in (Z/r)^n with sum a_i * l_i = 0 mod r:
// gcd(r, l_1, ..., l_n) * r^{n-1}.
inline Integer count_congruence_tuples(long r, std::span<const int> lengths) {
    if (r < 1) throw std::invalid_argument("count_congruence_tuples: modulus must be positive");
    if (lengths.empty()) return 1;
    Integer count = gcd_of(r, lengths);
    for (size_t i = 1; i < lengths.size(); ++i) count *= r;
    return count;
}

inline Integer count_congruence_tuples(long r, const std::vector<int>& lengths) {
    return count_congruence_tuples(r, std::span<const int>(lengths));
}

// The two Burnside orbit counts |H\K/H| and |H\G/((G/K)H)| computed by
// literally averaging fixed points of S_n over the two coset spaces.  Both
// must equal the number of spherical indices.
inline std::pair<long, long> burnside_counts(const GroupParams& params, long long budget) {
    Integer order = params.order();
    if (order > budget)
        throw BudgetExceeded("burnside_counts: order exceeds budget", static_cast<long long>(order));

    const long r = params.r;
    const long n = params.n;
    const long p = params.p();

    // Y: left cosets of S_n in G(r,d,n), i.e. exponent tuples with sum 0 mod d.
    // X: left cosets of (G/K)H in G(r,1,n), i.e. exponent tuples up to adding a
    // constant multiple of p; canonical representatives have first entry < p.
    std::vector<std::vector<int>> y_space, x_space;
    std::vector<int> tuple(n, 0);
    while (true) {
        long sum = 0;
        for (int a : tuple) sum += a;
        if (sum % params.d == 0) y_space.push_back(tuple);
        if (tuple[0] < p) x_space.push_back(tuple);
        long i = n - 1;
        while (i >= 0 && tuple[i] == r - 1) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }

    auto x_canonical = [&](std::vector<int> t) {
        int shift = static_cast<int>((t[0] / p) * p);
        for (auto& a : t) a = static_cast<int>((a - shift + r) % r);
        return t;
    };

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer y_fixed_total = 0, x_fixed_total = 0;
    std::vector<int> image(n);
    do {
        for (const auto& y : y_space) {
            bool fixed = true;
            for (long i = 0; i < n && fixed; ++i) fixed = y[perm[i]] == y[i];
            if (fixed) ++y_fixed_total;
        }
        for (const auto& x : x_space) {
            for (long i = 0; i < n; ++i) image[perm[i]] = x[i];
            if (x_canonical(image) == x) ++x_fixed_total;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Integer nf = factorial(n);
    if (y_fixed_total % nf != 0 || x_fixed_total % nf != 0)
        throw std::logic_error("burnside_counts: fixed-point totals not divisible by n!");
    return {static_cast<long>(y_fixed_total / nf), static_cast<long>(x_fixed_total / nf)};
}

}  // namespace zonal
