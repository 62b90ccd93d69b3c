#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonal/indices.hpp"
#include "zonal/rational.hpp"

namespace zonal {

// Parameters of the group G(r,d,n): the subgroup of the wreath product
// C_r wr S_n whose exponent sum vanishes mod d, where d | r and p = r/d.
struct GroupParams {
    long r;
    long d;
    long n;

    GroupParams(long r_, long d_, long n_) : r(r_), d(d_), n(n_) {
        if (r < 1 || d < 1 || n < 1) throw std::invalid_argument("GroupParams: r, d, n must be positive");
        if (r % d != 0) throw std::invalid_argument("GroupParams: d must divide r");
    }

    long p() const { return r / d; }

    Integer order() const {
        Integer o = 1;
        for (long i = 0; i < n; ++i) o *= r;
        return o * factorial(n) / d;
    }

    friend bool operator==(const GroupParams& a, const GroupParams& b) {
        return a.r == b.r && a.d == b.d && a.n == b.n;
    }
};

// Element (xi^{a_1}, ..., xi^{a_n}, sigma) of G(r,1,n).  perm is 0-based:
// perm[i] is the image of position i.
struct GroupElement {
    long r;
    std::vector<int> exponents;
    std::vector<int> perm;

    long n() const { return static_cast<long>(exponents.size()); }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.r == b.r && a.exponents == b.exponents && a.perm == b.perm;
    }
    friend auto operator<=>(const GroupElement& a, const GroupElement& b) = default;
};

inline GroupElement identity_element(long r, long n) {
    GroupElement e;
    e.r = r;
    e.exponents.assign(n, 0);
    e.perm.resize(n);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    return e;
}

namespace detail {

inline void require_compatible(const GroupElement& g, const GroupElement& h) {
    if (g.r != h.r || g.exponents.size() != h.exponents.size())
        throw std::invalid_argument("wreath: mismatched group parameters");
}

inline std::vector<int> inverse_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

}  // namespace detail

// Wreath product law: the permutation part of g moves h's exponents before
// they are added, (a, s)(b, t) = (a_i + b_{s^{-1}(i)}, s t).
inline GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    detail::require_compatible(g, h);
    const auto inv = detail::inverse_perm(g.perm);
    GroupElement out;
    out.r = g.r;
    const size_t n = g.exponents.size();
    out.exponents.resize(n);
    out.perm.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.exponents[i] = static_cast<int>((g.exponents[i] + h.exponents[inv[i]]) % g.r);
        out.perm[i] = g.perm[h.perm[i]];
    }
    return out;
}

// (xi^{a_1},...,xi^{a_n},s)^{-1} = (xi^{-a_{s(1)}},...,xi^{-a_{s(n)}},s^{-1})
inline GroupElement inverse(const GroupElement& g) {
    GroupElement out;
    out.r = g.r;
    const size_t n = g.exponents.size();
    out.exponents.resize(n);
    for (size_t i = 0; i < n; ++i) out.exponents[i] = static_cast<int>((g.r - g.exponents[g.perm[i]]) % g.r);
    out.perm = detail::inverse_perm(g.perm);
    return out;
}

// Membership in G(r,d,n): exponent sum divisible by d.
inline bool in_subgroup(const GroupElement& g, const GroupParams& params) {
    if (g.r != params.r || g.n() != params.n)
        throw std::invalid_argument("in_subgroup: element does not match parameters");
    long sum = 0;
    for (int a : g.exponents) sum += a;
    return sum % params.d == 0;
}

// Multiset of exponent values; constant on S_n-double cosets.
inline CosetIndex coset_signature(const GroupElement& g) {
    CosetIndex idx;
    idx.counts.assign(g.r, 0);
    for (int a : g.exponents) ++idx.counts[a];
    return idx;
}

// Visits every element of G(r,d,n) exactly once in lexicographic
// (exponents, permutation) order.  Refuses orders above the budget.
template <class Visitor>
void for_each_element(const GroupParams& params, long long budget, Visitor&& visit) {
    Integer order = params.order();
    if (order > budget)
        throw BudgetExceeded("enumerate_group: order exceeds budget", static_cast<long long>(order));

    std::vector<int> exps(params.n, 0);
    GroupElement g;
    g.r = params.r;
    while (true) {
        long sum = 0;
        for (int a : exps) sum += a;
        if (sum % params.d == 0) {
            g.exponents = exps;
            g.perm.resize(params.n);
            std::iota(g.perm.begin(), g.perm.end(), 0);
            do {
                visit(const_cast<const GroupElement&>(g));
            } while (std::next_permutation(g.perm.begin(), g.perm.end()));
        }
        long i = params.n - 1;
        while (i >= 0 && exps[i] == params.r - 1) exps[i--] = 0;
        if (i < 0) break;
        ++exps[i];
    }
}

inline std::vector<GroupElement> enumerate_group(const GroupParams& params, long long budget) {
    std::vector<GroupElement> out;
    for_each_element(params, budget, [&](const GroupElement& g) { out.push_back(g); });
    return out;
}

// "(a_1,...,a_n | s(1) ... s(n))" with the permutation in one-line notation.
inline std::string to_string(const GroupElement& g) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < g.exponents.size(); ++i) {
        if (i) os << ",";
        os << g.exponents[i];
    }
    os << " | ";
    for (size_t i = 0; i < g.perm.size(); ++i) {
        if (i) os << " ";
        os << g.perm[i] + 1;
    }
    os << ")";
    return os.str();
}

}  // namespace zonal
