#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "zonal/cyclotomic.hpp"
#include "zonal/rational.hpp"

namespace zonal {

// Rising factorial x(x+1)...(x+m-1), with (x)_0 = 1.
inline Integer pochhammer(long x, long m) {
    if (m < 0) throw std::invalid_argument("pochhammer: negative length");
    Integer acc = 1;
    for (long i = 0; i < m; ++i) acc *= (x + i);
    return acc;
}

// Terminating multivariate hypergeometric data: alpha and beta are tuples of
// nonpositive integers, gamma a negative integer, and the series runs over
// square nonnegative-integer matrices with total entry sum <= -gamma.
struct HypergeomSpec {
    std::vector<long> alpha;
    std::vector<long> beta;
    long gamma;
    std::vector<std::vector<CyclotomicNumber>> matrix;

    void validate() const {
        if (gamma >= 0) throw std::invalid_argument("HypergeomSpec: gamma must be a negative integer");
        if (alpha.size() != beta.size())
            throw std::invalid_argument("HypergeomSpec: alpha and beta must have equal length");
        if (matrix.size() != alpha.size())
            throw std::invalid_argument("HypergeomSpec: matrix side must equal |alpha|");
        for (const auto& row : matrix)
            if (row.size() != matrix.size()) throw std::invalid_argument("HypergeomSpec: matrix must be square");
        for (long a : alpha)
            if (a > 0) throw std::invalid_argument("HypergeomSpec: alpha entries must be nonpositive");
        for (long b : beta)
            if (b > 0) throw std::invalid_argument("HypergeomSpec: beta entries must be nonpositive");
        if (matrix.empty()) throw std::invalid_argument("HypergeomSpec: matrix side must be at least 1");
    }
};

// The summand vanishes once a row sum passes -alpha_i or a column sum passes
// -beta_j, so the enumeration caps rows and columns as well as the total;
// the value is identical to the sum bounded by the total alone.  Pochhammer
// and factorial factors are maintained incrementally along the enumeration
// path, and each surviving matrix contributes one rational coefficient times
// a monomial in the matrix entries.
inline CyclotomicNumber evaluate(const HypergeomSpec& spec) {
    spec.validate();
    const long m = static_cast<long>(spec.alpha.size());
    const long order = spec.matrix[0][0].order();
    const long total_cap = -spec.gamma;

    std::vector<long> row_used(m, 0), col_used(m, 0);
    CyclotomicNumber acc = CyclotomicNumber::zero(order);

    // entry e = i*m + j in row-major order
    auto rec = [&](auto&& self, long e, long total_used, const Rational& coeff,
                   const CyclotomicNumber& mono) -> void {
        if (e == m * m) {
            acc += mono * coeff;
            return;
        }
        const long i = e / m, j = e % m;
        self(self, e + 1, total_used, coeff, mono);

        if (spec.matrix[i][j].is_zero()) return;
        long cap = std::min({-spec.alpha[i] - row_used[i], -spec.beta[j] - col_used[j],
                             total_cap - total_used});
        Rational c = coeff;
        CyclotomicNumber x = mono;
        for (long v = 1; v <= cap; ++v) {
            c *= make_rational(Integer(spec.alpha[i] + row_used[i]) * Integer(spec.beta[j] + col_used[j]),
                               Integer(spec.gamma + total_used) * Integer(v));
            x *= spec.matrix[i][j];
            row_used[i] += 1;
            col_used[j] += 1;
            ++total_used;
            self(self, e + 1, total_used, c, x);
        }
        row_used[i] -= cap;
        col_used[j] -= cap;
    };
    rec(rec, 0, 0, Rational(1), CyclotomicNumber::one(order));
    return acc;
}

// Upper bound on the number of matrices evaluate() visits, used for budget
// refusals before starting a long run.
inline Integer evaluate_cost_bound(const std::vector<long>& alpha, const std::vector<long>& beta) {
    const long m = static_cast<long>(alpha.size());
    Integer by_rows = 1, by_cols = 1;
    for (long a : alpha) by_rows *= binomial(-a + m, m);
    for (long b : beta) by_cols *= binomial(-b + m, m);
    return by_rows < by_cols ? by_rows : by_cols;
}

// The (r-1) x (r-1) matrix with entries 1 - zeta_r^{ij}.
struct CharacterMatrix {
    long r;
    std::vector<std::vector<CyclotomicNumber>> entries;
};

inline CharacterMatrix character_matrix(long r) {
    if (r < 2) throw std::invalid_argument("character_matrix: order must be at least 2");
    CharacterMatrix cm;
    cm.r = r;
    cm.entries.assign(r - 1, std::vector<CyclotomicNumber>(r - 1, CyclotomicNumber::zero(r)));
    auto one = CyclotomicNumber::one(r);
    for (long i = 1; i < r; ++i)
        for (long j = 1; j < r; ++j) cm.entries[i - 1][j - 1] = one - cyclo_root(r, i * j);
    return cm;
}

// Terminating Gauss 2F1(a, b; c; z) with nonpositive a, b and negative c.
inline Rational gauss_2f1_terminating(long a, long b, long c, const Rational& z) {
    if (a > 0 || b > 0 || c >= 0)
        throw std::invalid_argument("gauss_2f1_terminating: need a, b <= 0 and c < 0");
    long terms = std::min(-a, -b);
    if (terms > -c)
        throw std::domain_error("gauss_2f1_terminating: denominator Pochhammer vanishes before termination");
    Rational acc = 0, term = 1;
    for (long s = 0; s <= terms; ++s) {
        acc += term;
        if (s < terms)
            term *= make_rational(Integer(a + s) * Integer(b + s), Integer(c + s) * Integer(s + 1)) * z;
    }
    return acc;
}

}  // namespace zonal
