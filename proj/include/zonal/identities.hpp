#pragma once

#include <map>

#include "zonal/spherical.hpp"

namespace zonal {

// One merged summand of the linearization w^k(l) w^k(l') = sum c_t w^k(t).
struct LinearizationTerm {
    CosetIndex coset;
    Rational coefficient;

    friend bool operator==(const LinearizationTerm& a, const LinearizationTerm& b) {
        return a.coset == b.coset && a.coefficient == b.coefficient;
    }
};

// Visits every r x r nonnegative-integer matrix with row sums `rows` and
// column sums `cols` (a contingency table), row by row.
template <class Visitor>
void for_each_transport_matrix(const std::vector<int>& rows, const std::vector<int>& cols, Visitor&& visit) {
    const long r = static_cast<long>(rows.size());
    if (cols.size() != rows.size()) throw std::invalid_argument("transport matrices: size mismatch");
    std::vector<std::vector<int>> matrix(r, std::vector<int>(r, 0));
    std::vector<int> col_left = cols;

    std::function<void(long, long, long)> rec = [&](long i, long j, long row_left) {
        if (i == r) {
            for (int c : col_left)
                if (c != 0) return;
            visit(const_cast<const std::vector<std::vector<int>>&>(matrix));
            return;
        }
        if (j == r - 1) {
            if (row_left > col_left[j]) return;
            matrix[i][j] = static_cast<int>(row_left);
            col_left[j] -= static_cast<int>(row_left);
            rec(i + 1, 0, i + 1 < r ? rows[i + 1] : 0);
            col_left[j] += static_cast<int>(row_left);
            matrix[i][j] = 0;
            return;
        }
        long cap = std::min<long>(row_left, col_left[j]);
        for (long v = 0; v <= cap; ++v) {
            matrix[i][j] = static_cast<int>(v);
            col_left[j] -= static_cast<int>(v);
            rec(i, j + 1, row_left - v);
            col_left[j] += static_cast<int>(v);
        }
        matrix[i][j] = 0;
    };
    rec(0, 0, r > 0 ? rows[0] : 0);
}

// Expands the double-coset product: each transport matrix A with row sums l
// and column sums l' contributes multinomial(n; l')^{-1} prod_i
// multinomial(l_i; a_i*) to the coset with counts sum_i a_{i,(m-i) mod r}.
// Matrices landing on the same coset are merged.
inline std::vector<LinearizationTerm> product_expand(const CosetIndex& l, const CosetIndex& l_prime,
                                                     const GroupParams& params) {
    if (!is_valid_coset(l, params) || !is_valid_coset(l_prime, params))
        throw std::invalid_argument("product_expand: invalid coset indices");
    const long r = params.r;

    std::map<CosetIndex, Integer> merged;
    for_each_transport_matrix(l.counts, l_prime.counts, [&](const std::vector<std::vector<int>>& a) {
        CosetIndex target;
        target.counts.assign(r, 0);
        Integer weight = 1;
        for (long i = 0; i < r; ++i) {
            for (long j = 0; j < r; ++j) target.counts[(i + j) % r] += a[i][j];
            weight *= multinomial(l.counts[i], a[i]);
        }
        // the subgroup is closed under multiplication, so every target must
        // again satisfy the mod-d constraint
        if (!is_valid_coset(target, params))
            throw std::logic_error("product_expand: target coset escapes the subgroup");
        merged[target] += weight;
    });

    Integer norm = multinomial(params.n, l_prime.counts);
    std::vector<LinearizationTerm> out;
    out.reserve(merged.size());
    for (auto& [coset, weight] : merged) out.push_back({coset, make_rational(weight, norm)});
    return out;
}

// Exact check of w^k(l) w^k(l') = sum_t c_t w^k(t), plus the probability
// normalization of the coefficients.
inline VerificationReport verify_product_formula(const SphericalIndex& k, const CosetIndex& l,
                                                 const CosetIndex& l_prime, const GroupParams& params) {
    VerificationReport report;
    report.suite = "product";
    report.params = params;
    ReportTimer timer(report);

    auto terms = product_expand(l, l_prime, params);
    std::string label = k.to_string() + " | " + l.to_string() + " x " + l_prime.to_string();

    Rational coefficient_sum = 0;
    for (const auto& t : terms) coefficient_sum += t.coefficient;
    report.add("coefficients sum to 1 at " + label, coefficient_sum == 1,
               coefficient_sum == 1 ? "" : "sum = " + to_string(coefficient_sum));

    auto lhs = spherical_value(k, l, params) * spherical_value(k, l_prime, params);
    auto rhs = CyclotomicNumber::zero(lhs.order());
    for (const auto& t : terms) rhs += spherical_value(k, t.coset, params) * t.coefficient;
    report.add("linearization at " + label, lhs == rhs,
               lhs == rhs ? "" : "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string() +
                                     ", discrepancy " + (lhs - rhs).to_string());
    return report;
}

// Krawtchouk polynomial K_n(x; 1/2, N) = 2F1(-x, -n; -N; 2).
inline Rational krawtchouk(long x, long n, long capital) {
    return gauss_2f1_terminating(-x, -n, -capital, Rational(2));
}

// The p = 1/2 Dunkl/Rahman product identity
//   K_n(x) K_n(y) = sum_s C(x,s) (y-N)_s (-y)_{x-s} / (-N)_x K_n(2s+y-x)
// checked exactly, together with the route through product_expand on the
// hyperoctahedral group; the two expansions must produce the same value.
inline VerificationReport rahman_identity_check(long x, long y, long n, long capital) {
    if (capital < 1 || x < 0 || y < 0 || n < 0 || x > capital || y > capital || n > capital)
        throw std::invalid_argument("rahman_identity_check: need 0 <= x, y, n <= N");
    VerificationReport report;
    report.suite = "rahman";
    report.scope = "x=" + std::to_string(x) + " y=" + std::to_string(y) + " n=" + std::to_string(n) +
                   " N=" + std::to_string(capital);
    ReportTimer timer(report);

    Rational lhs = krawtchouk(x, n, capital) * krawtchouk(y, n, capital);

    Rational rahman = 0;
    for (long s = 0; s <= x; ++s) {
        Integer num = binomial(x, s) * pochhammer(y - capital, s) * pochhammer(-y, x - s);
        if (num == 0) continue;
        rahman += make_rational(num, pochhammer(-capital, x)) * krawtchouk(2 * s + y - x, n, capital);
    }
    report.add("rahman sum", lhs == rahman,
               lhs == rahman ? "" : "lhs = " + to_string(lhs) + ", rahman = " + to_string(rahman));

    GroupParams params(2, 1, capital);
    CosetIndex lx{{static_cast<int>(capital - x), static_cast<int>(x)}};
    CosetIndex ly{{static_cast<int>(capital - y), static_cast<int>(y)}};
    Rational expanded = 0;
    for (const auto& t : product_expand(lx, ly, params))
        expanded += t.coefficient * krawtchouk(t.coset.counts[1], n, capital);
    report.add("product expansion route", lhs == expanded,
               lhs == expanded ? "" : "lhs = " + to_string(lhs) + ", expanded = " + to_string(expanded));
    return report;
}

}  // namespace zonal
