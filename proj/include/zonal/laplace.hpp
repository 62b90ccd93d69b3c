#pragma once

#include <map>

#include "zonal/spherical.hpp"

namespace zonal {

// Matrix of the distance-k summation operator on bi-invariant functions:
// entry (l, l') counts left cosets at Hamming distance k from a fixed
// representative of l whose double coset is l'.
struct BiInvariantOperator {
    GroupParams params;
    long k;
    std::vector<CosetIndex> cosets;
    std::vector<std::vector<long long>> matrix;
};

// Hamming distance between the canonical sigma = id representatives of two
// left cosets; each left coset has exactly one such representative, so no
// minimization is involved.
inline long hamming_distance(const GroupElement& x, const GroupElement& y) {
    if (x.r != y.r || x.n() != y.n())
        throw std::invalid_argument("hamming_distance: mismatched parameters");
    long dist = 0;
    for (long i = 0; i < x.n(); ++i)
        if (x.exponents[i] != y.exponents[i]) ++dist;
    return dist;
}

namespace detail {

// canonical exponent tuple of the double-coset representative: counts[0]
// zeros, then counts[1] ones, ...
inline std::vector<int> representative_tuple(const CosetIndex& idx) {
    std::vector<int> x;
    for (size_t v = 0; v < idx.counts.size(); ++v) x.insert(x.end(), idx.counts[v], static_cast<int>(v));
    return x;
}

}  // namespace detail

// Literal construction: enumerate the left cosets of S_n (exponent tuples
// with sum 0 mod d), take one representative per double coset, and classify
// every tuple at distance k from it.
inline BiInvariantOperator build_operator(const GroupParams& params, long k, long long budget) {
    Integer coset_count = pow(Integer(params.r), static_cast<unsigned>(params.n)) / params.d;
    if (coset_count > budget)
        throw BudgetExceeded("build_operator: left-coset count exceeds budget",
                             static_cast<long long>(coset_count));

    BiInvariantOperator op{params, k, enumerate_double_cosets(params), {}};
    const size_t s = op.cosets.size();
    op.matrix.assign(s, std::vector<long long>(s, 0));
    std::map<CosetIndex, size_t> col;
    for (size_t j = 0; j < s; ++j) col[op.cosets[j]] = j;

    for (size_t row = 0; row < s; ++row) {
        auto x = detail::representative_tuple(op.cosets[row]);
        std::vector<int> y(params.n, 0);
        auto scan = [&](auto&& self, long pos, long sum) -> void {
            if (pos == params.n) {
                if (sum % params.d != 0) return;
                long dist = 0;
                for (long i = 0; i < params.n; ++i)
                    if (x[i] != y[i]) ++dist;
                if (dist != k) return;
                CosetIndex sig;
                sig.counts.assign(params.r, 0);
                for (int v : y) ++sig.counts[v];
                ++op.matrix[row][col.at(sig)];
                return;
            }
            for (int v = 0; v < params.r; ++v) {
                y[pos] = v;
                self(self, pos + 1, sum + v);
            }
        };
        scan(scan, 0, 0);
    }
    return op;
}

// Analytic nearest-neighbour matrix for G(r,1,n): moving one of the l_i
// coordinates carrying value i to value j sends l to l - e_i + e_j with
// multiplicity l_i.
inline BiInvariantOperator laplace_recurrence_matrix(const GroupParams& params) {
    if (params.d != 1)
        throw std::invalid_argument("laplace_recurrence_matrix: closed form only applies to d = 1");
    BiInvariantOperator op{params, 1, enumerate_double_cosets(params), {}};
    const size_t s = op.cosets.size();
    op.matrix.assign(s, std::vector<long long>(s, 0));
    std::map<CosetIndex, size_t> col;
    for (size_t j = 0; j < s; ++j) col[op.cosets[j]] = j;

    for (size_t row = 0; row < s; ++row) {
        const auto& l = op.cosets[row].counts;
        for (long i = 0; i < params.r; ++i) {
            if (l[i] == 0) continue;
            for (long j = 0; j < params.r; ++j) {
                if (j == i) continue;
                CosetIndex moved = op.cosets[row];
                moved.counts[i] -= 1;
                moved.counts[j] += 1;
                op.matrix[row][col.at(moved)] += l[i];
            }
        }
    }
    return op;
}

// Applies the operator to each table row and checks it is an exact
// eigenvector with eigenvalue sum_{l'} entry(identity, l') w(l').  Rows
// sharing an eigenvalue are reported as a note, not a failure.
inline VerificationReport verify_eigenfunction(const SphericalTable& table, const BiInvariantOperator& op) {
    if (!(table.params == op.params) || !(table.cols == op.cosets))
        throw std::invalid_argument("verify_eigenfunction: table and operator disagree");
    VerificationReport report;
    report.suite = "laplace";
    report.params = table.params;
    ReportTimer timer(report);

    const size_t s = table.cols.size();
    size_t identity_row = static_cast<size_t>(table.identity_col());
    std::vector<CyclotomicNumber> lambdas;
    for (size_t i = 0; i < table.rows.size(); ++i) {
        const long order = table.values[i][0].order();
        CyclotomicNumber lambda = CyclotomicNumber::zero(order);
        for (size_t j = 0; j < s; ++j)
            lambda += table.values[i][j] * Rational(op.matrix[identity_row][j]);
        lambdas.push_back(lambda);

        bool row_ok = true;
        std::string witness = "lambda = " + lambda.to_string();
        for (size_t a = 0; a < s && row_ok; ++a) {
            CyclotomicNumber applied = CyclotomicNumber::zero(order);
            for (size_t j = 0; j < s; ++j) applied += table.values[i][j] * Rational(op.matrix[a][j]);
            if (applied != lambda * table.values[i][a]) {
                row_ok = false;
                witness += "; mismatch at coset " + table.cols[a].to_string() + ": got " +
                           applied.to_string() + ", expected " + (lambda * table.values[i][a]).to_string();
            }
        }
        report.add("eigenvector " + table.rows[i].to_string() + " of Delta_" + std::to_string(op.k),
                   row_ok, witness);
    }

    std::vector<bool> seen(lambdas.size(), false);
    for (size_t i = 0; i < lambdas.size(); ++i) {
        if (seen[i]) continue;
        std::string sharers;
        for (size_t j = i + 1; j < lambdas.size(); ++j) {
            if (lambdas[j] == lambdas[i]) {
                seen[j] = true;
                sharers += (sharers.empty() ? "" : ", ") + table.rows[j].to_string();
            }
        }
        if (!sharers.empty())
            report.add("shared eigenvalue " + lambdas[i].to_string(), true,
                       table.rows[i].to_string() + " with " + sharers);
    }
    return report;
}

// Closed form n(r-1) - r * sum_i k_i for the Delta_1 eigenvalue on G(r,1,n).
inline long closed_form_eigenvalue(const SphericalIndex& k, const GroupParams& params) {
    if (params.d != 1)
        throw std::invalid_argument("closed_form_eigenvalue: closed form only applies to d = 1");
    long tail = 0;
    for (size_t i = 1; i < k.rep.size(); ++i) tail += k.rep[i];
    return params.n * (params.r - 1) - params.r * tail;
}

// Contiguity relation for the hypergeometric values on G(r,1,n):
// lambda_k F(-l) = sum_i l_0 F(-(l+e_i)) + sum_i l_i (F(-(l-e_i)) +
// sum_{j != i} F(-(l-e_i+e_j))), all on the reduced tuples.
inline VerificationReport contiguity_check(const SphericalIndex& k, const CosetIndex& l,
                                           const GroupParams& params) {
    if (params.d != 1) throw std::invalid_argument("contiguity_check: requires d = 1");
    VerificationReport report;
    report.suite = "laplace";
    report.params = params;
    ReportTimer timer(report);

    auto shifted = [&](long from, long to) {
        CosetIndex idx = l;
        idx.counts[from] -= 1;
        idx.counts[to] += 1;
        return idx;
    };

    long lambda = closed_form_eigenvalue(k, params);
    auto lhs = spherical_value(k, l, params) * Rational(lambda);
    auto rhs = CyclotomicNumber::zero(lhs.order());
    for (long i = 1; i < params.r; ++i) {
        if (l.counts[0] > 0) rhs += spherical_value(k, shifted(0, i), params) * Rational(l.counts[0]);
        if (l.counts[i] > 0) {
            rhs += spherical_value(k, shifted(i, 0), params) * Rational(l.counts[i]);
            for (long j = 1; j < params.r; ++j) {
                if (j == i) continue;
                rhs += spherical_value(k, shifted(i, j), params) * Rational(l.counts[i]);
            }
        }
    }
    report.add("contiguity at " + k.to_string() + " | " + l.to_string(), lhs == rhs,
               lhs == rhs ? "" : "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
    return report;
}

// Three-term form of the r = 2 contiguity relation, checked on the rational
// Gauss route: (N-2n) 2F1(-x) = (N-x) 2F1(-x-1) + x 2F1(-x+1).
inline VerificationReport three_term_check(long x, long n, long capital) {
    if (x < 0 || n < 0 || x > capital || n > capital)
        throw std::invalid_argument("three_term_check: need 0 <= x, n <= N");
    VerificationReport report;
    report.suite = "laplace";
    report.scope = "x=" + std::to_string(x) + " n=" + std::to_string(n) + " N=" + std::to_string(capital);
    ReportTimer timer(report);

    auto f = [&](long arg) { return gauss_2f1_terminating(-arg, -n, -capital, Rational(2)); };
    Rational lhs = Rational(capital - 2 * n) * f(x);
    Rational rhs = 0;
    if (capital - x > 0) rhs += Rational(capital - x) * f(x + 1);
    if (x > 0) rhs += Rational(x) * f(x - 1);
    report.add("three-term relation", lhs == rhs,
               lhs == rhs ? "" : "lhs = " + to_string(lhs) + ", rhs = " + to_string(rhs));
    return report;
}

}  // namespace zonal
