#pragma once

#include <atomic>
#include <thread>

#include "zonal/cosets.hpp"
#include "zonal/hypergeom.hpp"
#include "zonal/report.hpp"

namespace zonal {

// Exact value table of the zonal spherical functions of (G(r,d,n), S_n):
// one row per spherical index, one column per double coset.
struct SphericalTable {
    GroupParams params;
    std::vector<SphericalIndex> rows;
    std::vector<CosetIndex> cols;
    std::vector<std::vector<CyclotomicNumber>> values;
    std::vector<Integer> dims;
    std::vector<Rational> weights;

    long col_of(const CosetIndex& idx) const {
        for (size_t j = 0; j < cols.size(); ++j)
            if (cols[j] == idx) return static_cast<long>(j);
        throw std::invalid_argument("SphericalTable: unknown coset index " + idx.to_string());
    }

    long identity_col() const { return col_of(identity_coset(params)); }
};

// omega^k(l) = F(-l_tail, -k_tail, -n, character matrix); the 0-th entries
// of both tuples drop out.  Restriction to d > 1 only shrinks the admissible
// index sets, the formula is unchanged.
inline CyclotomicNumber spherical_value(const SphericalIndex& k, const CosetIndex& l,
                                        const GroupParams& params) {
    if (static_cast<long>(k.rep.size()) != params.r || !is_valid_coset(l, params))
        throw std::invalid_argument("spherical_value: invalid indices");
    long ksum = 0;
    for (int v : k.rep) ksum += v;
    if (ksum != params.n) throw std::invalid_argument("spherical_value: invalid indices");
    if (params.r == 1) return CyclotomicNumber::one(1);

    HypergeomSpec spec;
    spec.alpha.reserve(params.r - 1);
    spec.beta.reserve(params.r - 1);
    for (long i = 1; i < params.r; ++i) {
        spec.alpha.push_back(-l.counts[i]);
        spec.beta.push_back(-k.rep[i]);
    }
    spec.gamma = -params.n;
    spec.matrix = character_matrix(params.r).entries;
    return evaluate(spec);
}

// dim W^k = multinomial(n; k) / |Gamma_k|; non-divisibility would mean the
// orbit bookkeeping is broken, so it is a hard internal error.
inline Integer dimension(const SphericalIndex& k, const GroupParams& params) {
    Integer m = multinomial(params.n, k.rep);
    if (m % k.stabilizer_order != 0)
        throw std::logic_error("dimension: multinomial not divisible by stabilizer order");
    return m / k.stabilizer_order;
}

inline SphericalTable spherical_table(const GroupParams& params, long jobs = 1) {
    SphericalTable table{params, enumerate_spherical_indices(params), enumerate_double_cosets(params),
                         {},     {},                                  {}};
    const size_t n_rows = table.rows.size(), n_cols = table.cols.size();
    table.values.assign(n_rows, std::vector<CyclotomicNumber>(n_cols));
    table.dims.reserve(n_rows);
    table.weights.reserve(n_cols);
    for (const auto& k : table.rows) table.dims.push_back(dimension(k, params));
    for (const auto& l : table.cols) table.weights.push_back(coset_weight(l, params));

    auto fill_row = [&](size_t i) {
        for (size_t j = 0; j < n_cols; ++j)
            table.values[i][j] = spherical_value(table.rows[i], table.cols[j], params);
    };
    if (jobs <= 1 || n_rows < 2) {
        for (size_t i = 0; i < n_rows; ++i) fill_row(i);
    } else {
        // cells are independent pure computations; assembly into the
        // preallocated matrix is deterministic regardless of scheduling
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < n_rows; i = next.fetch_add(1)) fill_row(i);
        };
        std::vector<std::thread> pool;
        for (long t = 0; t < std::min<long>(jobs, static_cast<long>(n_rows)); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return table;
}

// Checks sum_l weight(l) * w^k(l) * conj(w^k'(l)) against both closed forms
// of the right-hand side: delta_{kk'} / dim(W^k) and the indicator form
// |Gamma_k| / multinomial(n; k).  The two must also agree with each other.
inline VerificationReport verify_orthogonality(const SphericalTable& table) {
    VerificationReport report;
    report.suite = "orthogonality";
    report.params = table.params;
    ReportTimer timer(report);

    for (size_t i = 0; i < table.rows.size(); ++i) {
        for (size_t j = 0; j < table.rows.size(); ++j) {
            const bool diagonal = i == j;
            Rational inv_dim = diagonal ? make_rational(1, table.dims[i]) : Rational(0);
            Rational indicator_form =
                diagonal ? make_rational(table.rows[i].stabilizer_order, multinomial(table.params.n, table.rows[i].rep))
                         : Rational(0);

            CyclotomicNumber sum = CyclotomicNumber::zero(table.params.r == 1 ? 1 : table.params.r);
            for (size_t l = 0; l < table.cols.size(); ++l)
                sum += table.values[i][l] * conjugate(table.values[j][l]) * table.weights[l];

            std::string name = "orthogonality " + table.rows[i].to_string() + " x " + table.rows[j].to_string();
            if (inv_dim != indicator_form) {
                report.add(name, false, "normalizations disagree: 1/dim = " + to_string(inv_dim) +
                                            ", |Gamma_k|/multinomial = " + to_string(indicator_form));
                continue;
            }
            auto expected = CyclotomicNumber::from_rational(sum.order(), inv_dim);
            if (sum == expected) {
                report.add(name, true);
            } else {
                report.add(name, false,
                           "got " + sum.to_string() + ", expected " + expected.to_string() +
                               ", discrepancy " + (sum - expected).to_string());
            }
        }
    }
    return report;
}

}  // namespace zonal
