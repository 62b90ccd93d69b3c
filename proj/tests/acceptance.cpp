// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every comparison is exact; the only tolerances are the per-criterion
// wall-clock limits enforced below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include "zonal/identities.hpp"
#include "zonal/laplace.hpp"
#include "zonal/oracle.hpp"
#include "zonal/serialize.hpp"

using namespace zonal;

namespace {

constexpr long long kOracleBudget = 10000;

// all (r,d,n) with d | r and group order within the oracle budget; the caps
// on r and n keep the sweep bounded while covering every required case
std::vector<GroupParams> certification_grid() {
    std::vector<GroupParams> grid;
    for (long r = 2; r <= 6; ++r)
        for (long n = 1; n <= 8; ++n)
            for (long d = 1; d <= r; ++d) {
                if (r % d != 0) continue;
                GroupParams params(r, d, n);
                if (params.order() <= kOracleBudget) grid.push_back(params);
            }
    return grid;
}

class TableCache {
   public:
    const SphericalTable& get(const GroupParams& params) {
        auto key = std::tuple(params.r, params.d, params.n);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, spherical_table(params)).first;
        return it->second;
    }

   private:
    std::map<std::tuple<long, long, long>, SphericalTable> cache_;
};

TableCache tables;

bool all_pass(const VerificationReport& report, std::string& detail) {
    const auto* failure = report.first_failure();
    if (failure == nullptr) return true;
    detail = failure->name + (failure->witness.empty() ? "" : " [" + failure->witness + "]");
    return false;
}

// ---- criterion 1 -----------------------------------------------------------

bool dihedral_reproduction(std::string& detail) {
    for (long r = 3; r <= 12; ++r) {
        GroupParams params(r, r, 2);
        const auto& table = tables.get(params);
        for (long i = 0; 2 * i <= r; ++i) {
            std::vector<int> weight(r, 0);
            weight[0] += 1;
            weight[i] += 1;
            auto canon = canonical_spherical_index(weight, params);
            long row = -1;
            for (size_t a = 0; a < table.rows.size(); ++a)
                if (table.rows[a].rep == canon.rep) row = static_cast<long>(a);
            if (row < 0) {
                detail = "missing row e0+e" + std::to_string(i) + " at r=" + std::to_string(r);
                return false;
            }
            for (long k = 0; 2 * k <= r; ++k) {
                CosetIndex l;
                l.counts.assign(r, 0);
                l.counts[k] += 1;
                l.counts[(r - k) % r] += 1;
                auto expected = (cyclo_root(r, i * k) + cyclo_root(r, -i * k)) * Rational(1, 2);
                if (!(table.values[row][table.col_of(l)] == expected)) {
                    detail = "r=" + std::to_string(r) + " i=" + std::to_string(i) +
                             " k=" + std::to_string(k);
                    return false;
                }
            }
        }
    }
    return true;
}

// ---- criterion 2 -----------------------------------------------------------

bool gauss_reproduction(std::string& detail) {
    for (long n = 1; n <= 10; ++n) {
        GroupParams params(2, 2, n);
        const auto& table = tables.get(params);
        if (table.rows.size() != static_cast<size_t>(n / 2 + 1) || table.cols.size() != table.rows.size()) {
            detail = "unexpected table shape at n=" + std::to_string(n);
            return false;
        }
        for (size_t i = 0; i < table.rows.size(); ++i) {
            long k1 = table.rows[i].rep[1];
            for (size_t j = 0; j < table.cols.size(); ++j) {
                long l1 = table.cols[j].counts[1];
                if (l1 % 2 != 0 || k1 > n / 2) {
                    detail = "index constraint violated at n=" + std::to_string(n);
                    return false;
                }
                const auto& value = table.values[i][j];
                if (!value.is_rational() ||
                    value.rational_part() != gauss_2f1_terminating(-l1, -k1, -n, Rational(2))) {
                    detail = "n=" + std::to_string(n) + " k1=" + std::to_string(k1) +
                             " l1=" + std::to_string(l1);
                    return false;
                }
            }
        }
    }
    return true;
}

// ---- criteria 3 and 4 ------------------------------------------------------

bool oracle_certification(std::string& detail) {
    auto grid = certification_grid();
    for (GroupParams listed : {GroupParams(2, 1, 3), GroupParams(2, 2, 3), GroupParams(3, 1, 2),
                               GroupParams(3, 3, 2), GroupParams(4, 2, 2), GroupParams(4, 4, 2),
                               GroupParams(6, 2, 2), GroupParams(2, 1, 4), GroupParams(2, 2, 4)}) {
        if (std::find(grid.begin(), grid.end(), listed) == grid.end()) {
            detail = "grid misses a required parameter set";
            return false;
        }
    }
    for (const auto& params : grid) {
        const auto& table = tables.get(params);
        bool full = params.order() <= 64;  // unreduced quantifier on the tiny groups
        std::string label = " at (" + std::to_string(params.r) + "," + std::to_string(params.d) + "," +
                            std::to_string(params.n) + ")";
        if (!all_pass(certify_spherical_table(table, kOracleBudget, full), detail)) {
            detail += label;
            return false;
        }
        if (!all_pass(convolution_check(table, kOracleBudget, full), detail)) {
            detail += label;
            return false;
        }
    }
    return true;
}

bool orthogonality(std::string& detail) {
    for (const auto& params : certification_grid()) {
        if (!all_pass(verify_orthogonality(tables.get(params)), detail)) {
            detail += " at (" + std::to_string(params.r) + "," + std::to_string(params.d) + "," +
                      std::to_string(params.n) + ")";
            return false;
        }
    }
    return true;
}

// ---- criterion 5 -----------------------------------------------------------

bool product_formula(std::string& detail) {
    std::vector<GroupParams> grid{GroupParams(2, 1, 2), GroupParams(2, 1, 3), GroupParams(2, 1, 4),
                                  GroupParams(2, 1, 5), GroupParams(3, 1, 2), GroupParams(3, 1, 3),
                                  GroupParams(4, 1, 2), GroupParams(2, 2, 4), GroupParams(3, 3, 2)};
    for (const auto& params : grid) {
        auto cosets = enumerate_double_cosets(params);
        for (const auto& k : enumerate_spherical_indices(params))
            for (const auto& l : cosets)
                for (const auto& lp : cosets)
                    if (!all_pass(verify_product_formula(k, l, lp, params), detail)) return false;
    }
    return true;
}

// ---- criterion 6 -----------------------------------------------------------

bool rahman_identity(std::string& detail) {
    for (long capital = 1; capital <= 8; ++capital)
        for (long x = 0; x <= capital; ++x)
            for (long y = 0; y <= capital; ++y)
                for (long n = 0; n <= capital; ++n)
                    if (!all_pass(rahman_identity_check(x, y, n, capital), detail)) return false;
    return true;
}

// ---- criterion 7 -----------------------------------------------------------

bool laplacian(std::string& detail) {
    // brute-force Delta_1 equals the analytic recurrence matrix
    for (long r = 2; r <= 16; ++r) {
        for (long n = 1; n <= 10; ++n) {
            double cosets = std::pow(static_cast<double>(r), static_cast<double>(n));
            if (cosets > 1024) continue;
            GroupParams params(r, 1, n);
            if (!(build_operator(params, 1, 1024).matrix == laplace_recurrence_matrix(params).matrix)) {
                detail = "matrix mismatch at (" + std::to_string(r) + ",1," + std::to_string(n) + ")";
                return false;
            }
        }
    }

    for (const auto& params : certification_grid()) {
        const auto& table = tables.get(params);
        std::string label = " at (" + std::to_string(params.r) + "," + std::to_string(params.d) + "," +
                            std::to_string(params.n) + ")";
        for (long k = 0; k <= params.n; ++k) {
            auto op = build_operator(params, k, kOracleBudget);
            if (!all_pass(verify_eigenfunction(table, op), detail)) {
                detail += label;
                return false;
            }
            if (k == 1 && params.d == 1) {
                size_t identity_row = static_cast<size_t>(table.identity_col());
                for (size_t i = 0; i < table.rows.size(); ++i) {
                    CyclotomicNumber lambda = CyclotomicNumber::zero(table.values[i][0].order());
                    for (size_t j = 0; j < table.cols.size(); ++j)
                        lambda += table.values[i][j] * Rational(op.matrix[identity_row][j]);
                    long expected = closed_form_eigenvalue(table.rows[i], params);
                    if (!(lambda == CyclotomicNumber::from_rational(lambda.order(), Rational(expected)))) {
                        detail = "closed form mismatch for " + table.rows[i].to_string() + label;
                        return false;
                    }
                }
            }
        }
    }

    for (long capital = 1; capital <= 10; ++capital)
        for (long x = 0; x <= capital; ++x)
            for (long n = 0; n <= capital; ++n)
                if (!all_pass(three_term_check(x, n, capital), detail)) return false;
    return true;
}

// ---- criterion 8 -----------------------------------------------------------

bool counting(std::string& detail) {
    for (long r = 1; r <= 20; ++r) {
        std::vector<std::vector<int>> lengths{{}};
        for (long len = 1; len <= 3; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& base : lengths)
                for (int v = 0; v <= r; ++v) {
                    auto t = base;
                    t.push_back(v);
                    next.push_back(std::move(t));
                }
            lengths = std::move(next);
            for (const auto& tuple : lengths) {
                long long brute = 0;
                std::vector<int> a(len, 0);
                while (true) {
                    long s = 0;
                    for (long i = 0; i < len; ++i) s += static_cast<long>(a[i]) * tuple[i];
                    if (s % r == 0) ++brute;
                    long i = len - 1;
                    while (i >= 0 && a[i] == r - 1) a[i--] = 0;
                    if (i < 0) break;
                    ++a[i];
                }
                if (count_congruence_tuples(r, tuple) != brute) {
                    detail = "congruence count mismatch at r=" + std::to_string(r);
                    return false;
                }
            }
        }
    }

    for (const auto& params : certification_grid()) {
        std::string label = "(" + std::to_string(params.r) + "," + std::to_string(params.d) + "," +
                            std::to_string(params.n) + ")";
        auto [y_count, x_count] = burnside_counts(params, kOracleBudget);
        auto cosets = enumerate_double_cosets(params);
        if (y_count != x_count || y_count != static_cast<long>(cosets.size())) {
            detail = "burnside counts disagree at " + label;
            return false;
        }
        const auto& table = tables.get(params);
        Integer dim_total = 0;
        for (const auto& dim : table.dims) dim_total += dim;
        if (dim_total != pow(Integer(params.r), static_cast<unsigned>(params.n)) / params.d) {
            detail = "dimension total wrong at " + label;
            return false;
        }
    }
    return true;
}

// ---- criterion 9 -----------------------------------------------------------

bool negative_control(std::string& detail) {
    GroupParams params(2, 2, 3);
    auto table = spherical_table(params);
    table.values[1][1] += CyclotomicNumber::one(2);

    std::vector<VerificationReport> reports;
    reports.push_back(certify_spherical_table(table, kOracleBudget));
    reports.push_back(convolution_check(table, kOracleBudget));
    reports.push_back(verify_orthogonality(table));
    reports.push_back(verify_eigenfunction(table, build_operator(params, 1, kOracleBudget)));

    for (const auto& report : reports) {
        if (const auto* failure = report.first_failure()) {
            if (failure->witness.empty()) {
                detail = "failure reported without a witness: " + failure->name;
                return false;
            }
            return true;
        }
    }
    detail = "corruption went unnoticed by every suite";
    return false;
}

struct Criterion {
    int number;
    const char* name;
    std::function<bool(std::string&)> run;
    double time_limit;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "dihedral reproduction", dihedral_reproduction, 1.0},
        {2, "G(2,2,n) Gauss reproduction", gauss_reproduction, 1.0},
        {3, "oracle certification grid", oracle_certification, 300.0},
        {4, "orthogonality in both normalizations", orthogonality, 300.0},
        {5, "product formula", product_formula, 300.0},
        {6, "Rahman/Krawtchouk identity", rahman_identity, 300.0},
        {7, "Laplacian eigenstructure", laplacian, 300.0},
        {8, "counting identities", counting, 300.0},
        {9, "negative control", negative_control, 300.0},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && elapsed > criterion.time_limit) {
            pass = false;
            detail = "over time limit of " + std::to_string(criterion.time_limit) + " s";
        }
        std::printf("criterion %d (%s): %s (%.2f s)%s%s\n", criterion.number, criterion.name,
                    pass ? "PASS" : "FAIL", elapsed, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    return failures;
}
