// Command-line front end: exact spherical-function tables for the groups
// G(r,d,n), single-value evaluation, linearization of products, Hamming-ball
// operators, and the verification suites, all with machine-readable output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "zonal/serialize.hpp"

namespace {

using namespace zonal;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file " + out_path);
    file << text;
}

// Upper bound on the matrices visited while filling a whole table; refused
// against the term budget before any evaluation starts.
Integer table_cost_bound(const GroupParams& params) {
    if (params.r == 1) return 1;
    auto cosets = enumerate_double_cosets(params);
    auto rows = enumerate_spherical_indices(params);
    Integer total = 0;
    for (const auto& l : cosets) {
        for (const auto& k : rows) {
            std::vector<long> alpha, beta;
            for (long i = 1; i < params.r; ++i) {
                alpha.push_back(-l.counts[i]);
                beta.push_back(-k.rep[i]);
            }
            total += evaluate_cost_bound(alpha, beta);
        }
    }
    return total;
}

SphericalTable build_table(const GroupParams& params, long long term_budget, long jobs) {
    Integer bound = table_cost_bound(params);
    if (bound > term_budget)
        throw BudgetExceeded("table: hypergeometric term bound exceeds budget",
                             static_cast<long long>(bound));
    return spherical_table(params, jobs);
}

// aggregates a sweep of single-check reports into one line of the suite
// report, keeping the first failing witness
struct Aggregate {
    long total = 0;
    long failed = 0;
    std::string witness;

    void absorb(const VerificationReport& report) {
        for (const auto& check : report.checks) {
            ++total;
            if (!check.pass) {
                ++failed;
                if (witness.empty()) witness = check.name + (check.witness.empty() ? "" : ": " + check.witness);
            }
        }
    }

    void flush(VerificationReport& suite, const std::string& name) const {
        suite.add(name + " (" + std::to_string(total) + " checks)", failed == 0,
                  failed == 0 ? "" : std::to_string(failed) + " failed, first: " + witness);
    }
};

void run_orthogonality_suite(VerificationReport& suite, const SphericalTable& table) {
    auto report = verify_orthogonality(table);
    for (auto& check : report.checks) suite.checks.push_back(std::move(check));
}

void run_product_suite(VerificationReport& suite, const GroupParams& params) {
    auto cosets = enumerate_double_cosets(params);
    for (const auto& k : enumerate_spherical_indices(params)) {
        Aggregate agg;
        for (const auto& l : cosets)
            for (const auto& lp : cosets) agg.absorb(verify_product_formula(k, l, lp, params));
        agg.flush(suite, "product formula at " + k.to_string());
    }
}

void run_laplace_suite(VerificationReport& suite, const SphericalTable& table, long long budget) {
    const GroupParams& params = table.params;
    for (long k = 0; k <= params.n; ++k) {
        auto op = build_operator(params, k, budget);
        auto report = verify_eigenfunction(table, op);
        for (auto& check : report.checks) suite.checks.push_back(std::move(check));
    }
    if (params.d != 1) return;

    auto brute = build_operator(params, 1, budget);
    auto fast = laplace_recurrence_matrix(params);
    suite.add("recurrence matrix equals brute-force matrix", brute.matrix == fast.matrix);

    size_t identity_row = static_cast<size_t>(table.identity_col());
    for (size_t i = 0; i < table.rows.size(); ++i) {
        CyclotomicNumber lambda = CyclotomicNumber::zero(table.values[i][0].order());
        for (size_t j = 0; j < table.cols.size(); ++j)
            lambda += table.values[i][j] * Rational(brute.matrix[identity_row][j]);
        long expected = closed_form_eigenvalue(table.rows[i], params);
        bool ok = lambda == CyclotomicNumber::from_rational(lambda.order(), Rational(expected));
        suite.add("closed-form eigenvalue at " + table.rows[i].to_string(), ok,
                  ok ? "" : "operator gives " + lambda.to_string() + ", closed form " +
                                std::to_string(expected));
    }

    for (const auto& k : table.rows) {
        Aggregate agg;
        for (const auto& l : table.cols) agg.absorb(contiguity_check(k, l, params));
        agg.flush(suite, "contiguity at " + k.to_string());
    }

    if (params.r == 2) {
        Aggregate agg;
        for (long x = 0; x <= params.n; ++x)
            for (long m = 0; m <= params.n; ++m) agg.absorb(three_term_check(x, m, params.n));
        agg.flush(suite, "three-term relation at N = " + std::to_string(params.n));
    }
}

void run_oracle_suite(VerificationReport& suite, const SphericalTable& table, long long budget) {
    const GroupParams& params = table.params;
    auto brute = brute_force_double_cosets(params, budget);
    auto analytic = enumerate_double_cosets(params);
    bool cosets_ok = brute.size() == analytic.size();
    std::string witness;
    for (size_t i = 0; cosets_ok && i < brute.size(); ++i) {
        if (!(brute[i].index == analytic[i]) ||
            Integer(brute[i].size) != double_coset_size(analytic[i], params)) {
            cosets_ok = false;
            witness = "at " + brute[i].index.to_string();
        }
    }
    suite.add("double cosets match brute-force partition", cosets_ok, witness);

    // run the unreduced quantifier sweep when the group is tiny
    bool full = params.order() <= 64;
    for (auto& check : certify_spherical_table(table, budget, full).checks)
        suite.checks.push_back(std::move(check));
    for (auto& check : convolution_check(table, budget, full).checks)
        suite.checks.push_back(std::move(check));
}

void run_rahman_suite(VerificationReport& suite, long max_capital) {
    for (long capital = 1; capital <= max_capital; ++capital) {
        Aggregate agg;
        for (long x = 0; x <= capital; ++x)
            for (long y = 0; y <= capital; ++y)
                for (long n = 0; n <= capital; ++n) agg.absorb(rahman_identity_check(x, y, n, capital));
        agg.flush(suite, "rahman identity grid N = " + std::to_string(capital));
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact zonal spherical function tables for G(r,d,n)"};
    app.require_subcommand(1);

    long r = 0, d = 0, n = 0;
    std::string out_path;
    int float_digits = 12;
    long jobs = static_cast<long>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    long long budget = 10000;
    long long term_budget = 10000000;

    auto add_params = [&](CLI::App* cmd, bool required = true) {
        auto* opt_r = cmd->add_option("--r", r, "root-of-unity order r");
        auto* opt_d = cmd->add_option("--d", d, "divisor d of r");
        auto* opt_n = cmd->add_option("--n", n, "number of coordinates n");
        if (required) {
            opt_r->required();
            opt_d->required();
            opt_n->required();
        }
    };

    auto* table_cmd = app.add_subcommand("table", "print the full spherical value table");
    add_params(table_cmd);
    std::string format = "json";
    table_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    table_cmd->add_option("--float-digits", float_digits, "significant digits for float rendering");
    table_cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    table_cmd->add_option("--term-budget", term_budget, "hypergeometric term budget");
    table_cmd->add_option("--jobs", jobs, "worker threads for table cells");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one spherical value");
    add_params(eval_cmd);
    std::vector<int> k_tuple, l_tuple;
    eval_cmd->add_option("--k", k_tuple, "spherical index, comma separated")->required()->delimiter(',');
    eval_cmd->add_option("--l", l_tuple, "double coset index, comma separated")->required()->delimiter(',');
    eval_cmd->add_option("--float-digits", float_digits, "significant digits for float rendering");
    eval_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    add_params(verify_cmd, false);
    std::string suite_name = "all";
    long rahman_capital = 8;
    verify_cmd->add_option("--suite", suite_name, "suite to run")
        ->check(CLI::IsMember({"all", "orthogonality", "product", "laplace", "rahman", "oracle"}));
    verify_cmd->add_option("--budget", budget, "group order budget for oracle suites");
    verify_cmd->add_option("--N", rahman_capital, "largest N of the Krawtchouk grid");
    verify_cmd->add_option("--term-budget", term_budget, "hypergeometric term budget");
    verify_cmd->add_option("--jobs", jobs, "worker threads for table cells");
    verify_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* laplace_cmd = app.add_subcommand("laplace", "emit a distance-k operator with eigenvalues");
    add_params(laplace_cmd);
    long distance = 1;
    laplace_cmd->add_option("--k", distance, "Hamming distance of the operator");
    laplace_cmd->add_option("--budget", budget, "left-coset budget");
    laplace_cmd->add_option("--term-budget", term_budget, "hypergeometric term budget");
    laplace_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* product_cmd = app.add_subcommand("product", "linearize a product of double cosets");
    add_params(product_cmd);
    std::vector<int> pl_tuple, plp_tuple;
    product_cmd->add_option("--l", pl_tuple, "left factor coset, comma separated")->required()->delimiter(',');
    product_cmd->add_option("--lp", plp_tuple, "right factor coset, comma separated")->required()->delimiter(',');
    product_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalidInput;
    }

    try {
        if (app.got_subcommand(table_cmd)) {
            GroupParams params(r, d, n);
            auto table = build_table(params, term_budget, jobs);
            if (format == "csv")
                write_output(out_path, table_csv(table, float_digits));
            else
                write_output(out_path, table_json(table).dump(2) + "\n");
            return kExitPass;
        }

        if (app.got_subcommand(eval_cmd)) {
            GroupParams params(r, d, n);
            CosetIndex l{l_tuple};
            if (!is_valid_coset(l, params)) throw std::invalid_argument("eval: invalid coset index --l");
            auto canon = canonical_spherical_index(k_tuple, params);
            auto value = spherical_value(canon, l, params);
            json out{{"params", params_json(params)},
                     {"k", canon.rep},
                     {"l", l.counts},
                     {"exact", cyclotomic_json(value)},
                     {"exact_string", value.to_string()},
                     {"float", float_string(value, float_digits)}};
            write_output(out_path, out.dump(2) + "\n");
            return kExitPass;
        }

        if (app.got_subcommand(verify_cmd)) {
            VerificationReport suite;
            suite.suite = suite_name;
            {
                ReportTimer timer(suite);
                bool needs_params = suite_name != "rahman";
                if (needs_params && (r == 0 || d == 0 || n == 0))
                    throw std::invalid_argument("verify: --r, --d, --n required for suite " + suite_name);
                if (needs_params) {
                    GroupParams params(r, d, n);
                    suite.params = params;
                    auto table = build_table(params, term_budget, jobs);
                    if (suite_name == "all" || suite_name == "orthogonality")
                        run_orthogonality_suite(suite, table);
                    if (suite_name == "all" || suite_name == "product") run_product_suite(suite, params);
                    if (suite_name == "all" || suite_name == "laplace")
                        run_laplace_suite(suite, table, budget);
                    if (suite_name == "all" || suite_name == "oracle") run_oracle_suite(suite, table, budget);
                }
                if (suite_name == "all" || suite_name == "rahman") run_rahman_suite(suite, rahman_capital);
            }
            write_output(out_path, report_json(suite).dump(2) + "\n");
            return suite.all_pass() ? kExitPass : kExitVerificationFailure;
        }

        if (app.got_subcommand(laplace_cmd)) {
            GroupParams params(r, d, n);
            if (distance < 0) throw std::invalid_argument("laplace: distance must be nonnegative");
            auto table = build_table(params, term_budget, jobs);
            auto op = build_operator(params, distance, budget);
            write_output(out_path, operator_json(op, table).dump(2) + "\n");
            return kExitPass;
        }

        if (app.got_subcommand(product_cmd)) {
            GroupParams params(r, d, n);
            CosetIndex l{pl_tuple}, lp{plp_tuple};
            if (!is_valid_coset(l, params) || !is_valid_coset(lp, params))
                throw std::invalid_argument("product: invalid coset index");
            write_output(out_path, linearization_json(l, lp, product_expand(l, lp, params)).dump(2) + "\n");
            return kExitPass;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
