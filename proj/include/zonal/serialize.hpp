#pragma once

#include <json.hpp>

#include <cstdio>

#include "zonal/identities.hpp"
#include "zonal/laplace.hpp"
#include "zonal/oracle.hpp"

namespace zonal {

using nlohmann::json;

inline json integer_json(const Integer& v) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();  // decimal string once past 64 bits
}

inline json rational_json(const Rational& q) {
    return json::array({integer_json(numerator(q)), integer_json(denominator(q))});
}

inline json cyclotomic_json(const CyclotomicNumber& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(rational_json(c));
    return json{{"order", v.order()}, {"coeffs", coeffs}};
}

inline json params_json(const GroupParams& params) {
    return json{{"r", params.r}, {"d", params.d}, {"n", params.n}};
}

// fixed-significant-digit rendering; IEEE binary-to-decimal conversion is
// correctly rounded, so ties resolve to even
inline std::string format_float(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v == 0.0 ? 0.0 : v);
    return buf;
}

inline std::string format_complex(const std::complex<double>& z, int digits, bool real_only) {
    if (real_only) return format_float(z.real(), digits);
    std::string imag = format_float(z.imag(), digits);
    return format_float(z.real(), digits) + (imag.front() == '-' ? "" : "+") + imag + "i";
}

// float rendering of an exact value; exact realness decides whether the
// imaginary part is printed at all
inline std::string float_string(const CyclotomicNumber& v, int digits) {
    return format_complex(v.to_complex(), digits, v == conjugate(v));
}

inline json table_json(const SphericalTable& table) {
    json rows = json::array();
    for (size_t i = 0; i < table.rows.size(); ++i)
        rows.push_back(json{{"rep", table.rows[i].rep},
                            {"stabilizer_order", table.rows[i].stabilizer_order},
                            {"dim", integer_json(table.dims[i])}});
    json cols = json::array();
    for (size_t j = 0; j < table.cols.size(); ++j)
        cols.push_back(json{{"counts", table.cols[j].counts}, {"weight", rational_json(table.weights[j])}});
    json values = json::array();
    for (const auto& row : table.values) {
        json out_row = json::array();
        for (const auto& v : row) out_row.push_back(cyclotomic_json(v));
        values.push_back(out_row);
    }
    return json{{"params", params_json(table.params)}, {"rows", rows}, {"cols", cols}, {"values", values}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

inline std::string bare_tuple(const std::vector<int>& t) {
    std::string out;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
    }
    return out;
}

}  // namespace detail

inline std::string table_csv(const SphericalTable& table, int float_digits) {
    std::string out = "k,l,exact,float\n";
    for (size_t i = 0; i < table.rows.size(); ++i) {
        for (size_t j = 0; j < table.cols.size(); ++j) {
            const auto& v = table.values[i][j];
            out += detail::csv_field(detail::bare_tuple(table.rows[i].rep)) + ",";
            out += detail::csv_field(detail::bare_tuple(table.cols[j].counts)) + ",";
            out += detail::csv_field(v.to_string()) + ",";
            out += detail::csv_field(float_string(v, float_digits)) + "\n";
        }
    }
    return out;
}

inline json report_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.empty()) entry["witness"] = c.witness;
        checks.push_back(entry);
    }
    json out{{"suite", report.suite}, {"checks", checks}, {"elapsed", report.elapsed_seconds}};
    if (report.params) out["params"] = params_json(*report.params);
    if (!report.scope.empty()) out["scope"] = report.scope;
    return out;
}

inline json operator_json(const BiInvariantOperator& op, const SphericalTable& table) {
    json cosets = json::array();
    for (const auto& c : op.cosets) cosets.push_back(c.counts);
    json matrix = json::array();
    for (const auto& row : op.matrix) matrix.push_back(row);

    json eigenpairs = json::array();
    size_t identity_row = static_cast<size_t>(table.identity_col());
    for (size_t i = 0; i < table.rows.size(); ++i) {
        CyclotomicNumber lambda = CyclotomicNumber::zero(table.values[i][0].order());
        for (size_t j = 0; j < op.cosets.size(); ++j)
            lambda += table.values[i][j] * Rational(op.matrix[identity_row][j]);
        eigenpairs.push_back(json{{"spherical_index", table.rows[i].rep}, {"lambda", cyclotomic_json(lambda)}});
    }
    return json{{"params", params_json(op.params)},
                {"k", op.k},
                {"cosets", cosets},
                {"matrix", matrix},
                {"eigenpairs", eigenpairs}};
}

inline json linearization_json(const CosetIndex& l, const CosetIndex& l_prime,
                               const std::vector<LinearizationTerm>& terms) {
    json terms_json = json::array();
    for (const auto& t : terms)
        terms_json.push_back(json{{"coset", t.coset.counts}, {"coefficient", rational_json(t.coefficient)}});
    return json{{"l", l.counts}, {"l_prime", l_prime.counts}, {"terms", terms_json}};
}

}  // namespace zonal
