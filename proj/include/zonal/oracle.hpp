#pragma once

#include <deque>
#include <map>

#include "zonal/spherical.hpp"

namespace zonal {

// Brute-force certification layer.  Everything here works on the literal
// finite group through the wreath and cyclotomic modules only; none of the
// hypergeometric machinery is consulted, which is what makes agreement with
// the analytic tables meaningful.

struct BruteDoubleCoset {
    CosetIndex index;
    long long size;

    friend bool operator==(const BruteDoubleCoset& a, const BruteDoubleCoset& b) {
        return a.index == b.index && a.size == b.size;
    }
};

// Partitions the whole group into S_n-double cosets by two-sided orbit
// closure under adjacent transpositions, then checks the classes are in
// bijection with exponent signatures.
inline std::vector<BruteDoubleCoset> brute_force_double_cosets(const GroupParams& params,
                                                               long long budget) {
    auto elements = enumerate_group(params, budget);
    std::map<GroupElement, size_t> position;
    for (size_t i = 0; i < elements.size(); ++i) position[elements[i]] = i;

    std::vector<GroupElement> generators;
    for (long i = 0; i + 1 < params.n; ++i) {
        GroupElement t = identity_element(params.r, params.n);
        std::swap(t.perm[i], t.perm[i + 1]);
        generators.push_back(t);
    }

    std::vector<char> visited(elements.size(), 0);
    std::map<CosetIndex, long long> classes;
    for (size_t seed = 0; seed < elements.size(); ++seed) {
        if (visited[seed]) continue;
        long long size = 0;
        CosetIndex signature = coset_signature(elements[seed]);
        std::deque<size_t> queue{seed};
        visited[seed] = 1;
        while (!queue.empty()) {
            size_t at = queue.front();
            queue.pop_front();
            ++size;
            if (coset_signature(elements[at]) != signature)
                throw std::logic_error("brute_force_double_cosets: signature not constant on " +
                                       signature.to_string());
            for (const auto& t : generators) {
                for (const auto& next : {multiply(t, elements[at]), multiply(elements[at], t)}) {
                    size_t id = position.at(next);
                    if (!visited[id]) {
                        visited[id] = 1;
                        queue.push_back(id);
                    }
                }
            }
        }
        if (!classes.emplace(signature, size).second)
            throw std::logic_error("brute_force_double_cosets: two orbit classes share signature " +
                                   signature.to_string());
    }

    std::vector<BruteDoubleCoset> out;
    out.reserve(classes.size());
    for (const auto& [index, size] : classes) out.push_back({index, size});
    return out;
}

namespace detail {

// Lifts table rows to functions on the literal group.
class LiftedTable {
   public:
    LiftedTable(const SphericalTable& table, long long budget)
        : table_(table), elements_(enumerate_group(table.params, budget)) {
        for (size_t j = 0; j < table.cols.size(); ++j) column_[table.cols[j]] = j;
        for (const auto& g : elements_) {
            if (g.exponents == std::vector<int>(table.params.n, 0)) subgroup_.push_back(g);
            auto sig = coset_signature(g);
            if (reps_.find(sig) == reps_.end()) reps_.emplace(sig, g);
        }
    }

    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& subgroup() const { return subgroup_; }

    std::vector<GroupElement> coset_representatives() const {
        std::vector<GroupElement> out;
        for (const auto& [sig, g] : reps_) out.push_back(g);
        return out;
    }

    size_t column_of(const GroupElement& g) const { return column_.at(coset_signature(g)); }

    const CyclotomicNumber& value(size_t row, const GroupElement& g) const {
        return table_.values[row][column_of(g)];
    }

   private:
    const SphericalTable& table_;
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> subgroup_;
    std::map<CosetIndex, size_t> column_;
    std::map<CosetIndex, GroupElement> reps_;
};

}  // namespace detail

// Certifies every table row as a genuine zonal spherical function of the
// literal group: value 1 at the identity, bi-invariance, conjugation of
// inverses, the averaging functional equation, and pairwise distinctness.
// The functional equation is quantified over double-coset representatives
// (bi-invariance collapses the general case); full_quantifier = true runs
// the unreduced sweep over all pairs instead.
inline VerificationReport certify_spherical_table(const SphericalTable& table, long long budget,
                                                  bool full_quantifier = false) {
    VerificationReport report;
    report.suite = "oracle";
    report.params = table.params;
    ReportTimer timer(report);

    detail::LiftedTable lift(table, budget);
    const auto& group = lift.elements();
    const auto& subgroup = lift.subgroup();
    const auto identity = identity_element(table.params.r, table.params.n);
    const size_t n_rows = table.rows.size();
    const size_t s = table.cols.size();
    const Rational inv_subgroup_order = make_rational(1, factorial(table.params.n));

    struct RowState {
        bool pass = true;
        std::string witness;
    };

    auto flush = [&](const std::string& name, const std::vector<RowState>& states) {
        for (size_t row = 0; row < n_rows; ++row)
            report.add(name + " for row " + table.rows[row].to_string(), states[row].pass,
                       states[row].witness);
    };

    {
        std::vector<RowState> states(n_rows);
        for (size_t row = 0; row < n_rows; ++row)
            states[row].pass =
                lift.value(row, identity) == CyclotomicNumber::one(table.values[row][0].order());
        flush("identity value", states);
    }

    // bi-invariance: the group products are shared across rows; the value
    // comparison only has to be spelled out when the translate lands in a
    // different column
    {
        std::vector<RowState> states(n_rows);
        for (const auto& g : group) {
            size_t cg = lift.column_of(g);
            for (const auto& h : subgroup) {
                size_t left = lift.column_of(multiply(h, g));
                size_t right = lift.column_of(multiply(g, h));
                if (left == cg && right == cg) continue;
                for (size_t row = 0; row < n_rows; ++row) {
                    if (!states[row].pass) continue;
                    if (table.values[row][left] != table.values[row][cg] ||
                        table.values[row][right] != table.values[row][cg]) {
                        states[row].pass = false;
                        states[row].witness = "g = " + to_string(g) + ", h = " + to_string(h);
                    }
                }
            }
        }
        flush("bi-invariance", states);
    }

    {
        std::vector<std::vector<CyclotomicNumber>> conjugated(n_rows);
        for (size_t row = 0; row < n_rows; ++row)
            for (const auto& v : table.values[row]) conjugated[row].push_back(conjugate(v));
        std::vector<RowState> states(n_rows);
        for (const auto& g : group) {
            size_t cg = lift.column_of(g);
            size_t ci = lift.column_of(inverse(g));
            for (size_t row = 0; row < n_rows; ++row) {
                if (!states[row].pass) continue;
                if (table.values[row][ci] != conjugated[row][cg]) {
                    states[row].pass = false;
                    states[row].witness = "g = " + to_string(g);
                }
            }
        }
        flush("inverse conjugation", states);
    }

    // averaging functional equation: count, for each base pair, how many
    // subgroup translates land in each column, then take row sums
    {
        std::vector<RowState> states(n_rows);
        auto outer = full_quantifier ? group : lift.coset_representatives();
        std::vector<long long> landed(s);
        for (const auto& x : outer) {
            std::vector<GroupElement> xh;
            xh.reserve(subgroup.size());
            for (const auto& h : subgroup) xh.push_back(multiply(x, h));
            size_t cx = lift.column_of(x);
            for (const auto& y : outer) {
                std::fill(landed.begin(), landed.end(), 0);
                for (const auto& left : xh) ++landed[lift.column_of(multiply(left, y))];
                size_t cy = lift.column_of(y);
                for (size_t row = 0; row < n_rows; ++row) {
                    if (!states[row].pass) continue;
                    CyclotomicNumber sum = CyclotomicNumber::zero(table.values[row][0].order());
                    for (size_t c = 0; c < s; ++c)
                        if (landed[c] != 0) sum += table.values[row][c] * Rational(landed[c]);
                    if (sum * inv_subgroup_order != table.values[row][cx] * table.values[row][cy]) {
                        states[row].pass = false;
                        states[row].witness = "g = " + to_string(x) + ", k = " + to_string(y);
                    }
                }
            }
        }
        flush(std::string("functional equation") + (full_quantifier ? " (full)" : ""), states);
    }

    {
        bool pass = true;
        std::string witness;
        for (size_t i = 0; i < n_rows && pass; ++i)
            for (size_t j = i + 1; j < n_rows && pass; ++j)
                if (table.values[i] == table.values[j]) {
                    pass = false;
                    witness = table.rows[i].to_string() + " equals " + table.rows[j].to_string();
                }
        report.add("rows distinct", pass, witness);
    }
    return report;
}

// Literal group-algebra convolution of lifted rows: w_i * w_j must equal
// (|G| / dim_i) delta_{ij} w_i.  This pins down the claimed dimensions.
// Convolutions of bi-invariant functions are bi-invariant, so the default
// sweep evaluates at one representative per double coset; full_quantifier
// evaluates at every group element.
inline VerificationReport convolution_check(const SphericalTable& table, long long budget,
                                            bool full_quantifier = false) {
    VerificationReport report;
    report.suite = "oracle";
    report.params = table.params;
    ReportTimer timer(report);

    detail::LiftedTable lift(table, budget);
    const auto& group = lift.elements();
    const size_t s = table.cols.size();
    const size_t n_rows = table.rows.size();
    const long order = table.params.r == 1 ? 1 : table.params.r;
    auto points = full_quantifier ? group : lift.coset_representatives();

    Integer group_order = static_cast<Integer>(group.size());
    std::vector<bool> pass(n_rows * n_rows, true);
    std::vector<std::string> witness(n_rows * n_rows);

    std::vector<std::vector<long long>> pair_counts(s, std::vector<long long>(s, 0));
    for (size_t p = 0; p < points.size(); ++p) {
        // count pairs (signature(t), signature(t^{-1} g)) at this base point;
        // the convolution then reduces to weighted table sums
        for (auto& row : pair_counts) std::fill(row.begin(), row.end(), 0);
        for (const auto& t : group)
            ++pair_counts[lift.column_of(t)][lift.column_of(multiply(inverse(t), points[p]))];
        size_t point_col = lift.column_of(points[p]);

        for (size_t j = 0; j < n_rows; ++j) {
            // inner sums over the second factor are shared by every first row
            std::vector<CyclotomicNumber> partial(s, CyclotomicNumber::zero(order));
            for (size_t a = 0; a < s; ++a)
                for (size_t b = 0; b < s; ++b)
                    if (pair_counts[a][b] != 0)
                        partial[a] += table.values[j][b] * Rational(pair_counts[a][b]);

            for (size_t i = 0; i < n_rows; ++i) {
                if (!pass[i * n_rows + j]) continue;
                CyclotomicNumber sum = CyclotomicNumber::zero(order);
                for (size_t a = 0; a < s; ++a) sum += table.values[i][a] * partial[a];
                Rational scale = i == j ? make_rational(group_order, table.dims[i]) : Rational(0);
                auto expected = table.values[i][point_col] * scale;
                if (sum != expected) {
                    pass[i * n_rows + j] = false;
                    witness[i * n_rows + j] = "at g = " + to_string(points[p]) + ": got " +
                                              sum.to_string() + ", expected " + expected.to_string();
                }
            }
        }
    }

    for (size_t i = 0; i < n_rows; ++i)
        for (size_t j = 0; j < n_rows; ++j)
            report.add("convolution " + table.rows[i].to_string() + " * " + table.rows[j].to_string(),
                       pass[i * n_rows + j], witness[i * n_rows + j]);
    return report;
}

}  // namespace zonal
