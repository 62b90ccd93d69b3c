#pragma once

#include <compare>
#include <sstream>
#include <string>
#include <vector>

namespace zonal {

namespace detail {

// Tuples with a fixed total are ordered by their tail (index 1 onward); the
// 0-th entry is determined by the rest, and this ordering puts the identity
// coset and the trivial spherical index first.
inline std::strong_ordering reduced_compare(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (size_t i = 1; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

inline std::string tuple_string(const std::vector<int>& t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

}  // namespace detail

// Label of a double coset S_n g S_n: counts[i] is the multiplicity of the
// exponent i among the diagonal entries of any element of the coset.
struct CosetIndex {
    std::vector<int> counts;

    long degree() const {
        long s = 0;
        for (int c : counts) s += c;
        return s;
    }

    // sum of i * counts[i]; the subgroup constraint is weighted_sum % d == 0.
    long weighted_sum() const {
        long s = 0;
        for (size_t i = 0; i < counts.size(); ++i) s += static_cast<long>(i) * counts[i];
        return s;
    }

    std::string to_string() const { return detail::tuple_string(counts); }

    friend bool operator==(const CosetIndex& a, const CosetIndex& b) { return a.counts == b.counts; }
    friend std::strong_ordering operator<=>(const CosetIndex& a, const CosetIndex& b) {
        return detail::reduced_compare(a.counts, b.counts);
    }
};

// Canonical label of a Gamma-orbit of weight tuples: rep is the orbit
// element whose tail is lexicographically minimal, stabilizer_order the
// number of Gamma elements fixing it.
struct SphericalIndex {
    std::vector<int> rep;
    int stabilizer_order = 1;

    std::string to_string() const { return detail::tuple_string(rep); }

    friend bool operator==(const SphericalIndex& a, const SphericalIndex& b) { return a.rep == b.rep; }
    friend std::strong_ordering operator<=>(const SphericalIndex& a, const SphericalIndex& b) {
        return detail::reduced_compare(a.rep, b.rep);
    }
};

}  // namespace zonal
