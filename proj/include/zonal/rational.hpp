#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zonal {

// Exact arithmetic backbone. cpp_rational keeps every value in lowest terms
// with a positive denominator, so equality is plain coefficient comparison.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

// binomial(n, k) with the convention that k < 0 or k > n gives 0.
inline Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Integer acc = 1;
    for (long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

// multinomial(n; parts), zero when any part is negative or the parts do not
// sum to n.
inline Integer multinomial(long n, std::span<const int> parts) {
    long sum = 0;
    for (int p : parts) {
        if (p < 0) return 0;
        sum += p;
    }
    if (sum != n) return 0;
    Integer acc = factorial(n);
    for (int p : parts) acc /= factorial(p);
    return acc;
}

inline Integer multinomial(long n, const std::vector<int>& parts) {
    return multinomial(n, std::span<const int>(parts));
}

inline long gcd_of(long r, std::span<const int> values) {
    long g = r;
    for (int v : values) g = std::gcd(g, static_cast<long>(v));
    return g;
}

// cpp_rational's two-argument constructor rejects negative denominators;
// this normalizes the sign first.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

// Raised when an enumeration would exceed the caller-supplied budget.  The
// message names the order actually required so the caller can re-run with a
// bigger budget deliberately.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(const std::string& what, long long required)
        : std::runtime_error(what + " (requires " + std::to_string(required) + ")"),
          required_(required) {}
    long long required() const { return required_; }

   private:
    long long required_;
};

}  // namespace zonal
