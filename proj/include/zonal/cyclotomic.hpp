#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonal/rational.hpp"

namespace zonal {

inline long euler_phi(long r) {
    if (r < 1) throw std::invalid_argument("euler_phi: order must be positive");
    long result = r;
    long m = r;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// Exact division of integer polynomials (ascending coefficients); the
// divisor must be monic and must divide evenly.
inline std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("divide_exact: divisor must be monic");
    if (num.size() < den.size()) throw std::logic_error("divide_exact: degree underflow");
    std::vector<Integer> quot(num.size() - den.size() + 1);
    for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
        Integer c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Integer& c : num)
        if (c != 0) throw std::logic_error("divide_exact: division not exact");
    return quot;
}

}  // namespace detail

// r-th cyclotomic polynomial, ascending integer coefficients.  Computed by
// stripping Phi_d for every proper divisor d out of x^r - 1.
inline const std::vector<Integer>& cyclotomic_polynomial(long r) {
    if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    thread_local std::map<long, std::vector<Integer>> cache;
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;

    std::vector<Integer> poly(r + 1);
    poly[0] = -1;
    poly[r] = 1;
    for (long d = 1; d < r; ++d) {
        if (r % d == 0) poly = detail::divide_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return cache.emplace(r, std::move(poly)).first->second;
}

// An element of Q(zeta_r) in the power basis of Q[x]/(Phi_r).  Coefficients
// always have length phi(r); cpp_rational keeps each one canonical, so
// equality is componentwise.
class CyclotomicNumber {
   public:
    CyclotomicNumber() : order_(1), coeffs_(1, Rational(0)) {}

    CyclotomicNumber(long order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < 1) throw std::invalid_argument("CyclotomicNumber: order must be positive");
        if (static_cast<long>(coeffs_.size()) != euler_phi(order_))
            throw std::invalid_argument("CyclotomicNumber: coefficient count must equal phi(order)");
    }

    static CyclotomicNumber zero(long order) {
        return CyclotomicNumber(order, std::vector<Rational>(euler_phi(order), Rational(0)));
    }

    static CyclotomicNumber from_rational(long order, const Rational& value) {
        auto z = zero(order);
        z.coeffs_[0] = value;
        return z;
    }

    static CyclotomicNumber one(long order) { return from_rational(order, Rational(1)); }

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    // Constant term; only meaningful when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    CyclotomicNumber operator-() const {
        CyclotomicNumber z = *this;
        for (auto& c : z.coeffs_) c = -c;
        return z;
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs) {
        require_same_order(rhs);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }

    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs) {
        require_same_order(rhs);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }

    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs) {
        require_same_order(rhs);
        std::vector<Rational> prod(2 * coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                if (rhs.coeffs_[j] == 0) continue;
                prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
        coeffs_ = reduce(order_, std::move(prod));
        return *this;
    }

    CyclotomicNumber& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
    friend CyclotomicNumber operator*(const Rational& s, CyclotomicNumber a) { return a *= s; }

    // Image under the field automorphism zeta -> zeta^{-1}, i.e. complex
    // conjugation in the canonical embedding.
    CyclotomicNumber conjugate() const {
        std::vector<Rational> acc(static_cast<size_t>(order_ < 2 ? 1 : order_), Rational(0));
        for (size_t t = 0; t < coeffs_.size(); ++t) {
            if (coeffs_[t] == 0) continue;
            size_t e = t == 0 ? 0 : static_cast<size_t>(order_) - t;
            acc[e] += coeffs_[t];
        }
        return CyclotomicNumber(order_, reduce(order_, std::move(acc)));
    }

    std::complex<double> to_complex() const {
        const double two_pi = 6.283185307179586476925286766559;
        std::complex<double> x = std::polar(1.0, two_pi / static_cast<double>(order_));
        std::complex<double> acc(0.0, 0.0);
        for (size_t t = coeffs_.size(); t-- > 0;) {
            acc = acc * x + std::complex<double>(static_cast<double>(coeffs_[t]), 0.0);
        }
        return acc;
    }

    // Q-linear combination of powers of z = zeta_order, e.g. "1/2 - z + 2*z^2".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (size_t t = 0; t < coeffs_.size(); ++t) {
            const Rational& c = coeffs_[t];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (t == 0) {
                os << mag.str();
            } else {
                if (mag != 1) os << mag.str() << "*";
                os << "z";
                if (t > 1) os << "^" << t;
            }
        }
        if (first) return "0";
        return os.str();
    }

   private:
    void require_same_order(const CyclotomicNumber& rhs) const {
        if (order_ != rhs.order_)
            throw std::invalid_argument("CyclotomicNumber: mixed orders (lift explicitly first)");
    }

    // Reduce an ascending-coefficient polynomial modulo Phi_order.
    static std::vector<Rational> reduce(long order, std::vector<Rational> poly) {
        const std::vector<Integer>& phi = cyclotomic_polynomial(order);
        const size_t deg = phi.size() - 1;
        if (poly.size() < deg) poly.resize(deg, Rational(0));
        for (size_t i = poly.size(); i-- > deg;) {
            Rational c = poly[i];
            if (c != 0) {
                for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * phi[j];
            }
        }
        poly.resize(deg);
        return poly;
    }

    long order_;
    std::vector<Rational> coeffs_;

    friend CyclotomicNumber cyclo_root(long, long);
};

// Canonical form of zeta_r^k.
inline CyclotomicNumber cyclo_root(long r, long k) {
    if (r < 1) throw std::invalid_argument("cyclo_root: order must be positive");
    long e = ((k % r) + r) % r;
    std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational(0));
    poly[e] = 1;
    return CyclotomicNumber(r, CyclotomicNumber::reduce(r, std::move(poly)));
}

inline CyclotomicNumber conjugate(const CyclotomicNumber& a) { return a.conjugate(); }

}  // namespace zonal
