#include "zonal/cyclotomic.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace zonal;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

CyclotomicNumber random_element(long order, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> coeffs(euler_phi(order));
    for (auto& c : coeffs) c = Rational(num(rng), den(rng));
    return CyclotomicNumber(order, std::move(coeffs));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    // x^6 - 1 divided by Phi_1 * Phi_2 * Phi_3
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});

    for (long r = 1; r <= 40; ++r)
        CHECK(static_cast<long>(cyclotomic_polynomial(r).size()) == euler_phi(r) + 1);
}

TEST_CASE("roots of unity in canonical form") {
    CHECK(cyclo_root(4, 1).coeffs() == std::vector<Rational>{q(0), q(1)});
    CHECK(cyclo_root(2, 1) == CyclotomicNumber::from_rational(2, q(-1)));
    // x^3 = (x + 1)(x^2 - x + 1) - 1
    CHECK(cyclo_root(6, 3) == CyclotomicNumber::from_rational(6, q(-1)));
    CHECK(cyclo_root(5, 7) == cyclo_root(5, 2));
    CHECK_THROWS_AS(cyclo_root(0, 1), std::invalid_argument);
}

TEST_CASE("field operations") {
    auto i = cyclo_root(4, 1);
    CHECK(i * i == CyclotomicNumber::from_rational(4, q(-1)));

    auto z = cyclo_root(5, 3);
    CHECK(z + CyclotomicNumber::zero(5) == z);

    auto sum = CyclotomicNumber::zero(5);
    for (long k = 0; k < 5; ++k) sum += cyclo_root(5, k);
    CHECK(sum.is_zero());

    CHECK_THROWS_AS(cyclo_root(3, 1) + cyclo_root(6, 2), std::invalid_argument);
}

TEST_CASE("conjugation") {
    CHECK(conjugate(cyclo_root(4, 1)) == -cyclo_root(4, 1));
    auto half = CyclotomicNumber::from_rational(12, q(1, 2));
    CHECK(conjugate(half) == half);
    // conj(1 - zeta_3) = 1 - zeta_3^2 = 2 + zeta_3 once reduced mod Phi_3
    auto a = CyclotomicNumber::one(3) - cyclo_root(3, 1);
    CHECK(conjugate(a) == CyclotomicNumber(3, {q(2), q(1)}));
}

TEST_CASE("numeric embedding") {
    auto i = cyclo_root(4, 1).to_complex();
    CHECK(std::abs(i.real()) < 1e-12);
    CHECK(std::abs(i.imag() - 1.0) < 1e-12);

    auto s = (cyclo_root(3, 1) + cyclo_root(3, 2)).to_complex();
    CHECK(std::abs(s.real() + 1.0) < 1e-12);
    CHECK(std::abs(s.imag()) < 1e-12);

    auto c = (cyclo_root(8, 1) + cyclo_root(8, -1)) * q(1, 2);
    CHECK(std::abs(c.to_complex().real() - 0.7071067) < 1e-6);
}

TEST_CASE("inverse roots multiply to one") {
    for (long r = 1; r <= 30; ++r)
        for (long k = 0; k < r; ++k)
            CHECK(cyclo_root(r, k) * cyclo_root(r, r - k) == CyclotomicNumber::one(r));
}

TEST_CASE("root sums vanish") {
    for (long r = 2; r <= 30; ++r) {
        auto sum = CyclotomicNumber::zero(r);
        for (long k = 0; k < r; ++k) sum += cyclo_root(r, k);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937 rng(20240214);
    for (long order : {3L, 4L, 6L, 8L, 12L}) {
        for (int trial = 0; trial < 40; ++trial) {
            auto a = random_element(order, rng);
            auto b = random_element(order, rng);
            auto c = random_element(order, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("conjugation is an involutive ring map") {
    std::mt19937 rng(991);
    for (long order : {5L, 7L, 9L, 10L}) {
        for (int trial = 0; trial < 30; ++trial) {
            auto a = random_element(order, rng);
            auto b = random_element(order, rng);
            CHECK(conjugate(conjugate(a)) == a);
            CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
            CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
        }
    }
}

TEST_CASE("embedding is multiplicative") {
    std::mt19937 rng(7);
    for (long order : {3L, 8L, 12L, 15L}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto a = random_element(order, rng);
            auto b = random_element(order, rng);
            auto lhs = (a * b).to_complex();
            auto rhs = a.to_complex() * b.to_complex();
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
}

TEST_CASE("string rendering") {
    CHECK(CyclotomicNumber::zero(4).to_string() == "0");
    CHECK(cyclo_root(4, 1).to_string() == "z");
    auto a = CyclotomicNumber(12, {q(-1, 3), q(0), q(2), q(-1)});
    CHECK(a.to_string() == "-1/3 + 2*z^2 - z^3");
}
