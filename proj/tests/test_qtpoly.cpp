#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <thread>

#include "delta/qtpoly.hpp"
#include "oracles.hpp"

using delta::QTPoly;

namespace {

const QTPoly q = QTPoly::q_pow(1);
const QTPoly t = QTPoly::t_pow(1);

QTPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(0, 4), c(-5, 5), sz(0, 6);
    QTPoly p;
    for (int i = sz(rng); i > 0; --i) p.add_term(e(rng), e(rng), c(rng));
    return p;
}

}  // namespace

TEST_CASE("addition") {
    CHECK((q + t) + q == QTPoly::monomial(1, 0, 2) + t);
    CHECK(q + QTPoly{} == q);
    QTPoly z = q + QTPoly::monomial(1, 0, -1);
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    CHECK(z == QTPoly{});
}

TEST_CASE("multiplication") {
    CHECK((1 + q) * (1 + t) == 1 + q + t + q * t);
    CHECK(q * QTPoly(1) == q);
    CHECK((1 + q) * (1 + q) == 1 + QTPoly::monomial(1, 0, 2) + QTPoly::q_pow(2));
    CHECK((q * QTPoly{}).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240611);
    for (int it = 0; it < 300; ++it) {
        QTPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK((a * b).eval(2, 3) == a.eval(2, 3) * b.eval(2, 3));
        CHECK((a * b).swapped() == a.swapped() * b.swapped());
    }
}

TEST_CASE("shift and coefficients") {
    QTPoly p = 1 + q;
    p.shift(2, 1, 3);
    CHECK(p == QTPoly::monomial(2, 1, 3) + QTPoly::monomial(3, 1, 3));
    CHECK(p.coeff(3, 1) == 3);
    CHECK(p.coeff(0, 0) == 0);
    CHECK(p.eval_one() == 6);
}

TEST_CASE("big coefficients do not overflow") {
    QTPoly p = 1 + q;
    QTPoly acc = 1;
    for (int i = 0; i < 80; ++i) acc *= p;
    // central coefficient of (1+q)^80
    CHECK(acc.coeff(40, 0) == mpz_class("107507208733336176461620"));
    CHECK(acc.eval_one() == mpz_class(1) << 80);
}

TEST_CASE("qbinom examples") {
    CHECK(delta::qbinom(4, 2) == 1 + q + QTPoly::monomial(2, 0, 2) + QTPoly::q_pow(3) + QTPoly::q_pow(4));
    for (int n = 0; n < 6; ++n) CHECK(delta::qbinom(n, 0) == QTPoly(1));
    CHECK(delta::qbinom(2, 3).is_zero());
    CHECK(delta::qbinom(3, -1).is_zero());
    CHECK(delta::q_power_binom2(0) == QTPoly(1));
    CHECK(delta::q_power_binom2(1) == QTPoly(1));
    CHECK(delta::q_power_binom2(3) == QTPoly::q_pow(3));
}

TEST_CASE("qbinom matches inversion counts") {
    for (int n = 0; n <= 15; ++n)
        for (int k = 0; k <= n; ++k) {
            INFO("n=" << n << " k=" << k);
            CHECK(delta::qbinom(n, k) == oracle::qbinom_by_inversions(n, k));
        }
}

TEST_CASE("qbinom properties") {
    for (int n = 1; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), n, k);
            CHECK(delta::qbinom(n, k).eval_one() == b);
            // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
            QTPoly rhs = delta::qbinom(n - 1, k - 1) + QTPoly::q_pow(k) * delta::qbinom(n - 1, k);
            CHECK(delta::qbinom(n, k) == rhs);
            CHECK(delta::qbinom(n, k) == delta::qbinom(n, n - k));
        }
}

TEST_CASE("qbinom is safe to call concurrently") {
    std::vector<std::thread> ts;
    std::vector<int> bad(8, 0);
    for (int w = 0; w < 8; ++w)
        ts.emplace_back([w, &bad] {
            for (int n = 40 + w; n >= 0; --n)
                for (int k = 0; k <= n; ++k)
                    if (delta::qbinom(n, k).eval(1, 1) != delta::qbinom(n, n - k).eval(1, 1)) ++bad[w];
        });
    for (auto& th : ts) th.join();
    for (int b : bad) CHECK(b == 0);
}

TEST_CASE("pretty printing") {
    CHECK(QTPoly{}.pretty() == "0");
    CHECK(QTPoly(1).pretty() == "1");
    CHECK((QTPoly::monomial(2, 1) + QTPoly::monomial(1, 0, 3)).pretty() == "q^2*t + 3*q");
    CHECK((t - QTPoly::monomial(0, 3, 2)).pretty() == "-2*t^3 + t");
    CHECK((q * t + QTPoly(-1)).pretty() == "q*t - 1");
}

TEST_CASE("json round trip") {
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        QTPoly a = random_poly(rng);
        CHECK(QTPoly::from_json(a.to_json()) == a);
        CHECK(QTPoly::from_json(nlohmann::json::parse(a.to_json().dump())) == a);
    }
    QTPoly big = QTPoly::monomial(1, 2, mpz_class("123456789012345678901234567890"));
    CHECK(big.to_json().dump() == R"([[1,2,"123456789012345678901234567890"]])");
    CHECK(QTPoly::from_json(big.to_json()) == big);
    CHECK(QTPoly{}.to_json().dump() == "[]");
}
