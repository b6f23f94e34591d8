#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "delta/dyck.hpp"
#include "delta/errors.hpp"
#include "delta/recursion.hpp"
#include "oracles.hpp"

using delta::f_eval;
using delta::FIndex;
using delta::QTPoly;

namespace {
const QTPoly q = QTPoly::q_pow(1);
const QTPoly t = QTPoly::t_pow(1);
}  // namespace

TEST_CASE("base case") {
    CHECK(delta::f_base(2, 0, 0, 0) == q);
    CHECK(delta::f_base(2, 1, 2, 0) == 1 + q);
    for (int l = 1; l < 4; ++l) CHECK(delta::f_base(3, 1, 1, l).is_zero());
}

TEST_CASE("small values") {
    CHECK(f_eval(2, 1, 0, 0, 0) == t);
    CHECK(f_eval(1, 1, 0, 0, 0) == QTPoly(1));
    CHECK(f_eval(0, 0, 0, 0, 0) == QTPoly(1));
    CHECK(f_eval(0, 1, 0, 0, 0).is_zero());
    CHECK(f_eval(0, 0, 1, 0, 0).is_zero());
    CHECK(f_eval(0, 0, 0, 2, 1).is_zero());
    CHECK(f_eval(3, 1, 0, 0, 0) == QTPoly::t_pow(3) + QTPoly::monomial(1, 2));
    CHECK(f_eval(3, 2, 0, 0, 0) == q * t + QTPoly::monomial(2, 1));
    CHECK(f_eval(3, 3, 0, 0, 0) == QTPoly::q_pow(3));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(f_eval(1, 2, 0, 0, 0), delta::DomainError);
    CHECK_THROWS_AS(f_eval(2, 1, 0, 0, 2), delta::DomainError);
    CHECK_THROWS_AS(f_eval(2, 1, 0, 3, 0), delta::DomainError);
    CHECK_THROWS_AS(f_eval(-1, 0, 0, 0, 0), delta::DomainError);
    CHECK(delta::f_value({1, 2, 0, 0, 0}).is_zero());
    CHECK(delta::f_value({2, 1, -1, 0, 0}).is_zero());
}

TEST_CASE("one-step recursion residual vanishes") {
    int applied = 0;
    for (int tot = 0; tot <= 6; ++tot)
        for (int n = 0; n <= tot; ++n) {
            int p = tot - n;
            for (int k = 0; k <= n; ++k)
                for (int l = 0; k + l <= n; ++l)
                    for (int d = 0; d <= n + p; ++d) {
                        auto r = delta::f_onestep_residual({n, k, p, d, l});
                        if (!r) continue;
                        ++applied;
                        INFO(n << " " << k << " " << p << " " << d << " " << l);
                        CHECK(r->is_zero());
                    }
        }
    CHECK(applied > 100);
    CHECK_FALSE(delta::f_onestep_residual({3, 3, 0, 0, 0}));
    CHECK_FALSE(delta::f_onestep_residual({3, 0, 0, 0, 0}));
}

TEST_CASE("perturbed recursion is caught") {
    auto r = delta::f_onestep_residual({4, 1, 1, 1, 1}, true);
    REQUIRE(r);
    CHECK_FALSE(r->is_zero());
}

TEST_CASE("values have non-negative coefficients") {
    for (int n = 1; n <= 5; ++n)
        for (int p = 0; n + p <= 6; ++p)
            for (int k = 1; k <= n; ++k)
                for (int l = 0; k + l <= n; ++l)
                    for (int d = 0; d <= n + p; ++d) {
                        QTPoly v = f_eval(n, k, p, d, l);
                        CHECK(v.nonnegative());
                    }
}

TEST_CASE("schroeder sum") {
    CHECK(delta::schroeder_sum(2, 0, 0, 0) == q + t);
    QTPoly c3 = QTPoly::q_pow(3) + QTPoly::monomial(2, 1) + QTPoly::monomial(1, 2) + QTPoly::t_pow(3) + q * t;
    CHECK(delta::schroeder_sum(3, 0, 0, 0) == c3);
    for (int n = 1; n <= 8; ++n) CHECK(delta::schroeder_sum(n, 0, 0, 0) == oracle::qt_catalan(n));
    for (int n = 2; n <= 5; ++n)
        for (int d = 0; d <= n; ++d) CHECK(delta::schroeder_sum(n, n - 1, 0, d) == f_eval(n, 1, 0, d, n - 1));
    CHECK_THROWS_AS(delta::schroeder_sum(2, 2, 0, 0), delta::DomainError);
    CHECK_THROWS_AS(delta::schroeder_sum(2, 0, 0, 3), delta::DomainError);
}

TEST_CASE("memo limit fails fast") {
    auto saved = delta::f_memo_limit();
    delta::f_memo_clear();
    delta::f_memo_set_limit(3);
    CHECK_THROWS_AS(f_eval(6, 2, 2, 1, 1), delta::MemoLimitExceeded);
    CHECK(delta::f_memo_size() <= 3);
    delta::f_memo_set_limit(saved);
    delta::f_memo_clear();
    CHECK(f_eval(3, 1, 0, 0, 0) == QTPoly::t_pow(3) + QTPoly::monomial(1, 2));
    CHECK(delta::f_memo_size() > 0);
}

TEST_CASE("concurrent evaluation agrees with sequential") {
    std::vector<FIndex> idx;
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (int d = 0; d <= n; ++d) idx.push_back({n, k, 1, d, 0});
    std::vector<QTPoly> seq;
    for (const auto& x : idx) seq.push_back(delta::f_value(x));
    delta::f_memo_clear();
    std::vector<std::vector<QTPoly>> par(6, std::vector<QTPoly>(idx.size()));
    std::vector<std::thread> ts;
    for (int w = 0; w < 6; ++w)
        ts.emplace_back([&, w] {
            for (std::size_t i = 0; i < idx.size(); ++i) {
                std::size_t j = (i * 5 + static_cast<std::size_t>(w) * 13) % idx.size();
                par[w][j] = delta::f_value(idx[j]);
            }
        });
    for (auto& th : ts) th.join();
    for (int w = 0; w < 6; ++w) CHECK(par[w] == seq);
}
