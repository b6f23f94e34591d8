#pragma once
#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "json.hpp"

namespace delta {

// Sparse polynomial in q,t with integer coefficients. Terms with zero
// coefficient are never stored, so operator== is structural equality.
class QTPoly {
public:
    using Exp = std::pair<int, int>;  // (q exponent, t exponent)
    using Terms = std::map<Exp, mpz_class>;

    QTPoly() = default;
    QTPoly(long c);  // NOLINT: constant polynomial
    static QTPoly monomial(int qe, int te, const mpz_class& c = 1);
    static QTPoly q_pow(int e) { return monomial(e, 0); }
    static QTPoly t_pow(int e) { return monomial(0, e); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    mpz_class coeff(int qe, int te) const;

    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    // Multiply by c * q^qe t^te in place (cheap: no convolution).
    QTPoly& shift(int qe, int te, const mpz_class& c = 1);
    void add_term(int qe, int te, const mpz_class& c);

    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }

    mpz_class eval_one() const;  // value at q = t = 1
    mpz_class eval(long q, long t) const;
    bool nonnegative() const;
    // Swap the roles of q and t.
    QTPoly swapped() const;

    // "q^2*t + 3*q", terms by decreasing (q, t) exponent.
    std::string pretty() const;

    nlohmann::json to_json() const;
    static QTPoly from_json(const nlohmann::json& j);

private:
    Terms terms_;
};

inline QTPoly poly_add(const QTPoly& a, const QTPoly& b) { return a + b; }
inline QTPoly poly_mul(const QTPoly& a, const QTPoly& b) { return a * b; }

// Gaussian binomial [n choose k]_q; zero when k < 0 or n < k. Memoized and
// safe to call concurrently.
const QTPoly& qbinom(int n, int k);
// q^{s(s-1)/2}
QTPoly q_power_binom2(int s);
inline long binom2(long s) { return s * (s - 1) / 2; }

}  // namespace delta
