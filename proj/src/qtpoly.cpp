#include "delta/qtpoly.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <vector>

#include "delta/errors.hpp"

namespace delta {

QTPoly::QTPoly(long c) {
    if (c != 0) terms_.emplace(Exp{0, 0}, mpz_class(c));
}

QTPoly QTPoly::monomial(int qe, int te, const mpz_class& c) {
    QTPoly p;
    if (c != 0) p.terms_.emplace(Exp{qe, te}, c);
    return p;
}

mpz_class QTPoly::coeff(int qe, int te) const {
    auto it = terms_.find({qe, te});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void QTPoly::add_term(int qe, int te, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(Exp{qe, te}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly& QTPoly::shift(int qe, int te, const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    Terms out;
    for (auto& [e, v] : terms_) out.emplace_hint(out.end(), Exp{e.first + qe, e.second + te}, v * c);
    terms_ = std::move(out);
    return *this;
}

mpz_class QTPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

mpz_class QTPoly::eval(long q, long t) const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class qp, tp;
        mpz_pow_ui(qp.get_mpz_t(), mpz_class(q).get_mpz_t(), e.first);
        mpz_pow_ui(tp.get_mpz_t(), mpz_class(t).get_mpz_t(), e.second);
        s += c * qp * tp;
    }
    return s;
}

bool QTPoly::nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

QTPoly QTPoly::swapped() const {
    QTPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exp{e.second, e.first}, c);
    return r;
}

static void put_var(std::ostringstream& os, char v, int e, bool& first) {
    if (e == 0) return;
    if (!first) os << '*';
    os << v;
    if (e > 1) os << '^' << e;
    first = false;
}

std::string QTPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [qe, te] = it->first;
        mpz_class c = it->second;
        if (!lead) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        lead = false;
        mpz_class a = abs(c);
        bool first = true;
        if (a != 1 || (qe == 0 && te == 0)) {
            os << a.get_str();
            first = false;
        }
        put_var(os, 'q', qe, first);
        put_var(os, 't', te, first);
    }
    return os.str();
}

nlohmann::json QTPoly::to_json() const {
    auto j = nlohmann::json::array();
    for (const auto& [e, c] : terms_) j.push_back({e.first, e.second, c.get_str()});
    return j;
}

QTPoly QTPoly::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
    QTPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
            !t[2].is_string())
            throw ParseError("polynomial term must be [q_exp, t_exp, \"coeff\"]");
        int qe = t[0].get<int>(), te = t[1].get<int>();
        if (qe < 0 || te < 0) throw ParseError("negative exponent");
        mpz_class c;
        if (c.set_str(t[2].get<std::string>(), 10) != 0) throw ParseError("bad coefficient");
        p.add_term(qe, te, c);
    }
    return p;
}

// q-Pascal table, grown row by row. Rows are never moved once published
// (deque), so readers can keep references.
namespace {
struct QBinomTable {
    std::shared_mutex mu;
    std::deque<std::vector<QTPoly>> rows;
};
QBinomTable& table() {
    static QBinomTable t;
    return t;
}
const QTPoly& zero_poly() {
    static const QTPoly z;
    return z;
}
}  // namespace

const QTPoly& qbinom(int n, int k) {
    if (k < 0 || n < k) return zero_poly();
    auto& tb = table();
    {
        std::shared_lock lk(tb.mu);
        if (n < static_cast<int>(tb.rows.size())) return tb.rows[n][k];
    }
    std::unique_lock lk(tb.mu);
    while (static_cast<int>(tb.rows.size()) <= n) {
        int r = static_cast<int>(tb.rows.size());
        std::vector<QTPoly> row(r + 1);
        row[0] = 1;
        row[r] = 1;
        for (int j = 1; j < r; ++j) {
            QTPoly x = tb.rows[r - 1][j];
            x.shift(j, 0);
            row[j] = tb.rows[r - 1][j - 1] + x;
        }
        tb.rows.push_back(std::move(row));
    }
    return tb.rows[n][k];
}

QTPoly q_power_binom2(int s) { return QTPoly::q_pow(static_cast<int>(binom2(s))); }

}  // namespace delta
