#include "delta/recursion.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "delta/errors.hpp"

namespace delta {

bool FIndex::admissible() const {
    if (n < 0 || k < 0 || p < 0 || d < 0 || l < 0) return false;
    return n >= k + l && n + p >= d;
}

namespace {

struct KeyHash {
    std::size_t operator()(const FIndex& i) const {
        std::size_t h = 0;
        for (int v : {i.n, i.k, i.p, i.d, i.l}) h = h * 1000003u + static_cast<std::size_t>(v);
        return h;
    }
};

std::optional<std::size_t> env_limit() {
    const char* s = std::getenv("DELTA_MEMO_LIMIT");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0') return std::nullopt;
    return static_cast<std::size_t>(v);
}

struct Memo {
    std::shared_mutex mu;
    std::unordered_map<FIndex, std::shared_ptr<const QTPoly>, KeyHash> map;
    std::optional<std::size_t> limit = env_limit();
};

Memo& memo() {
    static Memo m;
    return m;
}

using PolyPtr = std::shared_ptr<const QTPoly>;

PolyPtr zero_ptr() {
    static const PolyPtr z = std::make_shared<const QTPoly>();
    return z;
}

PolyPtr eval(const FIndex& x);

PolyPtr compute(const FIndex& x) {
    const auto [n, k, p, d, l] = x;
    if (n == 0) return std::make_shared<const QTPoly>(1);  // only F_{0,0;0}^{(0,0)} gets here
    if (k == n) return std::make_shared<const QTPoly>(f_base(n, p, d, l));

    QTPoly total;
    for (int j = 0; j <= p; ++j) {
        for (int s = 0; s <= k; ++s) {
            QTPoly outer = qbinom(k, s) * qbinom(k + j - 1, j);
            if (outer.is_zero()) continue;
            outer.shift(static_cast<int>(binom2(s)), p - j);
            QTPoly inner;
            for (int u = 0; u <= n - k - l; ++u) {
                for (int v = 0; v <= s + j; ++v) {
                    PolyPtr f = eval({n - k, u + v, p - j, d - k + s, l - v});
                    if (f->is_zero()) continue;
                    QTPoly c = qbinom(s + j, v) * qbinom(s + j + u - 1, u);
                    if (c.is_zero()) continue;
                    c.shift(static_cast<int>(binom2(v)), 0);
                    inner += c * *f;
                }
            }
            if (!inner.is_zero()) total += outer * inner;
        }
    }
    total.shift(0, n - k - l);
    return std::make_shared<const QTPoly>(std::move(total));
}

PolyPtr eval(const FIndex& x) {
    // Trivial zeros are not memoized.
    if (x.n < 0 || x.k < 0 || x.p < 0 || x.d < 0 || x.l < 0) return zero_ptr();
    if (x.n > 0 && (x.k == 0 || !x.admissible())) return zero_ptr();
    if (x.n == 0 && (x.k || x.p || x.d || x.l)) return zero_ptr();
    auto& m = memo();
    {
        std::shared_lock lk(m.mu);
        auto it = m.map.find(x);
        if (it != m.map.end()) return it->second;
    }
    // Computed outside the lock; a concurrent duplicate is harmless.
    PolyPtr v = compute(x);
    std::unique_lock lk(m.mu);
    auto it = m.map.find(x);
    if (it != m.map.end()) return it->second;
    if (m.limit && m.map.size() >= *m.limit)
        throw MemoLimitExceeded("F memo limit of " + std::to_string(*m.limit) + " entries exceeded");
    m.map.emplace(x, v);
    return v;
}

void check_top(const FIndex& x) {
    if (x.n < 0 || x.k < 0 || x.p < 0 || x.d < 0 || x.l < 0)
        throw DomainError("F index entries must be non-negative");
    if (x.n == 0) return;  // covered by the initial conditions
    if (!x.admissible()) throw DomainError("F index outside n >= k + l, n + p >= d");
}

}  // namespace

QTPoly f_base(int n, int p, int d, int l) {
    if (l != 0 || n - d < 0) return {};
    QTPoly r = qbinom(n, n - d) * qbinom(n + p - 1, p);
    return r.shift(static_cast<int>(binom2(n - d)), 0);
}

QTPoly f_eval(const FIndex& idx) {
    check_top(idx);
    return *eval(idx);
}

QTPoly f_value(const FIndex& idx) { return *eval(idx); }

std::optional<QTPoly> f_onestep_residual(const FIndex& idx, bool drop_s0) {
    const auto [n, k, p, d, l] = idx;
    if (!idx.admissible() || k < 1 || k >= n) return std::nullopt;
    QTPoly rhs;
    for (int j = 0; j <= p; ++j) {
        for (int s = drop_s0 ? 1 : 0; s <= k; ++s) {
            QTPoly c = qbinom(k, s) * qbinom(k + j - 1, j);
            if (c.is_zero()) continue;
            c.shift(static_cast<int>(binom2(s)), 0);
            PolyPtr f = eval({n + p - d, s + j, n - l - k, n + p - d - l, n - d - s});
            rhs += c * *f;
        }
    }
    rhs.shift(0, n - l - k);
    return *eval(idx) - rhs;
}

QTPoly schroeder_sum(int n, int l, int p, int d) {
    if (n < 0 || l < 0 || p < 0 || d < 0 || n < l + 1 || n < d)
        throw DomainError("schroeder sum needs n >= l + 1 and n >= d");
    QTPoly s;
    for (int k = 1; k <= n - l; ++k) s += *eval({n, k, p, d, l});
    return s;
}

std::size_t f_memo_size() {
    std::shared_lock lk(memo().mu);
    return memo().map.size();
}

void f_memo_clear() {
    std::unique_lock lk(memo().mu);
    memo().map.clear();
}

void f_memo_set_limit(std::optional<std::size_t> limit) {
    std::unique_lock lk(memo().mu);
    memo().limit = limit;
}

std::optional<std::size_t> f_memo_limit() {
    std::shared_lock lk(memo().mu);
    return memo().limit;
}

}  // namespace delta
