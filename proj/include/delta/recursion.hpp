#pragma once
#include <cstddef>
#include <optional>

#include "delta/qtpoly.hpp"

namespace delta {

struct FIndex {
    int n = 0, k = 0, p = 0, d = 0, l = 0;
    bool admissible() const;
    friend bool operator==(const FIndex&, const FIndex&) = default;
};

// k = n closed form: δ_{ℓ,0} q^{C(n-d,2)} [n, n-d]_q [n+p-1, p]_q.
QTPoly f_base(int n, int p, int d, int l);

// F_{n,k;p}^{(d,ℓ)} via the iterated recursion. Throws DomainError for a
// top-level index outside the domain (negative entries, or n ≥ 1 with
// n < k + ℓ or n + p < d); inside the recursion such terms are zero.
QTPoly f_eval(const FIndex& idx);
inline QTPoly f_eval(int n, int k, int p, int d, int l) { return f_eval(FIndex{n, k, p, d, l}); }
// Same value, but zero instead of DomainError outside the domain.
QTPoly f_value(const FIndex& idx);

// LHS minus RHS of the one-step recursion; nullopt when it does not apply
// (k = n, k = 0, or outside the domain). drop_s0 removes the s = 0 summand
// from the RHS, which is only useful to check that the checker can fail.
std::optional<QTPoly> f_onestep_residual(const FIndex& idx, bool drop_s0 = false);

// Σ_{k=1}^{n-ℓ} F_{n,k;p}^{(d,ℓ)}.
QTPoly schroeder_sum(int n, int l, int p, int d);

// Memo controls. The limit defaults to DELTA_MEMO_LIMIT (unset: unlimited);
// inserting past it throws MemoLimitExceeded.
std::size_t f_memo_size();
void f_memo_clear();
void f_memo_set_limit(std::optional<std::size_t> limit);
std::optional<std::size_t> f_memo_limit();

}  // namespace delta
