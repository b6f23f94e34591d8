#pragma once
#include "delta/dyck.hpp"
#include "delta/polyomino.hpp"

namespace delta {

// DDd(m,n\r)^{*a,∘b} -> DDb(m,n\r)^{△b,∘a}; (dinv, area) becomes (area, bounce).
DecoratedDyckPath sweep(const DecoratedDyckPath& d);
DecoratedDyckPath sweep_inv(const DecoratedDyckPath& e);

// RP(m\r,n)^{∘k,j} -> RP(m\r,n)^{*k,j}; (area, bounce) becomes (dinv, area).
ReducedPolyomino zeta(const ReducedPolyomino& p);
ReducedPolyomino zeta_inv(const ReducedPolyomino& q);

// RP(m\r,n)^{*k,j} -> DD(n-j, m+1\r)^{*k,∘(m+1-j)}, preserving (dinv, area).
DecoratedDyckPath poly_to_dyck(const ReducedPolyomino& p);
ReducedPolyomino dyck_to_poly(const DecoratedDyckPath& d);

}  // namespace delta
