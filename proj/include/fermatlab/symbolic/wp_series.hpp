#pragma once

#include <vector>

#include "fermatlab/symbolic/laurent.hpp"
#include "fermatlab/wp/invariants.hpp"

namespace fermatlab::symbolic {

/// g₂ or g₃ in the requested coefficient field; exact mode throws NotExact
/// for invariants without rational-complex values.
template <class C>
C invariantG2(const wp::Invariants& inv);
template <class C>
C invariantG3(const wp::Invariants& inv);

/// Laurent coefficients c_k of ℘(w) = w⁻² + Σ_{k≥2} c_k w^{2k−2}, indexed by k
/// (entries 0 and 1 are zero), for k ≤ maxIndex:
///   c₂ = g₂/20, c₃ = g₃/28, c_k = 3/((2k+1)(k−3)) Σ_{j=2}^{k−2} c_j c_{k−j}.
template <class C>
std::vector<C> weierstrassCoefficients(const C& g2, const C& g3, int maxIndex);

/// ℘ about the origin, every exponent ≤ order included. Requires order ≥ 4.
template <class C>
LaurentSeries<C> wpSeries(const wp::Invariants& inv, int order);

/// (℘′)² − 4℘³ + g₂℘ + g₃ through exponent `order` (≥ 10); vanishes identically.
template <class C>
LaurentSeries<C> odeResidualSeries(const wp::Invariants& inv, int order);

/// ℘(s) and ℘′(s) for an inner series s with s(0) = 0.
template <class C>
LaurentSeries<C> wpOfSeries(const wp::Invariants& inv, const LaurentSeries<C>& s);
template <class C>
LaurentSeries<C> wpPrimeOfSeries(const wp::Invariants& inv, const LaurentSeries<C>& s);

}  // namespace fermatlab::symbolic
