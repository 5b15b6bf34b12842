#pragma once

#include "znalg/an_element.hpp"

namespace znalg {

/// Subset eta of the n marked points, as a bitset.
struct EtaSubset {
    int n = 1;
    uint32_t bits = 0;

    EtaSubset() = default;
    EtaSubset(int n_, uint32_t bits_);
    static EtaSubset first_h(int n, int h);  // {1..h}

    int h() const { return __builtin_popcount(bits); }
    bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
    EtaSubset complement() const { return EtaSubset(n, ~bits & ((1u << n) - 1u)); }
    std::vector<int> indices() const;
};

/// Parity condition linking |eta| to the Chern degree k: h = k+1 (mod 2).
bool eta_parity_ok(int n, int h, int k);

/// B_eta = alpha + (1/2) sum_{p in eta} delta_p - (1/2) sum_{p not in eta} delta_p.
AnElement b_eta(const EtaSubset& eta);

/// Degree-k relation class via the product formula:
/// k! w^k = prod_{j = -k+1, step 2}^{k-1} (B_eta + j delta_ref), delta_ref = delta_1.
AnElement mumford_w(const EtaSubset& eta, int k, int delta_ref = 1);

/// Image of mumford_w in Abar; depends on eta only through h = |eta|.
Abar mumford_w_bar(int n, int k, int h);

/// Truncated Chern character of minus the index family:
/// A_lambda cosh(delta_1) + (sinh(delta_1)/delta_1) B_eta, graded components 0..order.
struct TruncatedSeries {
    std::vector<AnElement> coefficients;  // index = filtration degree
};

TruncatedSeries chern_character_series(const EtaSubset& eta, const Rational& lambda, int order);

/// Newton-identity conversion ch -> c_k.
AnElement chern_class_from_character(const TruncatedSeries& ch, int k);

/// Coefficient of t^k in (1+t^2 beta)^{(k-1)/2} * ((1+t delta)/(1-t delta))^{B/(2 delta)}.
AnElement total_chern_series(const EtaSubset& eta, int k);

/// Linear independence of the 2^{n-1} degree-m classes, via the beta=0, alpha=1
/// specialization matrix: pairwise orthogonal columns with nonzero norms.
bool independence_check(int n);

}  // namespace znalg
