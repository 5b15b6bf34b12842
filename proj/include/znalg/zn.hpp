#pragma once

#include "znalg/mumford.hpp"
#include "znalg/syzygy.hpp"

#include <map>
#include <memory>

namespace znalg {

/// Shared store of D-ideal engines, one per odd strand count.
class DnCache {
public:
    const DnIdeal& get(int n) const;
    void put(DnIdeal ideal);
    bool has(int n) const { return ideals_.count(n) > 0; }
    std::vector<int> keys() const;

private:
    std::map<int, std::shared_ptr<DnIdeal>> ideals_;
};

/// Ensure engines for all odd n' <= n are present.
void ensure_dn_upto(DnCache& cache, int n);

/// Generator of the relation ideal for the n-strand braid algebra:
/// omega = w(0) + eps w(1) + lower, with w(0) the degree-m relation class for
/// eta and eps w(1) = eps tau^{n-2h} times the degree-(m-1) class for the
/// complement.
struct ZnGenerator {
    EtaSubset eta;
    AnElement omega;
    AnElement lower;  // the solved filtration <= m-2 tail
};

struct ZnIdeal {
    int n = 1;
    bool unit_ideal = false;                    // n = 1
    std::vector<ZnGenerator> orbit_reps;        // one per valid cardinality h
    std::map<uint32_t, ZnGenerator> by_eta;     // expanded to all valid eta
};

/// Basis of the S_eta x S_eta'-symmetric subspace of filtration degree <= dmax:
/// alpha^a q^b (orbit sum over |T ∩ eta| = j, |T ∩ eta'| = k) eps^e.
std::vector<AnElement> orbit_basis(const EtaSubset& eta, int dmax);

/// Representative sign vectors, one per orbit (j flips inside eta, k flips
/// inside the complement), restricted to n'(nu) > 0.
std::vector<SignVector> nu_orbit_reps(const EtaSubset& eta);

/// Image of x under the merge map attached to nu. The raw ring map sends
/// delta_i to nu_i delta; on top of that the eps-involution picks up one sign
/// per cancelling pair, so the odd part is negated when (n - n'(nu))/2 is odd.
/// With the product-form generator convention this is the unique eps
/// convention under which the membership constraints are solvable.
Abar merge_image(const AnElement& x, const SignVector& nu);

/// Same convention for the strand-merging map into n' = n - 2f strands.
AnElement merge_finger(const AnElement& x, int n_target);

/// Determine the unique omega = w(0) + eps w(1) + L whose image under every
/// sign map reduces to zero in the corresponding D-ideal engine.
ZnGenerator solve_lower_terms(const EtaSubset& eta, const DnCache& cache);

/// Assemble the full ideal for n strands (unit ideal when n = 1).
ZnIdeal zn_ideal(int n, DnCache& cache);

/// Cross-check a generator through the merge map to n-2 strands followed by
/// the sign-map membership tests there.
bool finger_check(const ZnGenerator& gen, int n, const DnCache& cache);

/// lhs = 2^{n-3}(n-1); rhs = sum_f C(n,f) ((n-2f)^2 - 1)/4.
std::pair<long long, long long> rank_identity(int n);

/// Poincare polynomial coefficients of the n-point representation variety,
/// from P_3 = 1 and P_{k+2} = (1+t^2)^2 P_k + (2t)^{k-1}; P_1 = 0.
std::vector<long long> poincare(int n);

/// Evaluate poincare(n) at t = 1.
long long poincare_at_one(int n);

struct QuotientRankResult {
    long long decomposition_count = 0;  // sum over sign vectors of D-ideal ranks
    long long direct_count = -1;        // linear-algebra count; -1 when skipped
    bool agree = false;
};

/// Rank of the quotient by the solved ideal. The decomposition count is exact;
/// the direct count reduces the span of {monomial * generator} inside the
/// filtration-(n-3) slice at a specialized tau, modulo two large primes.
QuotientRankResult quotient_rank_zn(const ZnIdeal& ideal, bool with_direct_count);

}  // namespace znalg
