#include "znalg/zn.hpp"

#include <algorithm>
#include <numeric>

namespace znalg {

const DnIdeal& DnCache::get(int n) const {
    auto it = ideals_.find(n);
    if (it == ideals_.end()) throw std::invalid_argument("DnCache: missing n=" + std::to_string(n));
    return *it->second;
}

void DnCache::put(DnIdeal ideal) {
    int n = ideal.n();
    ideals_[n] = std::make_shared<DnIdeal>(std::move(ideal));
}

std::vector<int> DnCache::keys() const {
    std::vector<int> v;
    for (const auto& [n, p] : ideals_) v.push_back(n);
    return v;
}

void ensure_dn_upto(DnCache& cache, int n) {
    for (int k = 1; k <= n; k += 2)
        if (!cache.has(k)) cache.put(DnIdeal::build(k));
}

std::vector<AnElement> orbit_basis(const EtaSubset& eta, int dmax) {
    if (dmax < 0) throw std::invalid_argument("orbit_basis: dmax must be >= 0");
    int n = eta.n;
    int h = eta.h();
    // Orbit sums sigma_{j,k} = sum over |T ∩ eta| = j, |T ∩ eta'| = k of delta_T.
    std::vector<AnElement> basis;
    for (int d = 0; d <= dmax; ++d) {
        for (int a = 0; a <= d; ++a) {
            for (int b = 0; 2 * b <= d - a; ++b) {
                int rem = d - a - 2 * b;
                for (int j = 0; j <= std::min(rem, h); ++j) {
                    int k = rem - j;
                    if (k > n - h) continue;
                    AnElement sum(n);
                    uint32_t full = (1u << n) - 1u;
                    for (uint32_t t = 0; t <= full; ++t) {
                        if (__builtin_popcount(t & eta.bits) != j) continue;
                        if (__builtin_popcount(t & ~eta.bits & full) != k) continue;
                        sum.add_term(AnMono{a, b, t, 0}, Laurent(Rational(1)));
                    }
                    for (int e = 0; e <= 1; ++e)
                        basis.push_back(e == 0 ? sum : sum.times_eps());
                }
            }
        }
    }
    return basis;
}

std::vector<SignVector> nu_orbit_reps(const EtaSubset& eta) {
    int n = eta.n, h = eta.h();
    std::vector<int> in = eta.indices();
    std::vector<int> out = eta.complement().indices();
    std::vector<SignVector> reps;
    for (int j = 0; j <= h; ++j) {
        for (int k = 0; k <= n - h; ++k) {
            if (n - 2 * (j + k) <= 0) continue;
            std::vector<int> nu(n, 1);
            for (int t = 0; t < j; ++t) nu[in[t] - 1] = -1;
            for (int t = 0; t < k; ++t) nu[out[t] - 1] = -1;
            reps.emplace_back(std::move(nu));
        }
    }
    return reps;
}

Abar merge_image(const AnElement& x, const SignVector& nu) {
    Abar img = sign_map(x, nu);
    int f = (x.n() - nu.n_prime()) / 2;
    return (f % 2 == 1) ? img.flip_eps() : img;
}

AnElement merge_finger(const AnElement& x, int n_target) {
    AnElement img = finger_move(x, n_target);
    int f = (x.n() - n_target) / 2;
    return (f % 2 == 1) ? img.flip_eps() : img;
}

namespace {

/// Coordinates of an Abar element of degree <= dcap on the monomial basis
/// {alpha^a delta^d}, split into even/odd Laurent rows.
std::vector<Laurent> abar_coords(const Abar& x, int dcap) {
    std::vector<Laurent> v;
    for (int d = 0; d <= dcap; ++d)
        for (int a = 0; a <= dcap; ++a) {
            if (a + d > dcap) continue;
            Eps c = x.coeff(a, d);
            v.push_back(c.even);
            v.push_back(c.odd);
        }
    return v;
}

AnElement zn_base_element(const EtaSubset& eta) {
    int n = eta.n, m = (n - 1) / 2, h = eta.h();
    AnElement w0 = mumford_w(eta, m);
    AnElement w1 = mumford_w(eta.complement(), m - 1) * Laurent::tau(n - 2 * h);
    return w0 + w1.times_eps();
}

}  // namespace

ZnGenerator solve_lower_terms(const EtaSubset& eta, const DnCache& cache) {
    int n = eta.n, m = (n - 1) / 2;
    if (!eta_parity_ok(n, eta.h(), m))
        throw std::invalid_argument("solve_lower_terms: |eta| violates the parity condition");
    AnElement base = zn_base_element(eta);
    ZnGenerator gen{eta, base, AnElement(n)};
    std::vector<AnElement> basis = (m >= 2) ? orbit_basis(eta, m - 2) : std::vector<AnElement>{};

    std::vector<std::vector<Laurent>> rows;
    std::vector<Laurent> rhs;
    for (const SignVector& nu : nu_orbit_reps(eta)) {
        const DnIdeal& dn = cache.get(nu.n_prime());
        int dcap = std::max(dn.m() - 1, 0);
        std::vector<Laurent> base_c = abar_coords(dn.normal_form(merge_image(base, nu)), dcap);
        std::vector<std::vector<Laurent>> basis_c;
        for (const AnElement& bel : basis)
            basis_c.push_back(abar_coords(dn.normal_form(merge_image(bel, nu)), dcap));
        for (size_t coord = 0; coord < base_c.size(); ++coord) {
            std::vector<Laurent> row;
            bool nonzero = !base_c[coord].is_zero();
            for (const auto& bc : basis_c) {
                row.push_back(bc[coord]);
                nonzero = nonzero || !bc[coord].is_zero();
            }
            if (!nonzero) continue;
            rows.push_back(std::move(row));
            rhs.push_back(-base_c[coord]);
        }
    }

    if (!basis.empty()) {
        auto sol = solve_laurent_system(rows, rhs);
        if (!sol)
            throw std::logic_error("solve_lower_terms: inconsistent or underdetermined system");
        AnElement lower(n);
        for (size_t i = 0; i < basis.size(); ++i)
            lower += basis[i] * (*sol)[i];
        gen.lower = lower;
        gen.omega = base + lower;
    } else {
        for (const Laurent& r : rhs)
            if (!r.is_zero())
                throw std::logic_error("solve_lower_terms: nonzero residual with empty unknowns");
    }

    // Independent recheck of every orbit constraint on the assembled element.
    for (const SignVector& nu : nu_orbit_reps(eta)) {
        const DnIdeal& dn = cache.get(nu.n_prime());
        if (!dn.normal_form(merge_image(gen.omega, nu)).is_zero())
            throw std::logic_error("solve_lower_terms: constraint recheck failed");
    }
    return gen;
}

ZnIdeal zn_ideal(int n, DnCache& cache) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("zn_ideal: n must be odd and positive");
    ZnIdeal ideal;
    ideal.n = n;
    if (n == 1) {
        ideal.unit_ideal = true;
        return ideal;
    }
    ensure_dn_upto(cache, n);
    int m = (n - 1) / 2;
    for (int h = (m + 1) % 2; h <= n; h += 2) {
        EtaSubset rep = EtaSubset::first_h(n, h);
        ideal.orbit_reps.push_back(solve_lower_terms(rep, cache));
    }
    // Expand by the permutation action: map {1..h} onto eta order-preservingly.
    for (const ZnGenerator& rep : ideal.orbit_reps) {
        int h = rep.eta.h();
        uint32_t full = (1u << n) - 1u;
        for (uint32_t bits = 0; bits <= full; ++bits) {
            if (__builtin_popcount(bits) != h) continue;
            EtaSubset eta(n, bits);
            std::vector<int> perm(n);
            std::vector<int> tgt_in = eta.indices();
            std::vector<int> tgt_out = eta.complement().indices();
            for (int i = 0; i < h; ++i) perm[i] = tgt_in[i];
            for (int i = 0; i < n - h; ++i) perm[h + i] = tgt_out[i];
            ZnGenerator g{eta, rep.omega.permute_indices(perm), rep.lower.permute_indices(perm)};
            ideal.by_eta.emplace(bits, std::move(g));
        }
    }
    return ideal;
}

bool finger_check(const ZnGenerator& gen, int n, const DnCache& cache) {
    if (n < 3) throw std::invalid_argument("finger_check: n must be >= 3");
    int nt = n - 2;
    AnElement y = merge_finger(gen.omega, nt);
    uint32_t full = (1u << nt) - 1u;
    for (uint32_t bits = 0; bits <= full; ++bits) {
        int nprime = nt - 2 * __builtin_popcount(bits);
        if (nprime <= 0) continue;
        std::vector<int> nu(nt, 1);
        for (int i = 0; i < nt; ++i)
            if (bits & (1u << i)) nu[i] = -1;
        const DnIdeal& dn = cache.get(nprime);
        if (!dn.normal_form(merge_image(y, SignVector(nu))).is_zero()) return false;
    }
    return true;
}

std::pair<long long, long long> rank_identity(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("rank_identity: n must be odd, >= 3");
    long long lhs = (n - 1) * (1LL << (n - 3));
    long long rhs = 0;
    for (int f = 0; 2 * f <= n - 1; ++f) {
        long long binom = 1;
        for (int i = 0; i < f; ++i) binom = binom * (n - i) / (i + 1);
        long long nn = n - 2 * f;
        rhs += binom * ((nn * nn - 1) / 4);
    }
    return {lhs, rhs};
}

std::vector<long long> poincare(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("poincare: n must be odd and positive");
    std::vector<long long> p{0};  // P_1 = 0
    if (n == 1) return p;
    p = {1};  // P_3 = 1
    for (int k = 3; k < n; k += 2) {
        // P_{k+2} = (1+t^2)^2 P_k + (2t)^{k-1}
        std::vector<long long> next(p.size() + 4, 0);
        for (size_t i = 0; i < p.size(); ++i) {
            next[i] += p[i];
            next[i + 2] += 2 * p[i];
            next[i + 4] += p[i];
        }
        long long pw = 1;
        for (int i = 0; i < k - 1; ++i) pw *= 2;
        if (next.size() < static_cast<size_t>(k)) next.resize(k, 0);
        next[k - 1] += pw;
        while (!next.empty() && next.back() == 0) next.pop_back();
        p = std::move(next);
    }
    return p;
}

long long poincare_at_one(int n) {
    auto p = poincare(n);
    return std::accumulate(p.begin(), p.end(), 0LL);
}

QuotientRankResult quotient_rank_zn(const ZnIdeal& ideal, bool with_direct_count) {
    QuotientRankResult res;
    int n = ideal.n;
    for (int f = 0; 2 * f <= n; ++f) {
        long long binom = 1;
        for (int i = 0; i < f; ++i) binom = binom * (n - i) / (i + 1);
        long long nn = n - 2 * f;
        if (nn <= 0) continue;
        res.decomposition_count += binom * ((nn * nn - 1) / 4);
    }
    if (ideal.unit_ideal) {
        res.direct_count = 0;
        res.agree = (res.decomposition_count == 0);
        return res;
    }
    if (!with_direct_count) {
        res.agree = true;
        return res;
    }

    int m = (n - 1) / 2;
    int d = n - 3;  // top filtration degree of the quotient
    // Index the monomial basis of the filtration <= d slice.
    std::map<AnMono, int> index;
    {
        uint32_t full = (1u << n) - 1u;
        int pos = 0;
        for (uint32_t t = 0; t <= full; ++t) {
            int tc = __builtin_popcount(t);
            if (tc > d) continue;
            for (int a = 0; a + tc <= d; ++a)
                for (int b = 0; a + 2 * b + tc <= d; ++b)
                    for (int e = 0; e <= 1; ++e)
                        index[AnMono{a, b, t, e}] = pos++;
        }
    }
    int dim = static_cast<int>(index.size());

    // Rank of the span of {u * omega_eta} inside the slice, at tau = 7/5,
    // modulo two primes; each mod-p rank is a lower bound for the generic
    // rank, so hitting dim - decomposition_count certifies the count.
    Rational tau0(7, 5);
    long long expected_rank = dim - res.decomposition_count;
    for (uint64_t prime : {2305843009213693951ull, 4611686018427387847ull}) {
        ModpRank rk(dim, prime);
        bool bad_prime = false;
        for (const auto& [bits, gen] : ideal.by_eta) {
            for (const auto& [umono, one] : index) {
                if (umono.degree() + m > d) continue;
                AnElement u(n);
                u.add_term(umono, Laurent(Rational(1)));
                AnElement prod = u * gen.omega;
                QVector row(dim, Rational(0));
                bool fits = true;
                for (const auto& [mm, c] : prod.terms()) {
                    auto it = index.find(mm);
                    if (it == index.end()) { fits = false; break; }
                    row[it->second] = c.eval(tau0);
                }
                if (!fits) throw std::logic_error("quotient_rank_zn: product left the slice");
                if (!rk.add_row(row)) { bad_prime = true; break; }
            }
            if (bad_prime) break;
        }
        if (bad_prime) continue;
        if (rk.rank() == expected_rank) {
            res.direct_count = dim - rk.rank();
            res.agree = true;
            return res;
        }
        res.direct_count = dim - rk.rank();
    }
    if (res.direct_count != res.decomposition_count)
        throw std::logic_error("quotient_rank_zn: direct count " +
                               std::to_string(res.direct_count) + " disagrees with the " +
                               "decomposition count " +
                               std::to_string(res.decomposition_count));
    res.agree = true;
    return res;
}

}  // namespace znalg
