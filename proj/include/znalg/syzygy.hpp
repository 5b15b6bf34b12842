#pragma once

#include "znalg/abar.hpp"
#include "znalg/linalg.hpp"

#include <vector>

namespace znalg {

/// L(k) = alpha + k delta / 2.
Abar linear_L(int k);

/// P(k,l) = L(k) L(k+4) ... L(l); empty product (=1) when k > l.
/// Throws when k <= l and k != l (mod 4).
Abar prod_P(int k, int l);

/// Column indices h (0..n, h = m+1 mod 2) of the syzygy matrix.
std::vector<int> syzygy_cols(int n);
/// Row indices h' (0..n-2, h' = m+1 mod 2).
std::vector<int> syzygy_rows(int n);

/// Leading generators g(0)_h = P(2h-4m+1, 2h-3), degree m, rational coefficients.
std::vector<Abar> leading_gens(int n);

/// Subleading generators g(1)_h = m eps tau^{n-2h} P(-2h+5, -2h+4m-3), degree m-1.
std::vector<Abar> subleading_gens(int n);

/// Syzygy matrix S = S0 + S1 for the deformed ideal; m x (m+1),
/// rows indexed by h', columns by h.
struct SyzygyMatrix {
    int n = 1;
    int m = 0;
    std::vector<int> rows;                 // h' values
    std::vector<int> cols;                 // h values
    std::vector<std::vector<Abar>> s0;     // 2-banded, linear in (alpha, delta)
    std::vector<std::vector<Abar>> s1;     // constant in (alpha, delta)

    Abar entry(size_t r, size_t c) const { return s0[r][c] + s1[r][c]; }
};

/// S0 alone: -L(2h'+1) at h=h', L(2h'-4m+1) at h=h'+2.
SyzygyMatrix s0_matrix(int n);
/// Closed form for S1 placed into a copy of s0_matrix(n).
SyzygyMatrix s1_matrix_closed(int n);
/// S1 recomputed by solving g(0) S1 + g(1) S0 = 0 under the closed-form
/// sparsity pattern; throws on an inconsistent system.
SyzygyMatrix s1_matrix_solve(int n);

/// Signed maximal minors: minors[i] = (-1)^i det(S with column i deleted),
/// normalized so the leading part of minors[i] is g(0)_{cols[i]}.
std::vector<Abar> minors(const SyzygyMatrix& s);

/// Normal-form engine for the quotient Abar / <minors>; free R-module with
/// monomial basis {alpha^a delta^d : a+d <= m-1} over R = Laurent[eps].
class DnIdeal {
public:
    static DnIdeal build(int n);

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<int>& hs() const { return hs_; }
    const SyzygyMatrix& syzygy() const { return syz_; }
    /// Raw minors (= m! times the normalized generators).
    const std::vector<Abar>& gens_raw() const { return gens_raw_; }
    /// Normalized generators (minors / m!), leading part mumford_w_bar(n,m,h).
    const std::vector<Abar>& gens() const { return gens_; }
    /// Change of basis: g(0)_{hs[i]} = sum_j basis_change[i][j] alpha^{m-j} delta^j.
    const QMatrix& basis_change() const { return basis_change_; }
    const QMatrix& basis_change_inv() const { return basis_change_inv_; }
    /// Reduction images of the degree-m monomials alpha^{m-j} delta^j.
    const std::vector<Abar>& phi_table() const { return phi_table_; }

    /// Rank of the quotient as a free Laurent-ring module: (n^2-1)/4.
    int rank() const { return m_ * (m_ + 1); }

    /// Monomial basis (a, d), a+d <= m-1, ordered by (degree, a).
    const std::vector<M2>& basis() const { return basis_; }
    int basis_index(int a, int d) const;

    /// Unique representative of degree <= m-1 modulo the ideal; R-linear,
    /// idempotent, x - normal_form(x) lies in the ideal.
    Abar normal_form(const Abar& x) const;

    /// Coordinates of normal_form(x) in the monomial basis.
    std::vector<Eps> nf_coords(const Abar& x) const;

    /// Multiplication matrix of alpha, delta, or eps in the doubled monomial
    /// basis {alpha^a delta^d eps^e}, entries in the Laurent ring,
    /// size (n^2-1)/4.
    enum class Gen { alpha, delta, eps };
    std::vector<std::vector<Laurent>> mult_matrix(Gen g) const;

    /// Multiplication matrices over R in the undoubled basis.
    const std::vector<std::vector<Eps>>& mult_alpha() const { return mult_alpha_; }
    const std::vector<std::vector<Eps>>& mult_delta() const { return mult_delta_; }

    /// Full certification: generators reduce to zero, the multiplication
    /// matrices commute, and every generator vanishes on them; this pins the
    /// quotient as a free module on the monomial basis.
    bool certify() const;

private:
    int n_ = 1, m_ = 0;
    std::vector<int> hs_;
    SyzygyMatrix syz_;
    std::vector<Abar> gens_raw_, gens_;
    QMatrix basis_change_, basis_change_inv_;
    std::vector<Abar> phi_table_;
    std::vector<M2> basis_;
    std::vector<std::vector<Eps>> mult_alpha_, mult_delta_;
};

/// Result of expressing every minor in terms of the two distinguished ones
/// (columns h = m-1 and h = m+1) by back substitution along the syzygy rows.
struct TwoGenCertificate {
    bool ok = false;
    std::string detail;
};

/// Constructive check that the two minors at h = m-1, m+1 generate: solves the
/// syzygy relations for the remaining minors using unit pivots and verifies
/// the results against the actual minors.
TwoGenCertificate two_generator_certificate(const DnIdeal& ideal);

/// ---- Hilbert-scheme engine in the monomial frame ----
///
/// Degree-m forms are written in the basis x^{m-i} y^i (i = 0..m); phi_r maps
/// them to degree m-r forms, stored as an (m-r+1) x (m+1) matrix over R.
struct PhiMap {
    int m = 0;
    std::vector<std::vector<std::vector<Eps>>> comps;  // comps[r-1] = matrix of phi_r
};

/// Iteratively extend phi_1 to the full phi via the explicit right inverse
/// (discard negative powers, truncate); integral coefficients, valid over R.
PhiMap phi_iterate(const std::vector<std::vector<Eps>>& phi1, int m);

/// Generators x^{m-i} y^i - phi(x^{m-i} y^i) as Abar elements (x = alpha, y = delta).
std::vector<Abar> generators_from_phi(const PhiMap& phi);

/// Banded matrix of eq-type S1 from the monomial-frame subleading coefficients
/// G (size (m+1) x m): (m+1) x m output, rows 0..m, columns 0..m-1.
std::vector<std::vector<Eps>> s1_from_monomial_subleading(const std::vector<std::vector<Eps>>& g);

/// Standard monomial syzygy matrix ((m+1) x m: -y on the diagonal, x below).
std::vector<std::vector<Abar>> s0_monomial(int m);

/// Distraction of the monomial ideal: u_h = prod_{0<=j<h}(x-j) prod_{0<=l<m-h}(y-l).
std::vector<Abar> distraction_generators(int m);

}  // namespace znalg
