#include "znalg/syzygy.hpp"

#include "znalg/mumford.hpp"

#include <sstream>

namespace znalg {

namespace {

Rational factorial(int k) {
    Rational r(1);
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

bool is_unit_scalar(const Abar& x) {
    if (x.terms().size() != 1) return false;
    const auto& [m, c] = *x.terms().begin();
    if (m.a != 0 || m.d != 0) return false;
    bool even_mono = !c.even.is_zero() && c.even.is_monomial() && c.odd.is_zero();
    bool odd_mono = !c.odd.is_zero() && c.odd.is_monomial() && c.even.is_zero();
    return even_mono || odd_mono;
}

}  // namespace

Abar linear_L(int k) {
    return Abar::alpha() + Abar::delta() * make_rational(k, 2);
}

Abar prod_P(int k, int l) {
    if (k > l) return Abar(Rational(1));
    if ((l - k) % 4 != 0) throw std::invalid_argument("prod_P: k != l mod 4");
    Abar r(Rational(1));
    for (int j = k; j <= l; j += 4) r *= linear_L(j);
    return r;
}

std::vector<int> syzygy_cols(int n) {
    int m = (n - 1) / 2;
    std::vector<int> hs;
    for (int h = (m + 1) % 2; h <= n; h += 2) hs.push_back(h);
    return hs;
}

std::vector<int> syzygy_rows(int n) {
    int m = (n - 1) / 2;
    std::vector<int> hs;
    for (int h = (m + 1) % 2; h <= n - 2; h += 2) hs.push_back(h);
    return hs;
}

std::vector<Abar> leading_gens(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("leading_gens: n must be odd");
    int m = (n - 1) / 2;
    std::vector<Abar> g;
    for (int h : syzygy_cols(n)) g.push_back(prod_P(2 * h - 4 * m + 1, 2 * h - 3));
    return g;
}

std::vector<Abar> subleading_gens(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("subleading_gens: n must be odd");
    int m = (n - 1) / 2;
    std::vector<Abar> g;
    for (int h : syzygy_cols(n)) {
        Abar p = prod_P(-2 * h + 5, -2 * h + 4 * m - 3);
        g.push_back(p * Eps::eps_tau(n - 2 * h, Rational(m)));
    }
    return g;
}

SyzygyMatrix s0_matrix(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("s0_matrix: n must be odd");
    SyzygyMatrix s;
    s.n = n;
    s.m = (n - 1) / 2;
    s.rows = syzygy_rows(n);
    s.cols = syzygy_cols(n);
    s.s0.assign(s.rows.size(), std::vector<Abar>(s.cols.size()));
    s.s1.assign(s.rows.size(), std::vector<Abar>(s.cols.size()));
    for (size_t r = 0; r < s.rows.size(); ++r) {
        int hp = s.rows[r];
        for (size_t c = 0; c < s.cols.size(); ++c) {
            int h = s.cols[c];
            if (h == hp) s.s0[r][c] = -linear_L(2 * hp + 1);
            else if (h == hp + 2) s.s0[r][c] = linear_L(2 * hp - 4 * s.m + 1);
        }
    }
    return s;
}

SyzygyMatrix s1_matrix_closed(int n) {
    SyzygyMatrix s = s0_matrix(n);
    int m = s.m;
    auto col_of = [&](int h) -> int {
        for (size_t c = 0; c < s.cols.size(); ++c)
            if (s.cols[c] == h) return static_cast<int>(c);
        return -1;
    };
    for (size_t r = 0; r < s.rows.size(); ++r) {
        int hp = s.rows[r];
        struct Slot { int h; Eps v; };
        std::vector<Slot> slots;
        slots.push_back({n - hp - 3, Eps::eps_tau(n - 4 - 2 * hp, Rational(-n + 2 + hp))});
        Eps mid = Eps::eps_tau(n - 4 - 2 * hp, Rational(m - hp - 1)) +
                  Eps::eps_tau(n - 2 * hp, Rational(m - hp));
        slots.push_back({n - hp - 1, mid});
        slots.push_back({n - hp + 1, Eps::eps_tau(n - 2 * hp, Rational(hp))});
        for (const auto& slot : slots) {
            int c = (slot.h >= 0 && slot.h <= n) ? col_of(slot.h) : -1;
            if (c >= 0 && !slot.v.is_zero()) s.s1[r][c] = Abar::scalar(slot.v);
        }
    }
    return s;
}

SyzygyMatrix s1_matrix_solve(int n) {
    SyzygyMatrix s = s0_matrix(n);
    int m = s.m;
    std::vector<Abar> g0 = leading_gens(n);
    std::vector<Abar> g1 = subleading_gens(n);
    auto col_of = [&](int h) -> int {
        for (size_t c = 0; c < s.cols.size(); ++c)
            if (s.cols[c] == h) return static_cast<int>(c);
        return -1;
    };
    for (size_t r = 0; r < s.rows.size(); ++r) {
        int hp = s.rows[r];
        std::vector<int> pos;
        for (int h : {n - hp - 3, n - hp - 1, n - hp + 1}) {
            int c = (h >= 0 && h <= n) ? col_of(h) : -1;
            if (c >= 0) pos.push_back(c);
        }
        // rhs = -(S0 row applied to g(1)) = L(2h'+1) g(1)_{h'} - L(2h'-4m+1) g(1)_{h'+2}
        Abar rhs;
        for (size_t c = 0; c < s.cols.size(); ++c)
            if (!s.s0[r][c].is_zero()) rhs -= s.s0[r][c] * g1[c];
        // Equate coefficients in the degree-m monomial basis.
        QMatrix a(m + 1, QVector(pos.size(), Rational(0)));
        std::vector<Eps> b(m + 1);
        for (int j = 0; j <= m; ++j) {
            for (size_t pc = 0; pc < pos.size(); ++pc) {
                Eps cc = g0[pos[pc]].coeff(m - j, j);
                if (!cc.odd.is_zero() || (!cc.even.is_zero() && !cc.even.is_monomial()))
                    throw std::logic_error("s1_matrix_solve: non-rational leading coefficient");
                a[j][pc] = cc.even.coeff(0);
            }
            b[j] = rhs.coeff(m - j, j);
        }
        auto x = solve_q_system_eps(a, b);
        if (!x) throw std::logic_error("s1_matrix_solve: inconsistent system");
        for (size_t pc = 0; pc < pos.size(); ++pc)
            s.s1[r][pos[pc]] = Abar::scalar((*x)[pc]);
    }
    return s;
}

std::vector<Abar> minors(const SyzygyMatrix& s) {
    size_t mrows = s.rows.size(), mcols = s.cols.size();
    std::vector<Abar> out;
    for (size_t skip = 0; skip < mcols; ++skip) {
        std::vector<std::vector<Abar>> sub(mrows);
        for (size_t r = 0; r < mrows; ++r)
            for (size_t c = 0; c < mcols; ++c)
                if (c != skip) sub[r].push_back(s.entry(r, c));
        Abar d = det_abar(sub);
        out.push_back(skip % 2 == 0 ? d : -d);
    }
    return out;
}

DnIdeal DnIdeal::build(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("DnIdeal: n must be odd and positive");
    DnIdeal ideal;
    ideal.n_ = n;
    ideal.m_ = (n - 1) / 2;
    int m = ideal.m_;
    ideal.hs_ = syzygy_cols(n);
    ideal.syz_ = s1_matrix_closed(n);
    ideal.gens_raw_ = minors(ideal.syz_);

    std::vector<Abar> g0 = leading_gens(n);
    for (size_t i = 0; i < ideal.gens_raw_.size(); ++i) {
        if (ideal.gens_raw_[i].graded_part(m) != g0[i])
            throw std::logic_error("DnIdeal: minor leading part mismatch");
        ideal.gens_.push_back(ideal.gens_raw_[i] * (Rational(1) / factorial(m)));
    }

    // Change of basis from the degree-m monomials to the leading generators.
    ideal.basis_change_.assign(m + 1, QVector(m + 1, Rational(0)));
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            Eps c = g0[i].coeff(m - j, j);
            if (!c.odd.is_zero()) throw std::logic_error("DnIdeal: eps in leading generator");
            ideal.basis_change_[i][j] = c.even.coeff(0);
        }
    }
    auto inv = qmatrix_inverse(ideal.basis_change_);
    if (!inv) throw std::logic_error("DnIdeal: leading generators do not span (rank deficiency)");
    ideal.basis_change_inv_ = *inv;

    // phi_table[j]: image of alpha^{m-j} delta^j modulo the ideal,
    // namely sum_i Binv[j][i] (g(0)_i - minor_i), of degree <= m-1.
    for (int j = 0; j <= m; ++j) {
        Abar img;
        for (int i = 0; i <= m; ++i) {
            Rational c = ideal.basis_change_inv_[j][i];
            if (c == 0) continue;
            img += (g0[i] - ideal.gens_raw_[i]) * c;
        }
        if (img.degree() >= m) throw std::logic_error("DnIdeal: phi image degree too large");
        ideal.phi_table_.push_back(img);
    }

    for (int deg = 0; deg <= m - 1; ++deg)
        for (int a = deg; a >= 0; --a) ideal.basis_.push_back({a, deg - a});

    // Multiplication matrices in the monomial basis.
    size_t nb = ideal.basis_.size();
    ideal.mult_alpha_.assign(nb, std::vector<Eps>(nb));
    ideal.mult_delta_.assign(nb, std::vector<Eps>(nb));
    for (size_t u = 0; u < nb; ++u) {
        M2 mu = ideal.basis_[u];
        Abar xa = Abar::mono(mu.a + 1, mu.d, Eps(1L));
        Abar xd = Abar::mono(mu.a, mu.d + 1, Eps(1L));
        auto ca = ideal.nf_coords(xa);
        auto cd = ideal.nf_coords(xd);
        for (size_t v = 0; v < nb; ++v) {
            ideal.mult_alpha_[v][u] = ca[v];
            ideal.mult_delta_[v][u] = cd[v];
        }
    }
    return ideal;
}

int DnIdeal::basis_index(int a, int d) const {
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].a == a && basis_[i].d == d) return static_cast<int>(i);
    throw std::invalid_argument("basis_index: not a basis monomial");
}

Abar DnIdeal::normal_form(const Abar& x) const {
    Abar cur = x;
    int deg = cur.degree();
    while (deg >= m_) {
        Abar top = cur.graded_part(deg);
        Abar rest = cur - top;
        Abar replaced;
        for (const auto& [mm, c] : top.terms()) {
            // factor the monomial as (degree deg-m) * (degree m)
            int a1 = std::min(mm.a, m_);
            int j = m_ - a1;  // delta-part of the degree-m factor
            Abar cof = Abar::mono(mm.a - a1, mm.d - j, c);
            replaced += cof * phi_table_[j];
        }
        cur = rest + replaced;
        deg = cur.degree();
    }
    return cur;
}

std::vector<Eps> DnIdeal::nf_coords(const Abar& x) const {
    Abar nf = normal_form(x);
    std::vector<Eps> v(basis_.size());
    for (const auto& [mm, c] : nf.terms()) {
        bool found = false;
        for (size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == mm) { v[i] = c; found = true; break; }
        if (!found) throw std::logic_error("nf_coords: normal form outside basis");
    }
    return v;
}

std::vector<std::vector<Laurent>> DnIdeal::mult_matrix(Gen g) const {
    size_t nb = basis_.size();
    size_t nn = 2 * nb;  // doubled by eps
    std::vector<std::vector<Laurent>> out(nn, std::vector<Laurent>(nn));
    if (g == Gen::eps) {
        for (size_t u = 0; u < nb; ++u) {
            out[u + nb][u] = Laurent(Rational(1));
            out[u][u + nb] = Laurent(Rational(1));
        }
        return out;
    }
    const auto& mat = (g == Gen::alpha) ? mult_alpha_ : mult_delta_;
    for (size_t v = 0; v < nb; ++v) {
        for (size_t u = 0; u < nb; ++u) {
            const Eps& c = mat[v][u];
            out[v][u] = c.even;
            out[v + nb][u] = c.odd;
            out[v][u + nb] = c.odd;
            out[v + nb][u + nb] = c.even;
        }
    }
    return out;
}

namespace {

using EpsMatrix = std::vector<std::vector<Eps>>;

EpsMatrix eps_identity(size_t n) {
    EpsMatrix r(n, std::vector<Eps>(n));
    for (size_t i = 0; i < n; ++i) r[i][i] = Eps(1L);
    return r;
}

EpsMatrix eps_mul(const EpsMatrix& a, const EpsMatrix& b) {
    size_t n = a.size();
    EpsMatrix r(n, std::vector<Eps>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

bool eps_matrix_zero(const EpsMatrix& a) {
    for (const auto& row : a)
        for (const auto& c : row)
            if (!c.is_zero()) return false;
    return true;
}

}  // namespace

bool DnIdeal::certify() const {
    for (const Abar& g : gens_raw_)
        if (!normal_form(g).is_zero()) return false;
    size_t nb = basis_.size();
    if (nb == 0) return true;  // n = 1: unit ideal, rank 0

    // Commuting multiplication matrices...
    EpsMatrix ab = eps_mul(mult_alpha_, mult_delta_);
    EpsMatrix ba = eps_mul(mult_delta_, mult_alpha_);
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j)
            if (ab[i][j] != ba[i][j]) return false;

    // ...on which every generator vanishes. Together with the triangular
    // action on the monomial basis this certifies the quotient is free with
    // that basis: evaluation at (M_alpha, M_delta) splits any relation.
    std::vector<EpsMatrix> apow(m_ + 1), dpow(m_ + 1);
    apow[0] = dpow[0] = eps_identity(nb);
    for (int i = 1; i <= m_; ++i) {
        apow[i] = eps_mul(apow[i - 1], mult_alpha_);
        dpow[i] = eps_mul(dpow[i - 1], mult_delta_);
    }
    for (const Abar& g : gens_raw_) {
        EpsMatrix acc(nb, std::vector<Eps>(nb));
        for (const auto& [mm, c] : g.terms()) {
            EpsMatrix t = eps_mul(apow[mm.a], dpow[mm.d]);
            for (size_t i = 0; i < nb; ++i)
                for (size_t j = 0; j < nb; ++j)
                    acc[i][j] += c * t[i][j];
        }
        if (!eps_matrix_zero(acc)) return false;
    }
    return true;
}

TwoGenCertificate two_generator_certificate(const DnIdeal& ideal) {
    const SyzygyMatrix& s = ideal.syzygy();
    int m = ideal.m();
    std::vector<Abar> mins = ideal.gens_raw();
    size_t cols = s.cols.size();
    std::vector<bool> known(cols, false);
    std::vector<Abar> value(cols);
    for (size_t c = 0; c < cols; ++c) {
        if (s.cols[c] == m - 1 || s.cols[c] == m + 1) {
            known[c] = true;
            value[c] = mins[c];
        }
    }
    std::vector<bool> row_used(s.rows.size(), false);
    // Repeatedly find a row with a single unresolved minor whose coefficient is
    // a unit scalar, and solve for it.
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t r = 0; r < s.rows.size(); ++r) {
            if (row_used[r]) continue;
            int unresolved = -1;
            bool multiple = false;
            for (size_t c = 0; c < cols; ++c) {
                if (!known[c] && !s.entry(r, c).is_zero()) {
                    if (unresolved >= 0) { multiple = true; break; }
                    unresolved = static_cast<int>(c);
                }
            }
            if (multiple || unresolved < 0) continue;
            Abar coeff = s.entry(r, unresolved);
            if (!is_unit_scalar(coeff)) continue;
            Abar acc;
            for (size_t c = 0; c < cols; ++c)
                if (known[c] && !s.entry(r, c).is_zero()) acc += s.entry(r, c) * value[c];
            Eps inv = coeff.coeff(0, 0).unit_inverse();
            value[unresolved] = -(acc * inv);
            known[unresolved] = true;
            row_used[r] = true;
            progress = true;
        }
    }
    TwoGenCertificate cert;
    for (size_t c = 0; c < cols; ++c) {
        if (!known[c]) {
            cert.detail = "could not resolve minor at h=" + std::to_string(s.cols[c]);
            return cert;
        }
        if (value[c] != mins[c]) {
            cert.detail = "resolved expression disagrees at h=" + std::to_string(s.cols[c]);
            return cert;
        }
    }
    // Remaining rows are consistency checks.
    for (size_t r = 0; r < s.rows.size(); ++r) {
        Abar acc;
        for (size_t c = 0; c < cols; ++c)
            if (!s.entry(r, c).is_zero()) acc += s.entry(r, c) * mins[c];
        if (!acc.is_zero()) {
            cert.detail = "annihilation fails at row h'=" + std::to_string(s.rows[r]);
            return cert;
        }
    }
    cert.ok = true;
    return cert;
}

// ---- Hilbert-scheme engine ----

namespace {

using EpsVec = std::vector<Eps>;

// Dehomogenized polynomial in x of degree <= cap, dense coefficients.
struct XPoly {
    std::vector<Eps> c;  // c[i] = coefficient of x^i
    explicit XPoly(int cap) : c(cap + 1) {}
};

}  // namespace

PhiMap phi_iterate(const std::vector<std::vector<Eps>>& phi1, int m) {
    if (m < 0) throw std::invalid_argument("phi_iterate: bad m");
    PhiMap phi;
    phi.m = m;
    if (m == 0) return phi;
    if (phi1.size() != static_cast<size_t>(m) ||
        (m > 0 && phi1[0].size() != static_cast<size_t>(m + 1)))
        throw std::invalid_argument("phi_iterate: phi1 must map degree-m forms to degree-(m-1) forms");
    phi.comps.push_back(phi1);
    for (int r = 1; r < m; ++r) {
        const auto& phir = phi.comps[r - 1];  // (m-r+1) x (m+1)
        int tgt = m - r - 1;                  // degree of phi_{r+1} values
        // v_k = phi_r(x phi_1(y b_k)) - phi_r(y phi_1(x b_k)), b_k = x^{m-1-k} y^k.
        std::vector<EpsVec> v(m, EpsVec(m - r + 1));
        for (int k = 0; k < m; ++k) {
            // phi_1 columns: y*b_k is basis index k+1 in A_m, x*b_k is index k.
            // x * (A_{m-1} basis j) = A_m basis j;  y * (A_{m-1} basis j) = A_m basis j+1.
            EpsVec term1(m - r + 1), term2(m - r + 1);
            for (int j = 0; j <= m - 1; ++j) {
                Eps c1 = phi1[j][k + 1];  // phi_1(y b_k) component j
                if (!c1.is_zero())
                    for (int i = 0; i <= m - r; ++i) term1[i] += phir[i][j] * c1;
                Eps c2 = phi1[j][k];      // phi_1(x b_k) component j
                if (!c2.is_zero())
                    for (int i = 0; i <= m - r; ++i) term2[i] += phir[i][j + 1] * c2;
            }
            for (int i = 0; i <= m - r; ++i) v[k][i] = term1[i] - term2[i];
        }
        // Dehomogenize: A_s basis index j corresponds to x^{s-j}.
        auto deh = [](const EpsVec& vec, int s) {
            XPoly p(s);
            for (int j = 0; j <= s; ++j) p.c[s - j] = vec[j];
            return p;
        };
        std::vector<XPoly> vp;
        for (int k = 0; k < m; ++k) vp.push_back(deh(v[k], m - r));
        // With u_k the dehomogenized value on basis index k (y-power k), the
        // constraints read u_k - x u_{k+1} = v_k. Telescoping and matching the
        // powers >= m pins the last unknown (discard negative powers):
        //   u_m[s] = -sum_t v_t[m + s - t],
        // and the rest follow by the truncated recurrence downward.
        std::vector<XPoly> u(m + 1, XPoly(tgt));
        for (int sdeg = 0; sdeg <= tgt; ++sdeg) {
            Eps acc;
            for (int t = 0; t < m; ++t) {
                int idx = m + sdeg - t;
                if (idx >= 0 && idx <= m - r) acc += vp[t].c[idx];
            }
            u[m].c[sdeg] = -acc;
        }
        for (int k = m - 1; k >= 0; --k) {
            for (int i = 0; i <= tgt; ++i) {
                Eps acc = (i <= m - r) ? vp[k].c[i] : Eps();
                if (i >= 1) acc += u[k + 1].c[i - 1];
                u[k].c[i] = acc;
            }
        }
        // Rehomogenize into the phi_{r+1} matrix.
        std::vector<std::vector<Eps>> next(tgt + 1, std::vector<Eps>(m + 1));
        for (int col = 0; col <= m; ++col)
            for (int j = 0; j <= tgt; ++j)
                next[j][col] = u[col].c[tgt - j];
        phi.comps.push_back(std::move(next));
    }
    return phi;
}

std::vector<Abar> generators_from_phi(const PhiMap& phi) {
    int m = phi.m;
    std::vector<Abar> gens;
    for (int i = 0; i <= m; ++i) {
        Abar g = Abar::mono(m - i, i, Eps(1L));
        for (int r = 1; r <= static_cast<int>(phi.comps.size()); ++r) {
            const auto& mat = phi.comps[r - 1];
            int s = m - r;
            for (int j = 0; j <= s; ++j) {
                if (mat[j][i].is_zero()) continue;
                g -= Abar::mono(s - j, j, mat[j][i]);
            }
        }
        gens.push_back(g);
    }
    return gens;
}

std::vector<std::vector<Eps>> s1_from_monomial_subleading(const std::vector<std::vector<Eps>>& g) {
    int m = static_cast<int>(g.size()) - 1;
    if (m < 1 || g[0].size() != static_cast<size_t>(m))
        throw std::invalid_argument("s1_from_monomial_subleading: G must be (m+1) x m");
    auto gv = [&](int i, int j) -> Eps {
        if (i < 0 || i > m || j < 0 || j >= m) return Eps();
        return g[i][j];
    };
    std::vector<std::vector<Eps>> s1(m + 1, std::vector<Eps>(m));
    for (int i = 0; i <= m; ++i)
        for (int k = 0; k < m; ++k)
            s1[i][k] = gv(k, i - 1) - gv(k + 1, i);
    return s1;
}

std::vector<std::vector<Abar>> s0_monomial(int m) {
    std::vector<std::vector<Abar>> s0(m + 1, std::vector<Abar>(m));
    for (int k = 0; k < m; ++k) {
        s0[k][k] = -Abar::delta();
        s0[k + 1][k] = Abar::alpha();
    }
    return s0;
}

std::vector<Abar> distraction_generators(int m) {
    std::vector<Abar> gens;
    for (int h = 0; h <= m; ++h) {
        Abar u(Rational(1));
        for (int j = 0; j < h; ++j) u *= Abar::alpha() - Abar(Rational(j));
        for (int l = 0; l < m - h; ++l) u *= Abar::delta() - Abar(Rational(l));
        gens.push_back(u);
    }
    return gens;
}

}  // namespace znalg
