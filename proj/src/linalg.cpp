#include "znalg/linalg.hpp"

#include <algorithm>

namespace znalg {

std::optional<QMatrix> qmatrix_inverse(const QMatrix& m) {
    size_t n = m.size();
    QMatrix a(m);
    QMatrix inv(n, QVector(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("qmatrix_inverse: not square");
        inv[i][i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

int qmatrix_rank(QMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int qmatrix_kernel_dim(const QMatrix& m) {
    if (m.empty()) return 0;
    return static_cast<int>(m[0].size()) - qmatrix_rank(m);
}

QMatrix qmatrix_mul(const QMatrix& a, const QMatrix& b) {
    size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    QMatrix r(n, QVector(mcols, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < mcols; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

std::optional<std::vector<Eps>> solve_q_system_eps(const QMatrix& a, const std::vector<Eps>& b) {
    size_t rows = a.size();
    if (rows == 0) return std::vector<Eps>();
    size_t cols = a[0].size();
    QMatrix m(a);
    std::vector<Eps> rhs(b);
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) return std::nullopt;  // rank deficient in the unknowns
        std::swap(m[piv], m[r]);
        std::swap(rhs[piv], rhs[r]);
        Rational d = m[r][c];
        for (size_t j = 0; j < cols; ++j) m[r][j] /= d;
        rhs[r] = rhs[r] * (Rational(1) / d);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
            rhs[i] -= rhs[r] * f;
        }
        pivots.push_back(c);
        ++r;
    }
    if (r < cols) return std::nullopt;
    for (size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;  // inconsistent
    std::vector<Eps> x(cols);
    for (size_t i = 0; i < cols; ++i) x[pivots[i]] = rhs[i];
    return x;
}

namespace {

size_t laurent_weight(const Laurent& p) { return p.is_zero() ? 0 : p.terms().size(); }

}  // namespace

std::optional<std::vector<Laurent>> solve_laurent_system(std::vector<std::vector<Laurent>> a,
                                                         std::vector<Laurent> b) {
    size_t rows = a.size();
    if (rows == 0) return std::vector<Laurent>();
    size_t cols = a[0].size();
    if (cols == 0) {
        for (const auto& r : b)
            if (!r.is_zero()) return std::nullopt;
        return std::vector<Laurent>();
    }

    // Fraction-free (Bareiss) forward elimination with sparsity-guided pivoting.
    Laurent prev_pivot(Rational(1));
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t best = rows;
        size_t best_w = SIZE_MAX;
        for (size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            size_t w = laurent_weight(a[i][c]);
            if (w < best_w) { best_w = w; best = i; }
        }
        if (best == rows) continue;  // no pivot in this column
        std::swap(a[best], a[r]);
        std::swap(b[best], b[r]);
        const Laurent pivot = a[r][c];
        for (size_t i = r + 1; i < rows; ++i) {
            Laurent factor = a[i][c];
            for (size_t j = 0; j < cols; ++j) {
                Laurent t = a[i][j] * pivot - factor * a[r][j];
                a[i][j] = laurent_divexact(t, prev_pivot);
            }
            Laurent t = b[i] * pivot - factor * b[r];
            b[i] = laurent_divexact(t, prev_pivot);
        }
        prev_pivot = pivot;
        pivot_col.push_back(c);
        ++r;
    }
    if (r < cols) return std::nullopt;  // not a unique solution
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;

    // Back substitution; the divisions are exact because the system has a
    // unique solution over the Laurent ring.
    std::vector<Laurent> x(cols);
    for (size_t k = r; k-- > 0;) {
        size_t c = pivot_col[k];
        Laurent acc = b[k];
        for (size_t j = c + 1; j < cols; ++j)
            acc -= a[k][j] * x[j];
        auto q = acc.divided_by(a[k][c]);
        if (!q) return std::nullopt;
        x[c] = *q;
    }
    return x;
}

ModpRank::ModpRank(int cols, uint64_t p) : p_(p), cols_(cols) {}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t mpz_mod_u64(const mpz_class& z, uint64_t p) {
    mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
    if (m < 0) m += mpz_class(static_cast<unsigned long>(p));
    return m.get_ui();
}

}  // namespace

bool ModpRank::add_row(const QVector& row) {
    std::vector<uint64_t> v(cols_);
    for (int j = 0; j < cols_; ++j) {
        uint64_t den = mpz_mod_u64(row[j].get_den(), p_);
        if (den == 0) return false;
        uint64_t num = mpz_mod_u64(row[j].get_num(), p_);
        v[j] = mulmod(num, powmod(den, p_ - 2, p_), p_);
    }
    for (size_t k = 0; k < basis_.size(); ++k) {
        uint64_t c = v[pivot_col_[k]];
        if (c == 0) continue;
        const auto& bk = basis_[k];
        for (int j = 0; j < cols_; ++j) {
            if (bk[j] == 0) continue;
            uint64_t sub = mulmod(c, bk[j], p_);
            v[j] = (v[j] + p_ - sub) % p_;
        }
    }
    int piv = -1;
    for (int j = 0; j < cols_; ++j)
        if (v[j] != 0) { piv = j; break; }
    if (piv < 0) return true;  // dependent row
    uint64_t inv = powmod(v[piv], p_ - 2, p_);
    for (int j = 0; j < cols_; ++j) v[j] = mulmod(v[j], inv, p_);
    basis_.push_back(std::move(v));
    pivot_col_.push_back(piv);
    return true;
}

}  // namespace znalg
