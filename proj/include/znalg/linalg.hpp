#pragma once

#include "znalg/eps.hpp"
#include "znalg/laurent.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace znalg {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

/// Inverse of a square rational matrix; nullopt when singular.
std::optional<QMatrix> qmatrix_inverse(const QMatrix& m);

int qmatrix_rank(QMatrix m);

/// Dimension of the kernel of a (possibly rectangular) rational matrix.
int qmatrix_kernel_dim(const QMatrix& m);

QMatrix qmatrix_mul(const QMatrix& a, const QMatrix& b);

/// Solve A x = b over Q where the solution is expected to exist.
/// A is rows x cols with rows >= cols; rhs entries are Eps so the same
/// rational elimination can carry R-valued right-hand sides.
/// Returns nullopt when the system is inconsistent or rank deficient.
std::optional<std::vector<Eps>> solve_q_system_eps(const QMatrix& a, const std::vector<Eps>& b);

/// Solve A x = b exactly over the Laurent ring, for a system known to have a
/// unique solution with Laurent entries. Fraction-free (Bareiss) elimination;
/// divisions in back substitution are exact by uniqueness of the solution.
/// Returns nullopt when the system is inconsistent or the solution is not unique.
std::optional<std::vector<Laurent>> solve_laurent_system(std::vector<std::vector<Laurent>> a,
                                                         std::vector<Laurent> b);

/// Rank of a rational matrix after reduction mod p (lower bound for the rank
/// over Q). Rows are fed incrementally; entries with denominators divisible
/// by p are rejected via the optional flag.
class ModpRank {
public:
    explicit ModpRank(int cols, uint64_t p = 2305843009213693951ull);  // 2^61-1
    /// Returns false if a denominator was not invertible mod p.
    bool add_row(const QVector& row);
    int rank() const { return static_cast<int>(basis_.size()); }

private:
    uint64_t p_;
    int cols_;
    std::vector<std::vector<uint64_t>> basis_;  // echelon rows
    std::vector<int> pivot_col_;
};

}  // namespace znalg
