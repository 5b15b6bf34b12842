#pragma once

#include "znalg/series2.hpp"
#include "znalg/syzygy.hpp"
#include "znalg/zn.hpp"

#include <complex>
#include <iosfwd>

namespace znalg {

struct CloudPoint {
    std::complex<double> alpha;
    std::complex<double> delta;
    int multiplicity = 1;
    bool is_real = false;
};

struct EigenPointCloud {
    int n = 1;
    Rational tau0;
    int eps_sign = 0;  // +1, -1, or 0 for the union of both components
    std::vector<CloudPoint> points;

    int point_count() const;  // with multiplicity
    int real_count(double tol = 1e-9) const;
};

/// Joint eigenvalues of the alpha/delta multiplication operators at tau = tau0,
/// restricted to one eps eigenspace (eps_sign = ±1) or both (eps_sign = 0).
EigenPointCloud eigen_cloud(const DnIdeal& ideal, const Rational& tau0, int eps_sign);

/// CSV rows (re_alpha, im_alpha, re_delta, im_delta, multiplicity, is_real),
/// deterministic ordering.
void emit_plot_data(const EigenPointCloud& cloud, std::ostream& os);
void emit_plot_data_file(const EigenPointCloud& cloud, const std::string& path);

struct StreetRow {
    int lambda = 0;
    int multiplicity = 0;
    int eps_sign = 0;
};

/// Exact generalized-eigenspace dimensions at tau = 1: support must be the
/// points (alpha, delta) = (lambda, 0) for odd |lambda| < n, with multiplicity
/// (n - |lambda|)/2 on the eps component (-1)^{(lambda+1)/2}.
std::vector<StreetRow> street_check(const DnIdeal& ideal);
/// Validate the table against the closed forms; throws on unexpected support.
bool street_table_matches(int n, const std::vector<StreetRow>& rows);

struct LocalExpansion {
    int n = 1;
    int lambda = 0;
    int eps_sign = 0;
    int order = 0;
    Series2 f1, f2;    // alpha = lambda + f_i(delta, tau-1)
    Series2 g;         // f1 - f2
    int ord = 0;       // order of vanishing of g at the point
    bool tangent_cone_is_line_power = false;
    int tangent_sign = 0;      // g lowest part ∝ (delta + tangent_sign*2*(tau-1))^ord
    Rational tangent_coeff;
};

/// Power-series branches of the two generator surfaces at (tau, alpha, delta)
/// = (1, lambda, 0), by Newton iteration on truncated series; verifies the
/// branches re-substitute to zero exactly through the truncation order.
LocalExpansion local_expansion(const DnIdeal& ideal, int lambda, int eps_sign, int order);

/// Eps component carrying the tau = 1 point at alpha = lambda, under the
/// product-form generator convention: (-1)^{(lambda+1)/2} times an extra sign
/// when m = (n-1)/2 is even (the eps labeling of the two components is pinned
/// by the subleading sign of the minors and alternates with the parity of m).
int street_eps_sign(int n, int lambda);

/// True when every generator of the n-strand D-ideal maps into the n'-strand
/// ideal under alpha -> (n/n') alpha.
bool divisibility_check(const DnIdeal& big, const DnIdeal& small);

/// Experimental: the branch alpha = lambda + f(delta, tau-1) scaled by
/// 1/lambda. As n grows these series appear to approach a common limit,
/// independent of lambda and of which generator surface is used; no exact
/// claim is attached. gen_index selects the surface (1 or 2).
Series2 scaled_branch_series(const DnIdeal& ideal, int lambda, int gen_index, int order);

/// Lowest total degree where two scaled branches differ (-1: identical to order).
int series_agreement_order(const Series2& a, const Series2& b);

/// Substitute Z = tau*alpha, Y = tau*delta, sigma = tau^4 and clear the common
/// tau power; returns the total degree in (sigma, Y, Z), or -1 when the
/// exponents fail to align mod 4.
int sigma_yz_degree(const Abar& gen);

}  // namespace znalg
