#include "znalg/curvelab.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace znalg {

int EigenPointCloud::point_count() const {
    int c = 0;
    for (const auto& p : points) c += p.multiplicity;
    return c;
}

int EigenPointCloud::real_count(double tol) const {
    int c = 0;
    for (const auto& p : points)
        if (std::abs(p.alpha.imag()) < tol && std::abs(p.delta.imag()) < tol)
            c += p.multiplicity;
    return c;
}

namespace {

Eigen::MatrixXd component_matrix(const std::vector<std::vector<Eps>>& m, int sign,
                                 const Rational& tau0) {
    size_t nb = m.size();
    Eigen::MatrixXd out(nb, nb);
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j)
            out(i, j) = m[i][j].at_eps(sign).eval(tau0).get_d();
    return out;
}

EigenPointCloud cloud_one_component(const DnIdeal& ideal, const Rational& tau0, int sign) {
    EigenPointCloud cloud;
    cloud.n = ideal.n();
    cloud.tau0 = tau0;
    cloud.eps_sign = sign;
    size_t nb = ideal.basis().size();
    if (nb == 0) return cloud;
    Eigen::MatrixXd a = component_matrix(ideal.mult_alpha(), sign, tau0);
    Eigen::MatrixXd d = component_matrix(ideal.mult_delta(), sign, tau0);
    double comm = (a * d - d * a).norm();
    if (comm > 1e-8 * (1.0 + a.norm() * d.norm()))
        throw std::logic_error("eigen_cloud: multiplication operators fail to commute");
    // Joint spectrum from a generic combination; Rayleigh quotients recover the
    // individual eigenvalues on each eigenvector.
    Eigen::MatrixXcd comb = (a + 0.6180339887498949 * d).cast<std::complex<double>>();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comb);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigen_cloud: eigensolver failed");
    Eigen::MatrixXcd ac = a.cast<std::complex<double>>(), dc = d.cast<std::complex<double>>();
    std::vector<CloudPoint> raw;
    for (int i = 0; i < static_cast<int>(nb); ++i) {
        Eigen::VectorXcd v = es.eigenvectors().col(i);
        double denom = v.squaredNorm();
        CloudPoint p;
        p.alpha = (v.adjoint() * ac * v)(0) / denom;
        p.delta = (v.adjoint() * dc * v)(0) / denom;
        p.is_real = std::abs(p.alpha.imag()) < 1e-9 && std::abs(p.delta.imag()) < 1e-9;
        raw.push_back(p);
    }
    // Cluster nearly identical joint eigenvalues into multiplicity tags.
    const double ctol = 1e-7;
    for (const auto& p : raw) {
        bool merged = false;
        for (auto& qp : cloud.points) {
            if (std::abs(qp.alpha - p.alpha) < ctol && std::abs(qp.delta - p.delta) < ctol) {
                qp.multiplicity += 1;
                merged = true;
                break;
            }
        }
        if (!merged) cloud.points.push_back(p);
    }
    auto key = [](const CloudPoint& p) {
        return std::make_tuple(p.alpha.real(), p.alpha.imag(), p.delta.real(), p.delta.imag());
    };
    std::sort(cloud.points.begin(), cloud.points.end(),
              [&](const CloudPoint& x, const CloudPoint& y) { return key(x) < key(y); });
    return cloud;
}

}  // namespace

EigenPointCloud eigen_cloud(const DnIdeal& ideal, const Rational& tau0, int eps_sign) {
    if (tau0 == 0) throw std::domain_error("eigen_cloud: tau0 must be nonzero");
    if (eps_sign == 1 || eps_sign == -1) return cloud_one_component(ideal, tau0, eps_sign);
    EigenPointCloud plus = cloud_one_component(ideal, tau0, +1);
    EigenPointCloud minus = cloud_one_component(ideal, tau0, -1);
    EigenPointCloud both;
    both.n = ideal.n();
    both.tau0 = tau0;
    both.eps_sign = 0;
    both.points = plus.points;
    both.points.insert(both.points.end(), minus.points.begin(), minus.points.end());
    return both;
}

void emit_plot_data(const EigenPointCloud& cloud, std::ostream& os) {
    os << "re_alpha,im_alpha,re_delta,im_delta,is_real\n";
    char buf[256];
    for (const auto& p : cloud.points) {
        for (int rep = 0; rep < p.multiplicity; ++rep) {
            std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%d\n", p.alpha.real(),
                          p.alpha.imag(), p.delta.real(), p.delta.imag(), p.is_real ? 1 : 0);
            os << buf;
        }
    }
}

void emit_plot_data_file(const EigenPointCloud& cloud, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("emit_plot_data: cannot open " + path);
    emit_plot_data(cloud, f);
}

namespace {

QMatrix rational_component_matrix(const std::vector<std::vector<Eps>>& m, int sign,
                                  const Rational& tau0) {
    size_t nb = m.size();
    QMatrix out(nb, QVector(nb, Rational(0)));
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j)
            out[i][j] = m[i][j].at_eps(sign).eval(tau0);
    return out;
}

}  // namespace

int street_eps_sign(int n, int lambda) {
    int m = (n - 1) / 2;
    int k = (lambda + 1) / 2 + (m % 2 == 0 ? 1 : 0);
    return (k % 2 == 0) ? +1 : -1;
}

std::vector<StreetRow> street_check(const DnIdeal& ideal) {
    int n = ideal.n();
    size_t nb = ideal.basis().size();
    std::vector<StreetRow> rows;
    if (nb == 0) return rows;
    for (int sign : {+1, -1}) {
        QMatrix a = rational_component_matrix(ideal.mult_alpha(), sign, Rational(1));
        QMatrix d = rational_component_matrix(ideal.mult_delta(), sign, Rational(1));
        // D^N and (A - lambda)^N for N = component dimension; the joint
        // generalized eigenspace at (lambda, 0) is the kernel of the stacked
        // matrix [(A - lambda)^N ; D^N].
        QMatrix dn = d;
        for (size_t i = 1; i < nb; ++i) dn = qmatrix_mul(dn, d);
        int total = 0;
        for (int lambda = -(n - 2); lambda <= n - 2; lambda += 2) {
            QMatrix shifted = a;
            for (size_t i = 0; i < nb; ++i) shifted[i][i] -= lambda;
            QMatrix pw = shifted;
            for (size_t i = 1; i < nb; ++i) pw = qmatrix_mul(pw, shifted);
            QMatrix stacked = pw;
            stacked.insert(stacked.end(), dn.begin(), dn.end());
            int mult = qmatrix_kernel_dim(stacked);
            if (mult > 0) rows.push_back({lambda, mult, sign});
            total += mult;
        }
        if (total != static_cast<int>(nb))
            throw std::logic_error("street_check: unexpected support outside the candidate points");
    }
    std::sort(rows.begin(), rows.end(), [](const StreetRow& x, const StreetRow& y) {
        return std::make_pair(x.lambda, x.eps_sign) < std::make_pair(y.lambda, y.eps_sign);
    });
    return rows;
}

bool street_table_matches(int n, const std::vector<StreetRow>& rows) {
    std::vector<StreetRow> expect;
    for (int lambda = -(n - 2); lambda <= n - 2; lambda += 2)
        expect.push_back({lambda, (n - std::abs(lambda)) / 2, street_eps_sign(n, lambda)});
    std::sort(expect.begin(), expect.end(), [](const StreetRow& x, const StreetRow& y) {
        return std::make_pair(x.lambda, x.eps_sign) < std::make_pair(y.lambda, y.eps_sign);
    });
    if (rows.size() != expect.size()) return false;
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].lambda != expect[i].lambda || rows[i].multiplicity != expect[i].multiplicity ||
            rows[i].eps_sign != expect[i].eps_sign)
            return false;
    return true;
}

namespace {

/// Evaluate a generator surface at alpha = lambda + f, delta = x, tau = 1 + y.
struct SurfaceSeries {
    int order;
    int lambda;
    // per (a, d): Laurent coefficient expanded at tau = 1 + y
    std::vector<std::tuple<int, int, Series2>> terms;

    Series2 value(const Series2& f) const {
        Series2 acc(order);
        Series2 base = Series2(order, Rational(lambda)) + f;
        std::vector<Series2> powers{Series2(order, Rational(1))};
        for (const auto& [a, d, c] : terms) {
            while (static_cast<int>(powers.size()) <= a) powers.push_back(powers.back() * base);
            Series2 t = c * powers[a];
            Series2 x = Series2::var_x(order);
            for (int i = 0; i < d; ++i) t = t * x;
            acc = acc + t;
        }
        return acc;
    }

    Series2 alpha_derivative(const Series2& f) const {
        Series2 acc(order);
        Series2 base = Series2(order, Rational(lambda)) + f;
        std::vector<Series2> powers{Series2(order, Rational(1))};
        for (const auto& [a, d, c] : terms) {
            if (a == 0) continue;
            while (static_cast<int>(powers.size()) <= a - 1) powers.push_back(powers.back() * base);
            Series2 t = c * powers[a - 1] * Rational(a);
            Series2 x = Series2::var_x(order);
            for (int i = 0; i < d; ++i) t = t * x;
            acc = acc + t;
        }
        return acc;
    }
};

SurfaceSeries surface_series(const Poly2& p, int lambda, int order) {
    SurfaceSeries s;
    s.order = order;
    s.lambda = lambda;
    for (const auto& [m, c] : p.terms())
        s.terms.emplace_back(m.a, m.d, laurent_at_one_plus(c, order));
    return s;
}

Series2 newton_branch(const SurfaceSeries& s, int order) {
    Series2 f(order);
    // Each step at least doubles the order of correctness.
    int steps = 1;
    while ((1 << steps) < order + 2) ++steps;
    for (int i = 0; i <= steps; ++i) {
        Series2 val = s.value(f);
        if (val.is_zero()) break;
        Series2 deriv = s.alpha_derivative(f);
        f = f - val * deriv.inverse();
    }
    if (!s.value(f).is_zero())
        throw std::logic_error("local_expansion: Newton iteration failed to vanish at the "
                               "truncation order");
    return f;
}

}  // namespace

LocalExpansion local_expansion(const DnIdeal& ideal, int lambda, int eps_sign, int order) {
    int n = ideal.n(), m = ideal.m();
    if (lambda % 2 == 0 || std::abs(lambda) >= n)
        throw std::invalid_argument("local_expansion: lambda must be odd with |lambda| < n");
    if (eps_sign != 1 && eps_sign != -1)
        throw std::invalid_argument("local_expansion: eps_sign must be ±1");
    LocalExpansion res;
    res.n = n;
    res.lambda = lambda;
    res.eps_sign = eps_sign;
    res.order = order;

    int i1 = -1, i2 = -1;
    for (size_t i = 0; i < ideal.hs().size(); ++i) {
        if (ideal.hs()[i] == m - 1) i1 = static_cast<int>(i);
        if (ideal.hs()[i] == m + 1) i2 = static_cast<int>(i);
    }
    if (i1 < 0 || i2 < 0) throw std::logic_error("local_expansion: missing distinguished minors");

    std::vector<Series2> branches;
    for (int idx : {i1, i2}) {
        Poly2 p = ideal.gens()[idx].at_eps(eps_sign);
        // The base point must lie on the surface.
        Rational at_point(0);
        for (const auto& [mm, c] : p.terms()) {
            if (mm.d != 0) continue;
            Rational la(1);
            for (int i = 0; i < mm.a; ++i) la *= lambda;
            at_point += c.eval(Rational(1)) * la;
        }
        if (at_point != 0)
            throw std::invalid_argument("local_expansion: point is not on this eps component");
        SurfaceSeries s = surface_series(p, lambda, order);
        // Nonvanishing alpha-derivative at the point is a premise, not an
        // assumption: fail loudly if it degenerates.
        Series2 d0 = s.alpha_derivative(Series2(order));
        if (d0.coeff(0, 0) == 0)
            throw std::domain_error("local_expansion: vanishing alpha-derivative at the point");
        branches.push_back(newton_branch(s, order));
    }
    res.f1 = branches[0];
    res.f2 = branches[1];
    res.g = res.f1 - res.f2;
    res.ord = res.g.valuation();
    if (res.ord >= 1) {
        Series2 low = res.g.homogeneous_part(res.ord);
        for (int sgn : {+1, -1}) {
            Series2 line = Series2::var_x(order) + Series2::var_y(order) * Rational(2 * sgn);
            Series2 pw = line.pow(res.ord);
            Rational c = low.coeff(res.ord, 0);
            if (c == 0) continue;
            if (pw * c == low) {
                res.tangent_cone_is_line_power = true;
                res.tangent_sign = sgn;
                res.tangent_coeff = c;
                break;
            }
        }
    }
    return res;
}

Series2 scaled_branch_series(const DnIdeal& ideal, int lambda, int gen_index, int order) {
    if (gen_index != 1 && gen_index != 2)
        throw std::invalid_argument("scaled_branch_series: gen_index must be 1 or 2");
    LocalExpansion ex =
        local_expansion(ideal, lambda, street_eps_sign(ideal.n(), lambda), order);
    Series2 f = (gen_index == 1) ? ex.f1 : ex.f2;
    Series2 shifted = Series2(order, Rational(lambda)) + f;
    return shifted * (Rational(1) / Rational(lambda));
}

int series_agreement_order(const Series2& a, const Series2& b) {
    Series2 diff = a - b;
    return diff.is_zero() ? -1 : diff.valuation();
}

bool divisibility_check(const DnIdeal& big, const DnIdeal& small) {
    if (big.n() % small.n() != 0) throw std::invalid_argument("divisibility_check: n' must divide n");
    long l = big.n() / small.n();
    if (l % 2 == 0) throw std::invalid_argument("divisibility_check: quotient must be odd");
    for (const Abar& g : big.gens_raw())
        if (!small.normal_form(g.scale_alpha(l)).is_zero()) return false;
    return true;
}

int sigma_yz_degree(const Abar& gen) {
    bool any = false;
    int tmin = 0;
    std::vector<std::pair<int, int>> items;  // (t = k - a - d, a + d)
    for (const auto& [m, c] : gen.terms()) {
        for (const Laurent* part : {&c.even, &c.odd}) {
            for (const auto& [k, q] : part->terms()) {
                int t = k - m.a - m.d;
                items.emplace_back(t, m.a + m.d);
                if (!any || t < tmin) { tmin = t; any = true; }
            }
        }
    }
    if (!any) return 0;
    int deg = 0;
    for (const auto& [t, ad] : items) {
        int rel = t - tmin;
        if (rel % 4 != 0) return -1;
        deg = std::max(deg, ad + rel / 4);
    }
    return deg;
}

}  // namespace znalg
