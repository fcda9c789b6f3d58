#include "specproj/checks.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "specproj/disk_spectral.hpp"
#include "specproj/na.hpp"
#include "specproj/specfun.hpp"

namespace specproj::checks {

namespace {

using disk::DiskPoint;
using disk::SO2FiniteFunction;
using disk::SpectralProjector;

double tol_of(const CheckOptions& opt, const std::string& name, double dflt) {
    auto it = opt.tol.find(name);
    return (it == opt.tol.end()) ? dflt : it->second;
}

void push_metric(CheckResult& res, const CheckOptions& opt, const std::string& name, double value,
                 double dflt_tol) {
    Metric m;
    m.name = name;
    m.value = value;
    m.tolerance = tol_of(opt, name, dflt_tol);
    m.pass = std::isfinite(value) && value <= m.tolerance;
    res.pass = res.pass && m.pass;
    res.metrics.push_back(m);
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

double rel_err(Complex got, Complex want) {
    double scale = std::max(std::abs(want), std::abs(got));
    if (scale == 0.0) return 0.0;
    return std::abs(got - want) / scale;
}

// Observed convergence order over three residuals at h, h/2, h/4.
double observed_order(double r1, double r2, double r3) {
    return std::min(std::log2(r1 / r2), std::log2(r2 / r3));
}

}  // namespace

CheckResult product_formula_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"product-formula"};
    double worst = 0.0;
    std::vector<double> lams, rs;
    for (double l = 0.5; l <= 10.0 + 1e-9; l += 0.5) lams.push_back(l);
    for (double r = 0.1; r <= 2.0 + 1e-9; r += 0.1) rs.push_back(r);
    std::vector<double> errs(lams.size() * rs.size() * 6, 0.0);
    num::parallel_for(
        errs.size(), opt.threads,
        [&](std::size_t idx) {
            int k = idx % 6;
            double lam = lams[(idx / 6) % lams.size()];
            double r = rs[idx / (6 * lams.size())];
            Complex a = disk::generalized_spherical_circle(Complex(lam, 0.0), k, r, 1024);
            Complex b = disk::generalized_spherical(Complex(lam, 0.0), k, r);
            errs[idx] = rel_err(a, b);
        });
    for (double e : errs) worst = std::max(worst, e);
    push_metric(res, opt, "max_rel_err", worst, 1e-8);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult projection_cross_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"projection-cross-check"};
    double worst = 0.0;
    const double theta = 0.4;
    std::vector<double> rs{0.3, 0.6, 0.9, 1.2, 1.5};
    for (int n = -3; n <= 3; ++n) {
        SpectralProjector proj(SO2FiniteFunction::bump_mode(n, 1.0));
        std::vector<double> lams;
        for (double l = 0.5; l <= 8.0 + 1e-9; l += 0.5) lams.push_back(l);
        std::vector<double> errs(lams.size() * rs.size(), 0.0);
        num::parallel_for(lams.size(), opt.threads, [&](std::size_t li) {
            Complex lam(lams[li], 0.0);
            for (std::size_t ri = 0; ri < rs.size(); ++ri) {
                DiskPoint z = DiskPoint::from_polar(rs[ri], theta);
                Complex q = proj.projection_quadrature(lam, z);
                Complex c = proj.projection_closed(lam, z);
                errs[li * rs.size() + ri] = rel_err(q, c);
            }
        });
        for (double e : errs) worst = std::max(worst, e);
    }
    push_metric(res, opt, "max_rel_err", worst, 1e-6);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult eigen_residual_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"eigen-residuals"};
    const double hs[3] = {1e-2, 5e-3, 2.5e-3};

    // Poisson kernel on the disk: Delta_D P_lambda = -(lambda^2+1) P_lambda
    auto disk_order = [&hs](double lam, DiskPoint z, disk::LaplacianForm form) {
        disk::BoundaryPoint w{0.9};
        auto field = [lam, w](Complex zz) {
            return disk::poisson_power(DiskPoint::from_cartesian(zz), w, Complex(lam, 0.0));
        };
        double r[3];
        for (int i = 0; i < 3; ++i) {
            Complex lap = disk::laplacian_apply(field, z, hs[i], form);
            Complex want = -(lam * lam + 1.0) * field(z.z);
            r[i] = std::abs(lap - want);
        }
        return observed_order(r[0], r[1], r[2]);
    };
    double o1 = disk_order(1.3, DiskPoint::from_polar(0.7, 0.5), disk::LaplacianForm::cartesian);
    double o2 = disk_order(2.0, DiskPoint::from_polar(0.9, 2.1), disk::LaplacianForm::polar);

    // NA radial operator on Phi_lambda with eigenvalue -(lambda^2 + Q^2/4)
    na::NAParams p(2, 1);
    auto na_order = [&hs, &p](double lam, double rho) {
        auto f = [&p, lam](double r) { return na::spherical_phi(p, Complex(lam, 0.0), r); };
        auto drift = [&p](double r) { return na::radial_drift(p, r); };
        double want_factor = -(lam * lam + 0.25 * p.Q() * p.Q());
        double r[3];
        for (int i = 0; i < 3; ++i) {
            Complex lap = num::radial_operator_fd(f, rho, hs[i], drift);
            r[i] = std::abs(lap - want_factor * f(rho));
        }
        return observed_order(r[0], r[1], r[2]);
    };
    double o3 = na_order(1.1, 1.5);

    double min_order = std::min({o1, o2, o3});
    push_metric(res, opt, "order_deficit", 1.9 - min_order, 0.0);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult roundtrip_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"roundtrip"};
    SO2FiniteFunction f = SO2FiniteFunction::bump_mode(0, 1.0);
    SpectralProjector proj(f);
    const double f_inf = std::exp(-1.0);

    std::vector<double> inside;
    for (double r = 0.0; r <= 0.9 + 1e-9; r += 0.1) inside.push_back(r);
    inside.push_back(0.95);
    std::vector<double> outside{1.05, 1.2, 1.5};

    std::vector<double> err_in(inside.size(), 0.0), err_out(outside.size(), 0.0);
    num::parallel_for(inside.size() + outside.size(), opt.threads, [&](std::size_t i) {
        if (i < inside.size()) {
            DiskPoint z = DiskPoint::from_polar(inside[i], 0.0);
            Complex rec = proj.invert(z, opt.lambda_max, 0.05).value;
            err_in[i] = std::abs(rec - f.eval(inside[i], 0.0));
        } else {
            std::size_t j = i - inside.size();
            DiskPoint z = DiskPoint::from_polar(outside[j], 0.0);
            err_out[j] = std::abs(proj.invert(z, opt.lambda_max, 0.05).value);
        }
    });
    double sup_in = 0.0, sup_out = 0.0;
    for (double e : err_in) sup_in = std::max(sup_in, e);
    for (double e : err_out) sup_out = std::max(sup_out, e);
    push_metric(res, opt, "inside_sup_rel_err", sup_in / f_inf, 1e-3);
    push_metric(res, opt, "outside_sup_over_finf", sup_out / f_inf, 1e-3);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult residue_sum_identity_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"residue-sum"};
    double worst = 0.0;
    for (int n : {0, 1}) {
        SpectralProjector proj(SO2FiniteFunction::bump_mode(n, 1.0));
        for (double r : {0.5, 2.0}) {  // inside and outside B_R(0)
            DiskPoint z = DiskPoint::from_polar(r, 0.3);
            worst = std::max(worst, proj.residue_sum(z, 20));
        }
    }
    push_metric(res, opt, "max_abs_partial_sum", worst, 1e-6);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult pw_envelope_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"pw-envelope"};
    num::ComplexGrid grid = num::ComplexGrid::uniform(-12.0, 12.0, 0.5, -3.0, 3.0, 0.25);

    // Disk, Theorem 7.1 condition 4: bump mode 1
    SpectralProjector proj(SO2FiniteFunction::bump_mode(1, 1.0));
    DiskPoint z = DiskPoint::from_polar(0.8, 0.4);
    double cmax = 0.0;
    for (int N = 1; N <= 4; ++N)
        cmax = std::max(cmax, proj.pw_envelope(grid, N, z).fitted_constant);
    push_metric(res, opt, "disk_max_certificate", cmax, 1e300);

    SpectralProjector proj_half(SO2FiniteFunction::bump_mode(1, 0.5));
    double c_full = proj.pw_envelope(grid, 2, z).fitted_constant;
    double c_half = proj_half.pw_envelope(grid, 2, z).fitted_constant;
    push_metric(res, opt, "disk_support_monotonicity", c_half / c_full - 1.0, 0.0);

    // NA, Theorem 3.1 condition 5: bump R = 1 on (m,k) = (2,1)
    na::NAParams p(2, 1);
    na::RadialProfile f = na::RadialProfile::bump(1.0);
    double cmax_na = 0.0;
    for (double rho : {0.0, 2.0}) {
        auto fits = na::pw_envelope_radial_multi(f, p, grid, {1, 2, 3, 4}, rho);
        for (const auto& fit : fits) cmax_na = std::max(cmax_na, fit.fitted_constant);
    }
    push_metric(res, opt, "na_max_certificate", cmax_na, 1e300);

    double c_a1 = na::pw_envelope_radial(f, p, grid, 2, 0.0, 1.0).fitted_constant;
    double c_a2 = na::pw_envelope_radial(f, p, grid, 2, 0.0, 1.5).fitted_constant;
    push_metric(res, opt, "na_claimed_radius_monotonicity", c_a2 / c_a1 - 1.0, 0.0);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult plancherel_identity_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"plancherel"};

    // Disk (alpha = beta = 0): ||f||^2 = (pi/2) int_0^inf |I(lam)|^2 lam tanh(pi lam/2) dlam
    SO2FiniteFunction f = SO2FiniteFunction::bump_mode(0, 1.0);
    SpectralProjector proj(f);
    double lhs = std::pow(disk::l2_norm_disk(f), 2);
    num::QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-9;
    double rhs = num::integrate_radial(
                     [&](double lam) {
                         Complex I = proj.coefficient_integral(0, Complex(lam, 0.0));
                         return Complex(
                             0.5 * kPi * std::norm(I) * lam * std::tanh(0.5 * kPi * lam), 0.0);
                     },
                     0.0, opt.lambda_max, spec)
                     .real();
    push_metric(res, opt, "disk_rel_gap", std::abs(lhs - rhs) / lhs, 1e-3);

    na::NAParams p(2, 1);
    na::PlancherelResult pr = na::plancherel_check(na::RadialProfile::bump(1.0), p, opt.lambda_max);
    push_metric(res, opt, "na_rel_gap", std::abs(pr.lhs - pr.rhs) / pr.lhs, 1e-3);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult l2_bound_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"l2-bound"};
    na::NAParams p(2, 1);
    na::RadialProfile f = na::RadialProfile::bump(1.0);
    double worst_slack = -1e300;
    double eq_gap = 0.0;
    for (double rho : {0.0, 0.5, 1.0, 2.0}) {
        na::PlancherelResult b = na::l2_projection_bound_check(f, rho, p, opt.lambda_max);
        worst_slack = std::max(worst_slack, b.lhs - b.rhs);
        if (rho == 0.0) eq_gap = std::abs(b.lhs / b.rhs - 1.0);
    }
    push_metric(res, opt, "max_bound_violation", worst_slack, 1e-9);
    push_metric(res, opt, "equality_gap_at_origin", eq_gap, 1e-3);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult density_consistency_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"density-consistency"};
    sf::JacobiParams p00(0.0, 0.0);
    std::vector<double> ratios;
    for (double lam = 0.5; lam <= 10.0 + 1e-9; lam += 0.5) {
        Complex c = sf::c_jacobi(p00, Complex(lam, 0.0));
        ratios.push_back(1.0 / std::norm(c) / (lam * std::tanh(0.5 * kPi * lam)));
    }
    double mean = 0.0;
    for (double r : ratios) mean += r;
    mean /= ratios.size();
    double var = 0.0;
    for (double r : ratios) var += (r - mean) * (r - mean);
    double rel_sd = std::sqrt(var / ratios.size()) / mean;
    push_metric(res, opt, "ratio_rel_std", rel_sd, 1e-8);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult koornwinder_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"koornwinder"};
    sf::JacobiParams p(1.0, 0.0);  // the (m,k) = (2,1) case
    num::ComplexGrid grid = num::ComplexGrid::uniform(-12.0, 12.0, 0.5, -2.0, 2.0, 0.25);
    double cmax = 0.0, growth = 0.0;
    for (int n : {0, 1}) {
        num::EnvelopeFit f4 = na::koornwinder_bound_check(p, n, grid, 4.0);
        num::EnvelopeFit f8 = na::koornwinder_bound_check(p, n, grid, 8.0);
        cmax = std::max(cmax, f4.fitted_constant);
        growth = std::max(growth, f8.fitted_constant / f4.fitted_constant - 1.0);
    }
    push_metric(res, opt, "max_certificate", cmax, 1e300);
    push_metric(res, opt, "tmax_doubling_growth", growth, 0.05);
    res.wall_ms = sw.ms();
    return res;
}

CheckResult group_geometry_check(const CheckOptions& opt) {
    Stopwatch sw;
    CheckResult res{"group-geometry"};
    na::NAParams p(2, 1);
    na::HTypeStructure s = na::HTypeStructure::heisenberg(1);
    std::mt19937 rng(20240711);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::uniform_real_distribution<double> ua(0.3, 3.0);
    auto rand_pt = [&] {
        na::NAPoint x;
        x.V = {u(rng), u(rng)};
        x.Z = {u(rng)};
        x.a = ua(rng);
        return x;
    };
    auto gap = [](const na::NAPoint& a, const na::NAPoint& b) {
        double g = std::abs(a.a - b.a);
        for (std::size_t i = 0; i < a.V.size(); ++i) g = std::max(g, std::abs(a.V[i] - b.V[i]));
        for (std::size_t i = 0; i < a.Z.size(); ++i) g = std::max(g, std::abs(a.Z[i] - b.Z[i]));
        return g;
    };
    const na::NAPoint e = na::identity(p);
    double worst_group = 0.0, worst_sigma = 0.0, worst_rho = 0.0;
    for (int i = 0; i < 1000; ++i) {
        na::NAPoint x = rand_pt(), y = rand_pt(), z = rand_pt();
        worst_group = std::max(worst_group, gap(na::group_mul(na::group_mul(x, y, s), z, s),
                                                na::group_mul(x, na::group_mul(y, z, s), s)));
        worst_group = std::max(worst_group, gap(na::group_mul(x, na::group_inv(x), s), e));
        worst_group = std::max(worst_group, gap(na::group_mul(x, e, s), x));
        worst_group = std::max(worst_group, gap(na::group_mul(e, x, s), x));
        worst_sigma =
            std::max(worst_sigma, gap(na::geodesic_inversion(na::geodesic_inversion(x, s), s), x));
        worst_rho = std::max(worst_rho, std::abs(na::geodesic_rho(x) -
                                                 na::geodesic_rho(na::group_inv(x))));
    }
    push_metric(res, opt, "group_axioms_err", worst_group, 1e-12);
    push_metric(res, opt, "sigma_involution_err", worst_sigma, 1e-12);
    push_metric(res, opt, "rho_inverse_symmetry_err", worst_rho, 1e-10);
    res.wall_ms = sw.ms();
    return res;
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"product-formula", product_formula_check},
        {"projection-cross-check", projection_cross_check},
        {"eigen-residuals", eigen_residual_check},
        {"roundtrip", roundtrip_check},
        {"residue-sum", residue_sum_identity_check},
        {"pw-envelope", pw_envelope_check},
        {"plancherel", plancherel_identity_check},
        {"l2-bound", l2_bound_check},
        {"density-consistency", density_consistency_check},
        {"koornwinder", koornwinder_check},
        {"group-geometry", group_geometry_check},
    };
    return reg;
}

}  // namespace specproj::checks
