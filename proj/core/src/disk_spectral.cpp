#include "specproj/disk_spectral.hpp"

#include <algorithm>
#include <cmath>

#include "specproj/specfun.hpp"

namespace specproj::disk {

namespace {

const Complex kI(0.0, 1.0);

// ((1+i lambda)/2)_{|k|} / |k|!  -- the Gamma ratio of (6.3), entire in lambda.
Complex mode_pochhammer(Complex lambda, int k) {
    Complex s = 0.5 * (1.0 + kI * lambda);
    Complex out(1.0, 0.0);
    for (int j = 0; j < std::abs(k); ++j) out *= (s + static_cast<double>(j)) / (j + 1.0);
    return out;
}

// phi_lambda^{(|n|,-|n|)}(r) = 2F1((1+i lam)/2, (1-i lam)/2; 1+|n|; -sinh^2 r)
Complex phi_mode(Complex lambda, int n, double r) {
    double sh = std::sinh(r);
    return sf::hyp2f1(0.5 * (1.0 + kI * lambda), 0.5 * (1.0 - kI * lambda),
                      Complex(1.0 + std::abs(n), 0.0), -sh * sh);
}

bool near_projection_pole(Complex lambda, int n_min, double tol = 1e-12) {
    if (std::abs(lambda.real()) > tol) return false;
    double y = std::abs(lambda.imag());
    double r = std::round((y - 1.0) / 2.0);
    if (r < n_min) return false;
    return std::abs(y - (2.0 * r + 1.0)) <= tol;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

SO2FiniteFunction SO2FiniteFunction::bump_mode(int n, double R) {
    if (!(R > 0.0)) throw DomainError("bump_mode: R must be > 0");
    SO2FiniteFunction f;
    f.R = R;
    f.modes[n] = [R](double r) -> Complex {
        double x = r / R;
        if (std::abs(x) >= 1.0) return Complex(0.0, 0.0);
        return Complex(std::exp(-1.0 / (1.0 - x * x)), 0.0);
    };
    return f;
}

Complex SO2FiniteFunction::eval(double r, double theta) const {
    if (r >= R) return Complex(0.0, 0.0);
    Complex s(0.0, 0.0);
    for (const auto& [n, fn] : modes) s += fn(r) * std::exp(kI * static_cast<double>(n) * theta);
    return s;
}

DiskPoint SO2FiniteFunction::recenter(const DiskPoint& z) const {
    if (z0 == Complex(0.0, 0.0)) return z;
    return DiskPoint::from_cartesian((z.z - z0) / (1.0 - std::conj(z0) * z.z));
}

Complex SO2FiniteFunction::eval_at(const DiskPoint& z) const {
    DiskPoint c = recenter(z);
    return eval(c.r, c.theta);
}

int SO2FiniteFunction::min_abs_mode() const {
    int mn = INT_MAX;
    for (const auto& [n, fn] : modes) mn = std::min(mn, std::abs(n));
    return (mn == INT_MAX) ? 0 : mn;
}

Complex generalized_spherical(Complex lambda, int k, double r) {
    if (r < 0.0) throw DomainError("generalized_spherical: r must be >= 0");
    return mode_pochhammer(lambda, k) * std::pow(std::tanh(r), std::abs(k)) *
           phi_mode(lambda, std::abs(k), r);
}

Complex generalized_spherical_circle(Complex lambda, int k, double r, int n_points) {
    DiskPoint base = DiskPoint::from_polar(r, 0.0);
    return num::integrate_circle(
        [&](double u) {
            DiskPoint z = DiskPoint::from_polar(r, u);
            return poisson_power(z, BoundaryPoint{0.0}, lambda) *
                   std::exp(kI * static_cast<double>(k) * u);
        },
        n_points);
}

Complex spherical_phi_disk(Complex lambda, double r) {
    if (r < 0.0) throw DomainError("spherical_phi_disk: r must be >= 0");
    if (lambda == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    return 0.5 * lambda * std::tanh(0.5 * kPi * lambda) *
           sf::legendre_p(-0.5 * (1.0 + kI * lambda), std::cosh(2.0 * r));
}

Complex spherical_phi_disk_circle(Complex lambda, double r, int n_points) {
    if (lambda == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    return 0.5 * lambda * std::tanh(0.5 * kPi * lambda) *
           generalized_spherical_circle(lambda, 0, r, n_points);
}

Complex gamma_factor(Complex lambda, int n) {
    const int an = std::abs(n);
    Complex g1 = sf::gamma_complex(an + 0.5 * (1.0 + kI * lambda));
    Complex g2 = sf::gamma_complex(an + 0.5 * (1.0 - kI * lambda));
    double fq = factorial(an);
    return 1.0 / (4.0 * kPi) * lambda * std::sinh(0.5 * kPi * lambda) * g1 * g2 / (fq * fq);
}

std::vector<Complex> projection_poles(int n, int K) {
    std::vector<Complex> out;
    for (int k = std::abs(n); k <= K; ++k) {
        out.emplace_back(0.0, 2.0 * k + 1.0);
        out.emplace_back(0.0, -(2.0 * k + 1.0));
    }
    return out;
}

SpectralProjector::SpectralProjector(SO2FiniteFunction f, ProjectorOptions opt)
    : f_(std::move(f)), opt_(opt) {
    if (opt_.n_theta < 8 || (opt_.n_theta & (opt_.n_theta - 1)) != 0)
        throw ConfigError("SpectralProjector: n_theta must be a power of two >= 8");
}

Complex SpectralProjector::fh_forward(Complex lambda, const BoundaryPoint& w) const {
    // In the coordinates centered at z0 the measure is unchanged (Moebius
    // translations are isometries); only the kernel argument moves.
    const Complex z0 = f_.z0;
    auto kernel_at = [&](double r, double th) {
        Complex u = to_cartesian(r, th);
        Complex z = (z0 == Complex(0.0, 0.0)) ? u : (u + z0) / (1.0 + std::conj(z0) * u);
        return poisson_power(DiskPoint::from_cartesian(z), w, -lambda);
    };
    return num::gauss_fixed(
        [&](double r) {
            Complex inner = num::integrate_circle(
                [&](double th) { return f_.eval(r, th) * kernel_at(r, th); }, opt_.n_theta);
            return kPi * std::sinh(2.0 * r) * inner;
        },
        0.0, f_.R, opt_.n_radial);
}

const std::vector<Complex>& SpectralProjector::fhat_nodes(Complex lambda) const {
    const std::pair<double, double> key{lambda.real(), lambda.imag()};
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = fhat_cache_.find(key);
        if (it != fhat_cache_.end()) return *it->second;
    }
    const int N = opt_.n_theta;
    auto out = std::make_shared<std::vector<Complex>>(N, Complex(0.0, 0.0));
    if (f_.z0 == Complex(0.0, 0.0)) {
        // With z0 = 0 the kernel depends on theta - phi only, so the circle
        // layer of the quadrature is a circular correlation over the uniform
        // angle grid.
        const num::GaussRule& rule = num::gauss_legendre(opt_.n_radial);
        const double half = 0.5 * f_.R;
        std::vector<Complex> fr(N), g(N);
        for (int i = 0; i < opt_.n_radial; ++i) {
            const double r = half + half * rule.x[i];
            const double wr = half * rule.w[i] * kPi * std::sinh(2.0 * r);
            for (int l = 0; l < N; ++l) {
                double u = 2.0 * kPi * l / N;
                fr[l] = f_.eval(r, u);
                g[l] = poisson_power(DiskPoint::from_polar(r, u), BoundaryPoint{0.0}, -lambda);
            }
            std::vector<Complex> corr = num::circular_correlation(fr, g);
            for (int j = 0; j < N; ++j) (*out)[j] += wr * corr[j] / static_cast<double>(N);
        }
    } else {
        for (int j = 0; j < N; ++j)
            (*out)[j] = fh_forward(lambda, BoundaryPoint{2.0 * kPi * j / N});
    }
    std::lock_guard<std::mutex> lock(mtx_);
    auto [it, inserted] = fhat_cache_.emplace(key, std::move(out));
    return *it->second;
}

Complex SpectralProjector::projection_quadrature(Complex lambda, const DiskPoint& z) const {
    if (near_projection_pole(lambda, f_.min_abs_mode()))
        throw PoleError("projection_quadrature: lambda is a projection pole");
    const std::vector<Complex>& fh = fhat_nodes(lambda);
    const int N = opt_.n_theta;
    Complex acc(0.0, 0.0);
    for (int j = 0; j < N; ++j) {
        BoundaryPoint w{2.0 * kPi * j / N};
        acc += fh[j] * poisson_power(z, w, lambda);
    }
    acc /= static_cast<double>(N);
    return 0.25 / kPi * lambda * std::tanh(0.5 * kPi * lambda) * acc;
}

Complex SpectralProjector::coefficient_integral(int mode, Complex lambda) const {
    const std::tuple<int, double, double> key{mode, lambda.real(), lambda.imag()};
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = coef_cache_.find(key);
        if (it != coef_cache_.end()) return it->second;
    }
    const auto& fn = f_.modes.at(mode);
    const int an = std::abs(mode);
    Complex v = num::gauss_fixed(
        [&](double s) {
            return fn(s) * phi_mode(lambda, an, s) * std::pow(std::tanh(s), an) *
                   std::sinh(2.0 * s);
        },
        0.0, f_.R, opt_.n_coef);
    std::lock_guard<std::mutex> lock(mtx_);
    coef_cache_.emplace(key, v);
    return v;
}

Complex SpectralProjector::projection_closed(Complex lambda, const DiskPoint& z) const {
    DiskPoint c = f_.recenter(z);
    Complex acc(0.0, 0.0);
    for (const auto& [n, fn] : f_.modes) {
        Complex gf = gamma_factor(lambda, n);  // throws PoleError at the mode's poles
        acc += gf * std::pow(std::tanh(c.r), std::abs(n)) * phi_mode(lambda, n, c.r) *
               std::exp(kI * static_cast<double>(n) * c.theta) * coefficient_integral(n, lambda);
    }
    return acc;
}

SpectralProjector::Residue SpectralProjector::residue_at_pole(int k, const DiskPoint& z,
                                                              int half) const {
    if (k < 0) throw DomainError("residue_at_pole: k must be >= 0");
    if (half != 1 && half != -1) throw DomainError("residue_at_pole: half must be +-1");
    DiskPoint c = f_.recenter(z);
    const Complex lam_k(0.0, half * (2.0 * k + 1.0));
    Residue res;
    for (const auto& [n, fn] : f_.modes) {
        const int an = std::abs(n);
        if (k < an) continue;
        res.at_pole = true;
        const int j = k - an;
        const double sgn_j = (j % 2 == 0) ? 1.0 : -1.0;
        // Residue of gamma_factor at lam_k: the pole sits in one Gamma factor;
        // Res Gamma at -j is (-1)^j/j!, the chain rule gives d(arg)/dlam = +-i/2.
        Complex chain = (half == 1) ? Complex(0.0, -2.0) : Complex(0.0, 2.0);  // 1/(dw/dlam)
        Complex other_gamma = sf::gamma_complex(Complex(an + k + 1.0, 0.0));
        double fq = factorial(an);
        Complex res_gamma = 1.0 / (4.0 * kPi) * lam_k * std::sinh(0.5 * kPi * lam_k) *
                            (sgn_j / factorial(j)) * chain * other_gamma / (fq * fq);
        res.value += res_gamma * std::pow(std::tanh(c.r), an) * phi_mode(lam_k, n, c.r) *
                     std::exp(kI * static_cast<double>(n) * c.theta) *
                     coefficient_integral(n, lam_k);
    }
    return res;
}

double SpectralProjector::residue_sum(const DiskPoint& z, int K) const {
    Complex acc(0.0, 0.0);
    for (int k = f_.min_abs_mode(); k <= K; ++k) {
        acc += residue_at_pole(k, z, +1).value;
        acc += residue_at_pole(k, z, -1).value;
    }
    return std::abs(acc);
}

SpectralProjector::InversionResult SpectralProjector::invert(const DiskPoint& z, double lambda_max,
                                                             double step) const {
    if (!(step > 0.0) || !(lambda_max > 0.0)) throw ConfigError("invert: bad lambda grid");
    const int N = static_cast<int>(std::round(lambda_max / step));
    InversionResult out;
    // even integrand: the [-L, L] trapezoid equals twice the [0, L] one
    double tail_scale = 0.0, global_scale = 0.0;
    for (int i = 0; i <= N; ++i) {
        double lam = i * step;
        Complex v = projection_closed(Complex(lam, 0.0), z);
        double wgt = (i == 0 || i == N) ? 0.5 * step : step;
        out.value += 2.0 * wgt * v;
        global_scale = std::max(global_scale, std::abs(v));
        if (i > N - 20) tail_scale = std::max(tail_scale, std::abs(v));
    }
    out.truncation_warning = tail_scale > 1e-6 * global_scale;
    return out;
}

num::EnvelopeFit SpectralProjector::pw_envelope(const num::ComplexGrid& grid, int N,
                                                const DiskPoint& z, double pole_disc) const {
    double im_max = 0.0;
    for (double y : grid.im_points) im_max = std::max(im_max, std::abs(y));
    const int K = static_cast<int>(im_max / 2.0) + 1;
    std::vector<Complex> pts =
        grid.points_excluding(projection_poles(f_.min_abs_mode(), K), pole_disc);
    const double d = distance(DiskPoint::from_cartesian(f_.z0), z);
    num::EnvelopeFit fit;
    fit.model_order = N;
    for (Complex lam : pts) {
        double value = std::abs(projection_closed(lam, z));
        double env = std::pow(1.0 + std::abs(lam), -N) *
                     std::exp((f_.R + d) * std::abs(lam.imag()));
        fit.fitted_constant = std::max(fit.fitted_constant, value / env);
    }
    return fit;
}

MeromorphicProfile meromorphic_profile(const SpectralProjector& proj, const DiskPoint& z, int K) {
    if (proj.function().modes.size() != 1)
        throw ConfigError("meromorphic_profile: needs a single-mode function");
    MeromorphicProfile mp;
    mp.mode = proj.function().modes.begin()->first;
    mp.value = [&proj, z](Complex lam) { return proj.projection_closed(lam, z); };
    mp.poles = projection_poles(mp.mode, K);
    mp.zeros.emplace_back(0.0, 0.0);  // double zero
    for (int l = 1; l <= K; ++l) {
        mp.zeros.emplace_back(0.0, 2.0 * l);
        mp.zeros.emplace_back(0.0, -2.0 * l);
    }
    for (int k = std::abs(mp.mode); k <= K; ++k)
        mp.residues[k] = proj.residue_at_pole(k, z, +1).value;
    return mp;
}

DecomposeResult so2_decompose(const PolarSamples& samples, double drop_tol) {
    const int N = samples.n_theta;
    const std::size_t nr = samples.radii.size();
    if (N < 4 || nr < 2) throw ConfigError("so2_decompose: grid too small");
    if (samples.values.size() != nr) throw DimensionMismatch("so2_decompose: row count mismatch");
    for (const auto& row : samples.values)
        if (row.size() != static_cast<std::size_t>(N))
            throw DimensionMismatch("so2_decompose: row length mismatch");

    // theta-DFT per radius: c_n(r_i) = (1/N) sum_j F(r_i, theta_j) e^{-i n theta_j}
    std::vector<std::vector<Complex>> coef(nr, std::vector<Complex>(N));
    for (std::size_t i = 0; i < nr; ++i) {
        for (int n = 0; n < N; ++n) {
            Complex s(0.0, 0.0);
            for (int j = 0; j < N; ++j)
                s += samples.values[i][j] *
                     std::exp(-kI * (2.0 * kPi * n * j / static_cast<double>(N)));
            coef[i][n] = s / static_cast<double>(N);
        }
    }
    auto signed_mode = [N](int n) { return (n <= N / 2) ? n : n - N; };
    std::vector<double> mass(N, 0.0);
    double total = 0.0;
    for (int n = 0; n < N; ++n) {
        for (std::size_t i = 0; i < nr; ++i) mass[n] += std::norm(coef[i][n]);
        total += mass[n];
    }
    DecomposeResult out;
    out.f.R = samples.R;
    if (total == 0.0) return out;
    for (int n = 0; n < N; ++n) {
        if (mass[n] / total <= drop_tol) continue;
        int sn = signed_mode(n);
        if (std::abs(sn) >= N / 2) out.alias_warning = true;
        std::vector<double> re(nr), im(nr);
        for (std::size_t i = 0; i < nr; ++i) {
            re[i] = coef[i][n].real();
            im[i] = coef[i][n].imag();
        }
        auto fre = num::pchip(samples.radii, std::move(re));
        auto fim = num::pchip(samples.radii, std::move(im));
        double R = samples.R;
        out.f.modes[sn] = [fre, fim, R](double r) -> Complex {
            if (r >= R) return Complex(0.0, 0.0);
            return Complex(fre(r), fim(r));
        };
    }
    return out;
}

SO2FiniteFunction radialize(const SO2FiniteFunction& f) {
    SO2FiniteFunction out;
    out.R = f.R;
    out.z0 = f.z0;
    auto it = f.modes.find(0);
    if (it != f.modes.end()) out.modes[0] = it->second;
    return out;
}

double l2_norm_disk(const SO2FiniteFunction& f, int n_gauss) {
    double s = 0.0;
    for (const auto& [n, fn] : f.modes) {
        s += kPi *
             num::gauss_fixed(
                 [&fn](double r) { return Complex(std::norm(fn(r)) * std::sinh(2.0 * r), 0.0); },
                 0.0, f.R, n_gauss)
                 .real();
    }
    return std::sqrt(s);
}

EigenExpansion eigen_expansion_coeffs(const std::function<Complex(DiskPoint)>& F, Complex lambda,
                                      int cutoff, double r_star, int n_theta) {
    if (cutoff < 0 || !(r_star > 0.0)) throw ConfigError("eigen_expansion_coeffs: bad arguments");
    // check the eigenequation at a probe point before trusting the expansion
    {
        DiskPoint probe = DiskPoint::from_polar(std::max(r_star, 0.2), 0.7);
        auto field = [&F](Complex z) { return F(DiskPoint::from_cartesian(z)); };
        const double h = 2e-3;
        Complex lap = laplacian_apply(field, probe, h);
        Complex want = -(lambda * lambda + 1.0) * F(probe);
        double scale = std::abs(F(probe)) * (1.0 + std::norm(lambda));
        if (std::abs(lap - want) > std::max(1e-4 * scale, 1e-8))
            throw DomainError("eigen_expansion_coeffs: F fails the eigenfunction test");
    }
    EigenExpansion out;
    out.lambda = lambda;
    for (int k = -cutoff; k <= cutoff; ++k) {
        Complex mk(0.0, 0.0);
        for (int j = 0; j < n_theta; ++j) {
            double th = 2.0 * kPi * j / n_theta;
            mk += F(DiskPoint::from_polar(r_star, th)) * std::exp(-kI * static_cast<double>(k) * th);
        }
        mk /= static_cast<double>(n_theta);
        Complex radial = std::pow(std::tanh(r_star), std::abs(k)) * phi_mode(lambda, k, r_star);
        if (std::abs(radial) < 1e-10)
            throw IllConditioned("eigen_expansion_coeffs: radial factor below 1e-10 at r_star");
        out.coeffs[k] = mk / radial;
    }
    return out;
}

Complex eigen_expansion_eval(const EigenExpansion& e, const DiskPoint& z) {
    Complex s(0.0, 0.0);
    for (const auto& [k, ak] : e.coeffs)
        s += ak * std::pow(std::tanh(z.r), std::abs(k)) * phi_mode(e.lambda, k, z.r) *
             std::exp(kI * static_cast<double>(k) * z.theta);
    return s;
}

}  // namespace specproj::disk
