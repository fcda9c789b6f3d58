#include "specproj/na.hpp"

#include <cmath>

namespace specproj::na {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm_sq(const std::vector<double>& a) { return dot(a, a); }

}  // namespace

double NAParams::c_mk() const {
    double e = 0.5 * (2.0 * m + k + 1.0);
    return std::pow(2.0, k - 1) * std::tgamma(e) * std::pow(kPi, -e);
}

HTypeStructure::HTypeStructure(int m, int k, std::vector<double> table)
    : m_(m), k_(k), table_(std::move(table)) {
    if (m_ <= 0 || k_ <= 0) throw ConfigError("HTypeStructure: dimensions must be positive");
    if (table_.size() != static_cast<std::size_t>(k_) * m_ * m_)
        throw DimensionMismatch("HTypeStructure: bracket table has wrong size");
    validate();
}

HTypeStructure HTypeStructure::heisenberg(int m_half) {
    if (m_half <= 0) throw ConfigError("heisenberg: m_half must be positive");
    const int m = 2 * m_half;
    std::vector<double> table(static_cast<std::size_t>(m) * m, 0.0);
    // V = (v, w); [V, V'] = v.w' - w.v'; J_{z}(v,w) = z(-w, v).
    for (int i = 0; i < m_half; ++i) {
        table[static_cast<std::size_t>(i) * m + (m_half + i)] = 1.0;
        table[static_cast<std::size_t>(m_half + i) * m + i] = -1.0;
    }
    return HTypeStructure(m, 1, std::move(table));
}

std::vector<double> HTypeStructure::bracket(const std::vector<double>& V,
                                            const std::vector<double>& Vp) const {
    if (V.size() != static_cast<std::size_t>(m_) || Vp.size() != static_cast<std::size_t>(m_))
        throw DimensionMismatch("bracket: V dimension mismatch");
    std::vector<double> Z(k_, 0.0);
    for (int z = 0; z < k_; ++z) {
        double s = 0.0;
        for (int i = 0; i < m_; ++i) {
            if (V[i] == 0.0) continue;
            for (int j = 0; j < m_; ++j) s += coef(z, i, j) * V[i] * Vp[j];
        }
        Z[z] = s;
    }
    return Z;
}

std::vector<double> HTypeStructure::J(const std::vector<double>& Z,
                                      const std::vector<double>& V) const {
    if (Z.size() != static_cast<std::size_t>(k_) || V.size() != static_cast<std::size_t>(m_))
        throw DimensionMismatch("J: dimension mismatch");
    // <J_Z V, e_i> = <[V, e_i], Z> = sum_z Z_z sum_j coef(z, j, i) V_j
    std::vector<double> out(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
        double s = 0.0;
        for (int z = 0; z < k_; ++z) {
            if (Z[z] == 0.0) continue;
            for (int j = 0; j < m_; ++j) s += Z[z] * coef(z, j, i) * V[j];
        }
        out[i] = s;
    }
    return out;
}

void HTypeStructure::validate() const {
    // antisymmetry of the bracket table
    for (int z = 0; z < k_; ++z)
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j)
                if (std::abs(coef(z, i, j) + coef(z, j, i)) > 1e-12)
                    throw ConfigError("HTypeStructure: bracket table is not antisymmetric");
    // J_Z^2 = -|Z|^2 id on the basis, for basis Z and mixed unit Z
    auto check_unit = [this](const std::vector<double>& Z) {
        for (int i = 0; i < m_; ++i) {
            std::vector<double> e(m_, 0.0);
            e[i] = 1.0;
            std::vector<double> jj = J(Z, J(Z, e));
            for (int l = 0; l < m_; ++l) {
                double want = (l == i) ? -norm_sq(Z) : 0.0;
                if (std::abs(jj[l] - want) > 1e-10)
                    throw ConfigError("HTypeStructure: J_Z^2 != -|Z|^2 id");
            }
        }
    };
    for (int z = 0; z < k_; ++z) {
        std::vector<double> Z(k_, 0.0);
        Z[z] = 1.0;
        check_unit(Z);
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int z1 = 0; z1 < k_; ++z1)
        for (int z2 = z1 + 1; z2 < k_; ++z2) {
            std::vector<double> Z(k_, 0.0);
            Z[z1] = inv_sqrt2;
            Z[z2] = inv_sqrt2;
            check_unit(Z);
        }
}

NAPoint identity(const NAParams& p) {
    return NAPoint{std::vector<double>(p.m, 0.0), std::vector<double>(p.k, 0.0), 1.0};
}

NAPoint group_mul(const NAPoint& x, const NAPoint& y, const HTypeStructure& s) {
    if (x.V.size() != y.V.size() || x.Z.size() != y.Z.size())
        throw DimensionMismatch("group_mul: operand dimensions differ");
    const double sa = std::sqrt(x.a);
    std::vector<double> br = s.bracket(x.V, y.V);
    NAPoint out;
    out.V.resize(x.V.size());
    out.Z.resize(x.Z.size());
    for (std::size_t i = 0; i < x.V.size(); ++i) out.V[i] = x.V[i] + sa * y.V[i];
    for (std::size_t i = 0; i < x.Z.size(); ++i) out.Z[i] = x.Z[i] + x.a * y.Z[i] + 0.5 * sa * br[i];
    out.a = x.a * y.a;
    return out;
}

NAPoint group_inv(const NAPoint& x) {
    NAPoint out;
    const double isa = 1.0 / std::sqrt(x.a);
    out.V.resize(x.V.size());
    out.Z.resize(x.Z.size());
    for (std::size_t i = 0; i < x.V.size(); ++i) out.V[i] = -isa * x.V[i];
    for (std::size_t i = 0; i < x.Z.size(); ++i) out.Z[i] = -x.Z[i] / x.a;
    out.a = 1.0 / x.a;
    return out;
}

double geodesic_rho(const NAPoint& x) {
    if (!(x.a > 0.0)) throw DomainError("geodesic_rho: a must be > 0");
    double q = 1.0 + x.a + 0.25 * norm_sq(x.V);
    double r2 = 1.0 - 4.0 * x.a / (q * q + norm_sq(x.Z));
    if (r2 < 0.0) r2 = 0.0;  // round-off at the identity
    double r = std::sqrt(r2);
    return std::log((1.0 + r) / (1.0 - r));
}

NAPoint geodesic_inversion(const NAPoint& x, const HTypeStructure& s) {
    const double t = x.a;
    const double q = t + 0.25 * norm_sq(x.V);
    const double D = q * q + norm_sq(x.Z);
    if (D == 0.0) throw SingularPoint("geodesic_inversion: degenerate denominator");
    std::vector<double> JV = s.J(x.Z, x.V);
    NAPoint out;
    out.V.resize(x.V.size());
    out.Z.resize(x.Z.size());
    const double c = -t + 0.25 * norm_sq(x.V);
    for (std::size_t i = 0; i < x.V.size(); ++i) out.V[i] = (c * x.V[i] + JV[i]) / D;
    for (std::size_t i = 0; i < x.Z.size(); ++i) out.Z[i] = -x.Z[i] / D;
    out.a = t / D;
    return out;
}

double distance(const NAPoint& x, const NAPoint& y, const HTypeStructure& s) {
    return geodesic_rho(group_mul(group_inv(x), y, s));
}

double poisson_kernel(double a, const std::vector<double>& V, const std::vector<double>& Z,
                      const NAParams& p) {
    if (!(a > 0.0)) throw DomainError("poisson_kernel: a must be > 0");
    double q = a + 0.25 * norm_sq(V);
    return std::pow(a, p.Q()) * std::pow(q * q + norm_sq(Z), -p.Q());
}

Complex poisson_power(const NAPoint& x, const std::vector<double>& nbarV,
                      const std::vector<double>& nbarZ, Complex lambda, const NAParams& p,
                      const HTypeStructure& s) {
    // nbar^{-1} n with n = (V, Z) of x, computed in N
    std::vector<double> br = s.bracket(nbarV, x.V);
    std::vector<double> V(x.V.size()), Z(x.Z.size());
    for (std::size_t i = 0; i < V.size(); ++i) V[i] = x.V[i] - nbarV[i];
    for (std::size_t i = 0; i < Z.size(); ++i) Z[i] = x.Z[i] - nbarZ[i] - 0.5 * br[i];
    double P = poisson_kernel(x.a, V, Z, p);
    Complex expo = 0.5 - Complex(0.0, 1.0) * lambda / p.Q();
    return std::exp(expo * std::log(P));
}

Complex spherical_phi(const NAParams& p, Complex lambda, double rho) {
    return sf::jacobi_phi(p.jacobi(), 2.0 * lambda, 0.5 * rho);
}

double radial_density(const NAParams& p, double rho) {
    if (rho < 0.0) throw DomainError("radial_density: rho must be >= 0");
    return std::pow(2.0 * std::sinh(0.5 * rho), p.m + p.k) * std::pow(2.0 * std::cosh(0.5 * rho), p.k);
}

double radial_drift(const NAParams& p, double rho) {
    if (!(rho > 0.0)) throw DomainError("radial_drift: rho must be > 0");
    return 0.5 * p.m / std::tanh(0.5 * rho) + p.k / std::tanh(rho);
}

RadialProfile RadialProfile::bump(double R) {
    if (!(R > 0.0)) throw DomainError("RadialProfile::bump: R must be > 0");
    return RadialProfile{[R](double rho) {
                             double x = rho / R;
                             if (std::abs(x) >= 1.0) return 0.0;
                             return std::exp(-1.0 / (1.0 - x * x));
                         },
                         R};
}

Complex spherical_transform(const RadialProfile& f, Complex lambda, const NAParams& p,
                            int n_gauss) {
    return num::gauss_fixed(
        [&](double rho) { return f(rho) * spherical_phi(p, lambda, rho) * radial_density(p, rho); },
        0.0, f.R, n_gauss);
}

double l2_norm_sq(const RadialProfile& f, const NAParams& p) {
    return num::gauss_fixed(
               [&](double rho) {
                   double v = f(rho);
                   return Complex(v * v * radial_density(p, rho), 0.0);
               },
               0.0, f.R, 512)
        .real();
}

double c_calibration(const NAParams& p) { return 1.0 / p.c_mk(); }

double plancherel_density(const NAParams& p, double lambda) {
    if (lambda == 0.0) return 0.0;  // |c|^{-2} vanishes at the origin
    Complex c = sf::c_jacobi(p.jacobi(), Complex(2.0 * lambda, 0.0));
    return p.c_mk() / (2.0 * kPi) * c_calibration(p) / std::norm(c);
}

Complex inv_c_squared_mero(const NAParams& p, Complex lambda) {
    sf::JacobiParams jp = p.jacobi();
    return 1.0 / (sf::c_jacobi(jp, 2.0 * lambda) * sf::c_jacobi(jp, -2.0 * lambda));
}

Complex spectral_projection_radial(const RadialProfile& f, Complex lambda, double rho,
                                   const NAParams& p) {
    if (lambda == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    Complex w;
    if (lambda.imag() == 0.0) {
        Complex c = sf::c_jacobi(p.jacobi(), 2.0 * lambda);
        w = Complex(1.0 / std::norm(c), 0.0);
    } else {
        w = inv_c_squared_mero(p, lambda);
    }
    Complex weight = p.c_mk() / (4.0 * kPi) * c_calibration(p) * w;
    return weight * spherical_transform(f, lambda, p) * spherical_phi(p, lambda, rho);
}

PlancherelResult plancherel_check(const RadialProfile& f, const NAParams& p, double lambda_max) {
    PlancherelResult out;
    out.lhs = l2_norm_sq(f, p);
    num::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-9;
    // |c|^{-2} vanishes at lambda = 0; start at a small offset.
    out.rhs = num::integrate_radial(
                  [&](double lam) {
                      Complex ft = spherical_transform(f, Complex(lam, 0.0), p);
                      return Complex(std::norm(ft) * plancherel_density(p, lam), 0.0);
                  },
                  1e-6, lambda_max, spec)
                  .real();
    return out;
}

PlancherelResult l2_projection_bound_check(const RadialProfile& f, double rho, const NAParams& p,
                                           double lambda_max) {
    PlancherelResult out;
    num::QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-8;
    out.lhs = num::integrate_radial(
                  [&](double lam) {
                      Complex pf = spectral_projection_radial(f, Complex(lam, 0.0), rho, p);
                      Complex c = sf::c_jacobi(p.jacobi(), Complex(2.0 * lam, 0.0));
                      // calibrated |c(lambda)|^2 = c_mk |c_jacobi(2 lam)|^2
                      return Complex(std::norm(pf) * p.c_mk() * std::norm(c), 0.0);
                  },
                  1e-6, lambda_max, spec)
                  .real();
    out.rhs = p.c_mk() / (8.0 * kPi) * l2_norm_sq(f, p);
    return out;
}

num::EnvelopeFit koornwinder_bound_check(const sf::JacobiParams& p, int n,
                                         const num::ComplexGrid& grid, double t_max) {
    if (n != 0 && n != 1) throw DomainError("koornwinder_bound_check: n must be 0 or 1");
    const double kk = (p.alpha > -0.5) ? 0.0 : 0.5 - p.alpha;
    const double ga = std::tgamma(p.alpha + 1.0);
    const int nt = 33;
    num::EnvelopeFit fit;
    fit.model_order = n;
    for (Complex lam : grid.points()) {
        for (int i = 0; i < nt; ++i) {
            double t = t_max * i / (nt - 1);
            Complex v = (n == 0) ? sf::jacobi_phi(p, lam, t) : sf::jacobi_phi_derivative(p, lam, t);
            double env = std::pow(1.0 + std::abs(lam), n + kk) * (1.0 + t) *
                         std::exp((std::abs(lam.imag()) - p.rho0()) * t);
            fit.fitted_constant = std::max(fit.fitted_constant, std::abs(v) / ga / env);
        }
    }
    return fit;
}

std::vector<Complex> density_poles(const NAParams& p, double im_max) {
    std::vector<Complex> out;
    out.emplace_back(0.0, 0.0);  // zero of the density; c(2 lambda) is singular there
    const double r0 = p.jacobi().rho0();
    const double ab1 = p.alpha() - p.beta() + 1.0;
    for (int j = 0; j < 4 * static_cast<int>(im_max) + 8; ++j) {
        for (double base : {r0, ab1}) {
            double y = 0.5 * (base + 2.0 * j);
            if (y <= im_max + 0.5) {
                out.emplace_back(0.0, y);
                out.emplace_back(0.0, -y);
            }
        }
    }
    return out;
}

std::vector<num::EnvelopeFit> pw_envelope_radial_multi(const RadialProfile& f, const NAParams& p,
                                                       const num::ComplexGrid& grid,
                                                       const std::vector<int>& N0s, double rho,
                                                       double support_radius, double pole_disc) {
    const double a = (support_radius > 0.0) ? support_radius : f.R;
    double im_max = 0.0;
    for (double y : grid.im_points) im_max = std::max(im_max, std::abs(y));
    std::vector<Complex> pts = grid.points_excluding(density_poles(p, im_max), pole_disc);
    const double cal = c_calibration(p);
    std::vector<num::EnvelopeFit> fits;
    for (int N0 : N0s) fits.push_back(num::EnvelopeFit{N0, 0.0, 0.0});
    for (Complex lam : pts) {
        double value = std::abs(spectral_projection_radial(f, lam, rho, p));
        double inv_c2 = std::abs(inv_c_squared_mero(p, lam)) * cal;
        double grow = std::exp(std::abs(lam.imag()) * (rho + a));
        for (std::size_t i = 0; i < N0s.size(); ++i) {
            double env = inv_c2 * std::pow(1.0 + std::norm(lam), -N0s[i]) * grow;
            fits[i].fitted_constant = std::max(fits[i].fitted_constant, value / env);
        }
    }
    return fits;
}

num::EnvelopeFit pw_envelope_radial(const RadialProfile& f, const NAParams& p,
                                    const num::ComplexGrid& grid, int N0, double rho,
                                    double support_radius, double pole_disc) {
    return pw_envelope_radial_multi(f, p, grid, {N0}, rho, support_radius, pole_disc).front();
}

}  // namespace specproj::na
