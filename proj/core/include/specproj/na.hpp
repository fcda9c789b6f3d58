#pragma once

#include <functional>
#include <vector>

#include "specproj/numerics.hpp"
#include "specproj/specfun.hpp"
#include "specproj/types.hpp"

namespace specproj::na {

// The pair (m,k) fixing one Damek-Ricci space, with the derived constants.
struct NAParams {
    int m;  // dim of p, even
    int k;  // dim of the center z

    NAParams(int m_, int k_) : m(m_), k(k_) {
        if (m <= 0 || m % 2 != 0) throw ConfigError("NAParams: m must be a positive even integer");
        if (k <= 0) throw ConfigError("NAParams: k must be a positive integer");
    }
    double Q() const { return 0.5 * m + k; }
    double alpha() const { return 0.5 * (m + k - 1); }
    double beta() const { return 0.5 * (k - 1); }
    // c_{m,k} = 2^{k-1} Gamma((2m+k+1)/2) / pi^{(2m+k+1)/2}
    double c_mk() const;
    sf::JacobiParams jacobi() const { return sf::JacobiParams(alpha(), beta()); }
};

// Group element (V, Z, a) of NA = N x R_+.
struct NAPoint {
    std::vector<double> V;
    std::vector<double> Z;
    double a = 1.0;
};

// H-type structure: the bracket [.,.]: p x p -> z given by its coefficient
// table, and the maps J_Z derived from <J_Z V, V'> = <[V,V'], Z>.
class HTypeStructure {
  public:
    // table[z][i][j] = <[e_i, e_j], eps_z>, antisymmetric in (i,j).
    HTypeStructure(int m, int k, std::vector<double> table);
    static HTypeStructure heisenberg(int m_half);

    int m() const { return m_; }
    int k() const { return k_; }
    std::vector<double> bracket(const std::vector<double>& V, const std::vector<double>& Vp) const;
    std::vector<double> J(const std::vector<double>& Z, const std::vector<double>& V) const;
    // Checks J_Z^2 V = -|Z|^2 V on a basis; throws ConfigError on failure.
    void validate() const;

  private:
    int m_, k_;
    std::vector<double> table_;  // k * m * m, row-major [z][i][j]
    double coef(int z, int i, int j) const { return table_[(z * m_ + i) * m_ + j]; }
};

NAPoint identity(const NAParams& p);
NAPoint group_mul(const NAPoint& x, const NAPoint& y, const HTypeStructure& s);
NAPoint group_inv(const NAPoint& x);

// Geodesic distance from the identity, rho = log((1+r)/(1-r)) with
// r^2 = 1 - 4a/((1+a+|V|^2/4)^2 + |Z|^2).
double geodesic_rho(const NAPoint& x);

// Geodesic inversion sigma(V,Z,t) = D^{-1} [((-t + |V|^2/4) + J_Z) V, -Z, t],
// D = (t + |V|^2/4)^2 + |Z|^2.
NAPoint geodesic_inversion(const NAPoint& x, const HTypeStructure& s);

// d(x,y) = rho(x^{-1} y) by left invariance.
double distance(const NAPoint& x, const NAPoint& y, const HTypeStructure& s);

// Poisson kernel P_a(V,Z) = a^Q ((a + |V|^2/4)^2 + |Z|^2)^{-Q}.
double poisson_kernel(double a, const std::vector<double>& V, const std::vector<double>& Z,
                      const NAParams& p);

// P(na, nbar)^{1/2 - i lambda/Q} with the kernel evaluated at nbar^{-1} n.
Complex poisson_power(const NAPoint& x, const std::vector<double>& nbarV,
                      const std::vector<double>& nbarZ, Complex lambda, const NAParams& p,
                      const HTypeStructure& s);

// Spherical function Phi_lambda(rho) = phi_{2 lambda}^{(alpha,beta)}(rho/2).
Complex spherical_phi(const NAParams& p, Complex lambda, double rho);

// Radial volume density A(rho) = (2 sinh(rho/2))^{m+k} (2 cosh(rho/2))^k and
// the drift A'/A = (m/2) coth(rho/2) + k coth(rho).
double radial_density(const NAParams& p, double rho);
double radial_drift(const NAParams& p, double rho);

// Compactly supported smooth radial profile.
struct RadialProfile {
    std::function<double(double)> f;
    double R = 1.0;

    double operator()(double rho) const { return (rho >= R) ? 0.0 : f(rho); }
    // exp(-1/(1-(rho/R)^2)) on [0,R), 0 beyond.
    static RadialProfile bump(double R);
};

// Spherical transform int_0^R f(rho) Phi_lambda(rho) A(rho) drho.
Complex spherical_transform(const RadialProfile& f, Complex lambda, const NAParams& p,
                            int n_gauss = 512);

double l2_norm_sq(const RadialProfile& f, const NAParams& p);

// Calibration of the paper's (c_mk/...)|c(lambda)|^{-2} combinations against
// the Jacobi-analysis c-function: |c(lambda)|^{-2} = |c_jacobi(2 lambda)|^{-2} / c_mk.
// Fixed by the Plancherel/inversion round trip.
double c_calibration(const NAParams& p);

// Plancherel density (c_mk/2pi)|c(lambda)|^{-2} = (1/2pi)|c_jacobi(2lam)|^{-2}.
double plancherel_density(const NAParams& p, double lambda);
// Meromorphic continuation 1/(c(2 lam) c(-2 lam)) of |c_jacobi(2 lam)|^{-2}.
Complex inv_c_squared_mero(const NAParams& p, Complex lambda);

// Spectral projection of a radial function,
//   P_lambda f(x) = (c_mk/4pi)|c(lambda)|^{-2} ftilde(lambda) Phi_lambda(x).
Complex spectral_projection_radial(const RadialProfile& f, Complex lambda, double rho,
                                   const NAParams& p);

struct PlancherelResult {
    double lhs = 0.0;
    double rhs = 0.0;
};

// ||f||_2^2 vs (c_mk/2pi) int_0^inf |ftilde|^2 |c|^{-2} dlam.
PlancherelResult plancherel_check(const RadialProfile& f, const NAParams& p, double lambda_max);

// int_0^inf |P_lambda f(x)|^2 |c(lambda)|^2 dlam vs (c_mk/8pi)||f||^2.
PlancherelResult l2_projection_bound_check(const RadialProfile& f, double rho, const NAParams& p,
                                           double lambda_max = 40.0);

// Koornwinder bound certificate over grid x t in [0, t_max]:
//   |Gamma(alpha+1)^{-1} d^n/dt^n phi_lambda(t)|
//     <= C (1+|lambda|)^{n+kk} (1+t) e^{(|Im lambda| - rho0) t}.
num::EnvelopeFit koornwinder_bound_check(const sf::JacobiParams& p, int n,
                                         const num::ComplexGrid& grid, double t_max);

// Theorem 3.1 condition 5 certificate at fixed rho with claimed support radius a:
// envelope C |c|^{-2} (1+|lambda|^2)^{-N0} e^{|Im lambda| (rho + a)}.
num::EnvelopeFit pw_envelope_radial(const RadialProfile& f, const NAParams& p,
                                    const num::ComplexGrid& grid, int N0, double rho,
                                    double support_radius = -1.0, double pole_disc = 0.2);

// Same sweep fitted against several N0 at once (the values are shared).
std::vector<num::EnvelopeFit> pw_envelope_radial_multi(const RadialProfile& f, const NAParams& p,
                                                       const num::ComplexGrid& grid,
                                                       const std::vector<int>& N0s, double rho,
                                                       double support_radius = -1.0,
                                                       double pole_disc = 0.2);

// Poles of the meromorphic |c(2 lam)|^{-2} continuation within |Im| <= im_max.
std::vector<Complex> density_poles(const NAParams& p, double im_max);

}  // namespace specproj::na
