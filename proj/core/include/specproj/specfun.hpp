#pragma once

#include "specproj/types.hpp"

namespace specproj::sf {

// Parameter pair (alpha, beta) of Jacobi analysis; rho0 = alpha + beta + 1.
struct JacobiParams {
    double alpha;
    double beta;

    JacobiParams(double a, double b) : alpha(a), beta(b) {
        if (!(alpha > -1.0))
            throw DomainError("JacobiParams: alpha must be > -1");
    }
    double rho0() const { return alpha + beta + 1.0; }
};

// Gamma(z) for complex z, Lanczos approximation with reflection for
// Re z < 1/2. Relative accuracy ~1e-13 for |z| <= 50.
Complex gamma_complex(Complex z);

// log Gamma(z). The branch is exp-consistent (exp(log_gamma(z)) == gamma(z))
// but not continuous across the plane; use only inside exp'd ratios.
Complex log_gamma(Complex z);

// Gauss hypergeometric 2F1(a,b;c;x) for real x < 1 (x <= 0 or 0 <= x < 1)
// and complex parameters. Series / Pfaff / connection formulas picked by
// argument range.
Complex hyp2f1(Complex a, Complex b, Complex c, double x);

// d/dx 2F1(a,b;c;x) = (ab/c) 2F1(a+1,b+1;c+1;x).
Complex hyp2f1_derivative(Complex a, Complex b, Complex c, double x);

// Jacobi function phi_lambda^{(alpha,beta)}(t)
//   = 2F1((rho0+i*lambda)/2, (rho0-i*lambda)/2; alpha+1; -sinh^2 t).
Complex jacobi_phi(const JacobiParams& p, Complex lambda, double t);

// d/dt of the Jacobi function (chain rule through x = -sinh^2 t).
Complex jacobi_phi_derivative(const JacobiParams& p, Complex lambda, double t);

// Legendre function of the first kind P_nu(x), x >= 1, via the
// hypergeometric representation P_nu(x) = 2F1(-nu, nu+1; 1; (1-x)/2).
Complex legendre_p(Complex nu, double x);

// Harish-Chandra c-function of Jacobi analysis at spectral argument mu:
//   c(mu) = 2^{rho0 - i mu} Gamma(alpha+1) Gamma(i mu)
//           / [Gamma((rho0 + i mu)/2) Gamma((alpha - beta + 1 + i mu)/2)].
Complex c_jacobi(const JacobiParams& p, Complex mu);

// The c-function with the NA argument doubling: c_function(p, lambda) =
// c_jacobi(p, 2*lambda), matching Phi_lambda(rho) = phi_{2 lambda}(rho/2).
Complex c_function(const JacobiParams& p, Complex lambda);

}  // namespace specproj::sf
