#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "specproj/disk.hpp"
#include "specproj/numerics.hpp"
#include "specproj/types.hpp"

namespace specproj::disk {

// SO(2)-finite function f(tanh r e^{i theta}) = sum_n f_n(r) e^{i n theta},
// profiles given in the geodesic radius r, supported on [0, R), centered at
// z0 (off-center functions are understood through the Moebius translation
// taking z0 to 0).
struct SO2FiniteFunction {
    std::map<int, std::function<Complex(double)>> modes;
    double R = 1.0;
    Complex z0 = Complex(0.0, 0.0);

    static SO2FiniteFunction bump_mode(int n, double R);

    Complex eval(double r, double theta) const;
    Complex eval_at(const DiskPoint& z) const;
    // Geodesic-polar coordinates of z relative to the center z0.
    DiskPoint recenter(const DiskPoint& z) const;
    int min_abs_mode() const;
};

// Generalized spherical function Phi_{lambda,k}(tanh r): the k-th circular
// Fourier coefficient of P_lambda(., w), in its 2F1 closed form. Entire in
// lambda (the Gamma ratio is evaluated as a Pochhammer product).
Complex generalized_spherical(Complex lambda, int k, double r);
// Companion circle-integral form for cross-checking.
Complex generalized_spherical_circle(Complex lambda, int k, double r, int n_points = 1024);

// phi_lambda normalized so phi_lambda(0) = (1/2) lambda tanh(pi lambda/2):
// (1/2) lambda tanh(pi lambda/2) P_{-(1+i lambda)/2}(cosh 2r).
Complex spherical_phi_disk(Complex lambda, double r);
// Same normalization through the circle-integral route.
Complex spherical_phi_disk_circle(Complex lambda, double r, int n_points = 1024);

// gamma(lambda, n) of the meromorphic factorization:
//   (1/4pi) lambda sinh(pi lambda/2) Gamma(|n|+(1+i lambda)/2)
//   Gamma(|n|+(1-i lambda)/2) / (|n|!)^2.
Complex gamma_factor(Complex lambda, int n);

// Poles +-i(2k+1), k = |n|..K, of the mode-n projection.
std::vector<Complex> projection_poles(int n, int K);

struct ProjectorOptions {
    int n_theta = 512;    // circle nodes of the double-quadrature path (power of 2)
    int n_radial = 256;   // Gauss order of the radial layer of fhat
    int n_coef = 512;     // Gauss order of the closed-form coefficient integral
};

// Spectral projection engine for one SO(2)-finite function. Pure evaluation;
// the caches are guarded so concurrent readers and a writer are safe, and
// cached values do not depend on insertion order.
class SpectralProjector {
  public:
    explicit SpectralProjector(SO2FiniteFunction f, ProjectorOptions opt = {});

    const SO2FiniteFunction& function() const { return f_; }

    // Fourier-Helgason transform fhat(lambda, w) = int_D P_{-lambda}(z,w) f d mu,
    // by direct polar quadrature.
    Complex fh_forward(Complex lambda, const BoundaryPoint& w) const;

    // (1.8)'':  (1/4pi) lambda tanh(pi lambda/2) int_{S1} fhat P_lambda dsigma,
    // with fhat evaluated on the circle nodes (cached per lambda).
    Complex projection_quadrature(Complex lambda, const DiskPoint& z) const;

    // Closed meromorphic form (7.17) summed over the modes of f.
    Complex projection_closed(Complex lambda, const DiskPoint& z) const;

    // int_0^R f_n(s) phi_lambda^{(|n|,-|n|)}(s) (tanh s)^{|n|} sinh(2s) ds, cached.
    Complex coefficient_integral(int mode, Complex lambda) const;

    struct Residue {
        Complex value{0.0, 0.0};
        bool at_pole = false;
    };
    // Residue at lambda = half * i(2k+1), half = +1 or -1, from the Gamma
    // residue formula; at_pole = false (value 0) when k < min |mode|.
    Residue residue_at_pole(int k, const DiskPoint& z, int half = +1) const;

    // |sum_{k=|n|..K} (Res at +i(2k+1)) + (Res at -i(2k+1))|.
    double residue_sum(const DiskPoint& z, int K) const;

    struct InversionResult {
        Complex value{0.0, 0.0};
        bool truncation_warning = false;
    };
    // f(z) = int_{-L}^{L} P_lambda f(z) dlambda, trapezoid with given step.
    InversionResult invert(const DiskPoint& z, double lambda_max = 40.0, double step = 0.05) const;

    // Theorem 7.1 condition 4 certificate:
    //   |P_lambda f(z)| <= C (1+|lambda|)^{-N} e^{(R + d(z,z0)) |Im lambda|}.
    num::EnvelopeFit pw_envelope(const num::ComplexGrid& grid, int N, const DiskPoint& z,
                                 double pole_disc = 0.2) const;

  private:
    const std::vector<Complex>& fhat_nodes(Complex lambda) const;

    SO2FiniteFunction f_;
    ProjectorOptions opt_;
    mutable std::map<std::tuple<int, double, double>, Complex> coef_cache_;
    mutable std::map<std::pair<double, double>, std::shared_ptr<std::vector<Complex>>> fhat_cache_;
    mutable std::mutex mtx_;
};

// lambda-indexed record of one mode's projection: value map, declared pole
// and zero sets of the gamma(lambda,n) factorization, residues at the upper
// poles up to K.
struct MeromorphicProfile {
    int mode = 0;
    std::function<Complex(Complex)> value;
    std::vector<Complex> poles;
    std::vector<Complex> zeros;  // 0 (double) and +-2il
    std::map<int, Complex> residues;
};
MeromorphicProfile meromorphic_profile(const SpectralProjector& proj, const DiskPoint& z, int K);

// Samples of a disk function on a polar product grid (uniform theta).
struct PolarSamples {
    std::vector<double> radii;                 // increasing, geodesic radius
    int n_theta = 0;                           // uniform angles 2 pi j / n_theta
    std::vector<std::vector<Complex>> values;  // values[i][j] at (radii[i], theta_j)
    double R = 1.0;                            // support radius of the represented function
};

struct DecomposeResult {
    SO2FiniteFunction f;
    bool alias_warning = false;
};
// Discrete theta-Fourier analysis per radius; modes below drop_tol relative
// mass are dropped; profiles are monotone-cubic interpolants of the samples.
DecomposeResult so2_decompose(const PolarSamples& samples, double drop_tol = 1e-12);

// Averaging projector M: the mode-0 restriction.
SO2FiniteFunction radialize(const SO2FiniteFunction& f);

// Hyperbolic L2 norm: sqrt(sum_n pi int_0^R |f_n|^2 sinh(2r) dr).
double l2_norm_disk(const SO2FiniteFunction& f, int n_gauss = 256);

struct EigenExpansion {
    Complex lambda;
    std::map<int, Complex> coeffs;
};
// Coefficients a_k of the eigen-expansion (6.2), read off at the reference
// radius r_star; throws IllConditioned when a radial factor is < 1e-10 and
// DomainError when F fails the eigenequation test.
EigenExpansion eigen_expansion_coeffs(const std::function<Complex(DiskPoint)>& F, Complex lambda,
                                      int cutoff, double r_star, int n_theta = 256);
Complex eigen_expansion_eval(const EigenExpansion& e, const DiskPoint& z);

}  // namespace specproj::disk
