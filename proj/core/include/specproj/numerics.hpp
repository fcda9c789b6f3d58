#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "specproj/types.hpp"

namespace specproj::num {

enum class QuadMethod { adaptive_gauss, periodic_trapezoid };

struct QuadratureSpec {
    QuadMethod method = QuadMethod::adaptive_gauss;
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_subdivisions = 4000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw ConfigError("QuadratureSpec: tolerances must be > 0");
        if (max_subdivisions < 1)
            throw ConfigError("QuadratureSpec: max_subdivisions must be >= 1");
    }
};

// Adaptive Gauss-Kronrod (G7,K15) on [lo,hi].
Complex integrate_radial(const std::function<Complex(double)>& f, double lo, double hi,
                         const QuadratureSpec& spec = {});

// Mean over the circle of a smooth 2*pi-periodic integrand, i.e. the
// trapezoid value normalized by 1/(2*pi): total measure 1.
Complex integrate_circle(const std::function<Complex(double)>& f, int n_points);

// Gauss-Legendre rule on [-1,1], cached per order.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_legendre(int n);

// Fixed-order Gauss-Legendre integral on [a,b].
Complex gauss_fixed(const std::function<Complex(double)>& f, double a, double b, int n);

// Five-point second-order stencil for the Euclidean Laplacian in 2-d.
Complex laplacian2_euclidean(const std::function<Complex(double, double)>& f, double x, double y,
                             double h);

// Central-difference f'' + drift(rho) f' for the radial operators.
Complex radial_operator_fd(const std::function<Complex(double)>& f, double rho, double h,
                           const std::function<double(double)>& drift);

struct EnvelopeFit {
    int model_order = 0;       // the N of the envelope
    double fitted_constant = 0.0;  // C = max |value| / envelope
    double max_violation = 0.0;    // max(|value|/envelope - C, 0); 0 by construction
};

// Generic fit: C = max over samples of magnitude / envelope(lambda).
EnvelopeFit fit_envelope(const std::vector<std::pair<Complex, double>>& samples, int model_order,
                         const std::function<double(Complex)>& envelope);

// Paley-Wiener shape (1+|lambda|^2)^{-N} e^{|Im lambda| (d + a)}.
EnvelopeFit envelope_fit(const std::vector<std::pair<Complex, double>>& values, int N, double a,
                         double d);

struct ComplexGrid {
    std::vector<double> re_points;
    std::vector<double> im_points;

    ComplexGrid(std::vector<double> re, std::vector<double> im);
    static ComplexGrid uniform(double re0, double re1, double dre, double im0, double im1,
                               double dim);
    std::vector<Complex> points() const;
    // Grid points at distance > disc_radius from every listed pole.
    std::vector<Complex> points_excluding(const std::vector<Complex>& poles,
                                          double disc_radius) const;
};

// Radix-2 FFT, in place. n must be a power of two.
void fft_pow2(std::vector<Complex>& a, bool inverse);

// h[j] = sum_l f[l] g[(l - j) mod n]; FFT path for power-of-two n.
std::vector<Complex> circular_correlation(const std::vector<Complex>& f,
                                          const std::vector<Complex>& g);

// Deterministic static partition; each index is processed exactly once and
// writes only to its own slot, so results do not depend on thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

// Monotone cubic Hermite (Fritsch-Carlson) interpolant through (xs, ys);
// constant continuation outside [xs.front(), xs.back()].
std::function<double(double)> pchip(std::vector<double> xs, std::vector<double> ys);

}  // namespace specproj::num
