#pragma once

#include <functional>
#include <utility>

#include "specproj/numerics.hpp"
#include "specproj/types.hpp"

namespace specproj::disk {

// Point of the open unit disk, kept in both Cartesian and geodesic-polar
// form: z = tanh(r) e^{i theta}, d(0,z) = r.
struct DiskPoint {
    Complex z;
    double r;
    double theta;

    static DiskPoint from_cartesian(Complex z);
    static DiskPoint from_polar(double r, double theta);
};

// Boundary point stored as its angle so |w| = 1 holds exactly.
struct BoundaryPoint {
    double phi = 0.0;
    Complex w() const { return Complex(std::cos(phi), std::sin(phi)); }
};

std::pair<double, double> to_polar(Complex z);
Complex to_cartesian(double r, double theta);

// Hyperbolic distance normalized so d(0, tanh(r) e^{i theta}) = r.
double distance(const DiskPoint& a, const DiskPoint& b);

// <z,w> with e^{<z,w>} = ((1-|z|^2)/|1 - z conj(w)|^2)^{1/2}.
double horocycle_bracket(const DiskPoint& z, const BoundaryPoint& w);

// Complex power of the Poisson kernel, P_lambda(z,w) = e^{(i lambda + 1)<z,w>}.
Complex poisson_power(const DiskPoint& z, const BoundaryPoint& w, Complex lambda);

double measure_weight_cartesian(Complex z);  // (1-|z|^2)^{-2}, per Lebesgue dz
double measure_weight_polar(double r);       // (1/2) sinh(2r), per dr dtheta

enum class LaplacianForm { automatic, cartesian, polar };

// Finite-difference Delta_D. The Cartesian form is (1-|z|^2)^2 Delta_R2;
// the polar form is d2/dr2 + 2 coth(2r) d/dr + 4 sinh^{-2}(2r) d2/dtheta2.
// 'automatic' switches to Cartesian below r = 0.05 where coth(2r) blows up.
Complex laplacian_apply(const std::function<Complex(Complex)>& field, const DiskPoint& at,
                        double h, LaplacianForm form = LaplacianForm::automatic);

}  // namespace specproj::disk
