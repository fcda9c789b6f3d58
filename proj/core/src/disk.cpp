#include "specproj/disk.hpp"

#include <cmath>

namespace specproj::disk {

DiskPoint DiskPoint::from_cartesian(Complex z) {
    auto [r, theta] = to_polar(z);
    return DiskPoint{z, r, theta};
}

DiskPoint DiskPoint::from_polar(double r, double theta) {
    if (r < 0.0) throw DomainError("DiskPoint: r must be >= 0");
    return DiskPoint{to_cartesian(r, theta), r, theta};
}

std::pair<double, double> to_polar(Complex z) {
    double az = std::abs(z);
    if (az >= 1.0) throw DomainError("to_polar: |z| must be < 1");
    double theta = (az == 0.0) ? 0.0 : std::arg(z);
    if (theta < 0.0) theta += 2.0 * kPi;
    return {std::atanh(az), theta};
}

Complex to_cartesian(double r, double theta) {
    if (r < 0.0) throw DomainError("to_cartesian: r must be >= 0");
    return std::tanh(r) * Complex(std::cos(theta), std::sin(theta));
}

double distance(const DiskPoint& a, const DiskPoint& b) {
    double m = std::abs((a.z - b.z) / (1.0 - std::conj(b.z) * a.z));
    if (m >= 1.0) throw DomainError("distance: boundary input");
    return std::atanh(m);
}

double horocycle_bracket(const DiskPoint& z, const BoundaryPoint& w) {
    double num = 1.0 - std::norm(z.z);
    double den = std::norm(1.0 - z.z * std::conj(w.w()));
    return 0.5 * std::log(num / den);
}

Complex poisson_power(const DiskPoint& z, const BoundaryPoint& w, Complex lambda) {
    return std::exp((Complex(0.0, 1.0) * lambda + 1.0) * horocycle_bracket(z, w));
}

double measure_weight_cartesian(Complex z) {
    double t = 1.0 - std::norm(z);
    if (t <= 0.0) throw DomainError("measure_weight_cartesian: |z| must be < 1");
    return 1.0 / (t * t);
}

double measure_weight_polar(double r) {
    if (r < 0.0) throw DomainError("measure_weight_polar: r must be >= 0");
    return 0.5 * std::sinh(2.0 * r);
}

Complex laplacian_apply(const std::function<Complex(Complex)>& field, const DiskPoint& at,
                        double h, LaplacianForm form) {
    if (!(h > 0.0)) throw DomainError("laplacian_apply: h must be > 0");
    if (form == LaplacianForm::automatic)
        form = (at.r < 0.05) ? LaplacianForm::cartesian : LaplacianForm::polar;
    if (form == LaplacianForm::cartesian) {
        double x = at.z.real(), y = at.z.imag();
        if (std::hypot(std::abs(x) + h, std::abs(y) + h) >= 1.0)
            throw DomainError("laplacian_apply: stencil leaves the disk");
        Complex lap = num::laplacian2_euclidean(
            [&field](double xx, double yy) { return field(Complex(xx, yy)); }, x, y, h);
        double c = 1.0 - std::norm(at.z);
        return c * c * lap;
    }
    // polar form
    if (at.r - h <= 0.0) throw DomainError("laplacian_apply: polar stencil crosses r = 0");
    auto F = [&field](double r, double th) { return field(to_cartesian(r, th)); };
    double r = at.r, th = at.theta;
    Complex frr = (F(r + h, th) - 2.0 * F(r, th) + F(r - h, th)) / (h * h);
    Complex fr = (F(r + h, th) - F(r - h, th)) / (2.0 * h);
    Complex ftt = (F(r, th + h) - 2.0 * F(r, th) + F(r, th - h)) / (h * h);
    double s = std::sinh(2.0 * r);
    return frr + 2.0 / std::tanh(2.0 * r) * fr + 4.0 / (s * s) * ftt;
}

}  // namespace specproj::disk
