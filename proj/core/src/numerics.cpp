#include "specproj/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

namespace specproj::num {

namespace {

// Kronrod-15 abscissae/weights and the embedded Gauss-7 weights.
constexpr double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                            0.741531185599394, 0.586087235467691, 0.405845151377397,
                            0.207784955007898, 0.0};
constexpr double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct GkResult {
    Complex value;
    double error;
};

GkResult gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex fc = f(c);
    Complex resk = fc * kWgk[7];
    Complex resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        Complex f1 = f(c - h * kXgk[j]);
        Complex f2 = f(c + h * kXgk[j]);
        resk += (f1 + f2) * kWgk[j];
        if (j % 2 == 1) resg += (f1 + f2) * kWg[j / 2];
    }
    return {resk * h, std::abs(resk - resg) * h};
}

}  // namespace

Complex integrate_radial(const std::function<Complex(double)>& f, double lo, double hi,
                         const QuadratureSpec& spec) {
    spec.validate();
    if (lo > hi) throw DomainError("integrate_radial: lo > hi");
    if (lo == hi) return Complex(0.0, 0.0);

    struct Seg {
        double a, b;
        Complex v;
        double e;
    };
    GkResult whole = gk15(f, lo, hi);
    std::vector<Seg> segs{{lo, hi, whole.value, whole.error}};
    int splits = 0;
    auto total_err = [&] {
        double e = 0.0;
        for (const auto& s : segs) e += s.e;
        return e;
    };
    auto total_val = [&] {
        Complex v(0.0, 0.0);
        for (const auto& s : segs) v += s.v;
        return v;
    };
    while (total_err() > std::max(spec.abs_tol, spec.rel_tol * std::abs(total_val()))) {
        if (++splits > spec.max_subdivisions)
            throw ToleranceNotMet("integrate_radial: subdivision budget exhausted");
        auto worst = std::max_element(segs.begin(), segs.end(),
                                      [](const Seg& s, const Seg& t) { return s.e < t.e; });
        double mid = 0.5 * (worst->a + worst->b);
        GkResult left = gk15(f, worst->a, mid);
        GkResult right = gk15(f, mid, worst->b);
        Seg rseg{mid, worst->b, right.value, right.error};
        *worst = {worst->a, mid, left.value, left.error};
        segs.push_back(rseg);
    }
    // Fixed summation order, independent of the split history.
    std::sort(segs.begin(), segs.end(), [](const Seg& s, const Seg& t) { return s.a < t.a; });
    Complex v(0.0, 0.0);
    for (const auto& s : segs) v += s.v;
    return v;
}

Complex integrate_circle(const std::function<Complex(double)>& f, int n_points) {
    if (n_points < 8) throw DomainError("integrate_circle: need n_points >= 8");
    Complex sum(0.0, 0.0);
    for (int j = 0; j < n_points; ++j) sum += f(2.0 * kPi * j / n_points);
    return sum / static_cast<double>(n_points);
}

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw DomainError("gauss_legendre: order must be >= 1");
    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev-angle initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        rule.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

Complex gauss_fixed(const std::function<Complex(double)>& f, double a, double b, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex sum(0.0, 0.0);
    for (int i = 0; i < n; ++i) sum += rule.w[i] * f(mid + half * rule.x[i]);
    return sum * half;
}

Complex laplacian2_euclidean(const std::function<Complex(double, double)>& f, double x, double y,
                             double h) {
    if (!(h > 0.0)) throw DomainError("laplacian2_euclidean: h must be > 0");
    return (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * f(x, y)) / (h * h);
}

Complex radial_operator_fd(const std::function<Complex(double)>& f, double rho, double h,
                           const std::function<double(double)>& drift) {
    if (!(h > 0.0)) throw DomainError("radial_operator_fd: h must be > 0");
    if (rho - h <= 0.0) throw DomainError("radial_operator_fd: stencil leaves rho > 0");
    Complex fp = f(rho + h), fm = f(rho - h), f0 = f(rho);
    return (fp - 2.0 * f0 + fm) / (h * h) + drift(rho) * (fp - fm) / (2.0 * h);
}

EnvelopeFit fit_envelope(const std::vector<std::pair<Complex, double>>& samples, int model_order,
                         const std::function<double(Complex)>& envelope) {
    EnvelopeFit fit;
    fit.model_order = model_order;
    for (const auto& [lam, mag] : samples) {
        double env = envelope(lam);
        if (!(env > 0.0)) throw DomainError("fit_envelope: envelope must be positive on the grid");
        fit.fitted_constant = std::max(fit.fitted_constant, mag / env);
    }
    for (const auto& [lam, mag] : samples)
        fit.max_violation = std::max(fit.max_violation, mag / envelope(lam) - fit.fitted_constant);
    fit.max_violation = std::max(fit.max_violation, 0.0);
    return fit;
}

EnvelopeFit envelope_fit(const std::vector<std::pair<Complex, double>>& values, int N, double a,
                         double d) {
    return fit_envelope(values, N, [N, a, d](Complex lam) {
        return std::pow(1.0 + std::norm(lam), -N) * std::exp(std::abs(lam.imag()) * (d + a));
    });
}

ComplexGrid::ComplexGrid(std::vector<double> re, std::vector<double> im)
    : re_points(std::move(re)), im_points(std::move(im)) {
    auto check = [](const std::vector<double>& v, const char* axis) {
        if (v.empty()) throw ConfigError(std::string("ComplexGrid: empty ") + axis + " axis");
        for (std::size_t i = 1; i < v.size(); ++i)
            if (!(v[i] > v[i - 1]))
                throw ConfigError(std::string("ComplexGrid: ") + axis + " axis not increasing");
    };
    check(re_points, "re");
    check(im_points, "im");
}

ComplexGrid ComplexGrid::uniform(double re0, double re1, double dre, double im0, double im1,
                                 double dim) {
    std::vector<double> re, im;
    for (double x = re0; x <= re1 + 1e-12; x += dre) re.push_back(x);
    for (double y = im0; y <= im1 + 1e-12; y += dim) im.push_back(y);
    return ComplexGrid(std::move(re), std::move(im));
}

std::vector<Complex> ComplexGrid::points() const {
    std::vector<Complex> pts;
    pts.reserve(re_points.size() * im_points.size());
    for (double y : im_points)
        for (double x : re_points) pts.emplace_back(x, y);
    return pts;
}

std::vector<Complex> ComplexGrid::points_excluding(const std::vector<Complex>& poles,
                                                   double disc_radius) const {
    std::vector<Complex> pts;
    for (Complex p : points()) {
        bool ok = true;
        for (Complex q : poles)
            if (std::abs(p - q) <= disc_radius) {
                ok = false;
                break;
            }
        if (ok) pts.push_back(p);
    }
    return pts;
}

void fft_pow2(std::vector<Complex>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw DomainError("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        Complex wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                Complex u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

std::vector<Complex> circular_correlation(const std::vector<Complex>& f,
                                          const std::vector<Complex>& g) {
    const std::size_t n = f.size();
    if (g.size() != n) throw DimensionMismatch("circular_correlation: size mismatch");
    if (n > 0 && (n & (n - 1)) == 0) {
        std::vector<Complex> F = f, G = g;
        fft_pow2(F, false);
        fft_pow2(G, false);
        std::vector<Complex> H(n);
        for (std::size_t k = 0; k < n; ++k) H[k] = F[k] * G[(n - k) % n];
        fft_pow2(H, true);
        return H;
    }
    std::vector<Complex> h(n, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) h[j] += f[l] * g[(l + n - j) % n];
    return h;
}

std::function<double(double)> pchip(std::vector<double> xs, std::vector<double> ys) {
    const std::size_t n = xs.size();
    if (n != ys.size() || n < 2) throw ConfigError("pchip: need >= 2 matched samples");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xs[i] > xs[i - 1])) throw ConfigError("pchip: abscissae must increase");
    std::vector<double> h(n - 1), delta(n - 1), d(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = xs[i + 1] - xs[i];
        delta[i] = (ys[i + 1] - ys[i]) / h[i];
    }
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            double w1 = 2.0 * h[i] + h[i - 1], w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    return [xs = std::move(xs), ys = std::move(ys), h = std::move(h), d = std::move(d)](double x) {
        if (x <= xs.front()) return ys.front();
        if (x >= xs.back()) return ys.back();
        std::size_t i = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin() - 1;
        double t = (x - xs[i]) / h[i];
        double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
        double h10 = t * (1.0 - t) * (1.0 - t);
        double h01 = t * t * (3.0 - 2.0 * t);
        double h11 = t * t * (t - 1.0);
        return h00 * ys[i] + h10 * h[i] * d[i] + h01 * ys[i + 1] + h11 * h[i] * d[i + 1];
    };
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const int nt = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += nt) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace specproj::num
