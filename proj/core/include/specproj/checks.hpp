#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "specproj/types.hpp"

namespace specproj::checks {

// One named quantity with its declared tolerance; pass means value <= tolerance.
struct Metric {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CheckResult {
    std::string name;
    std::vector<Metric> metrics;
    bool pass = true;
    double wall_ms = 0.0;
};

struct CheckOptions {
    int threads = 1;
    double lambda_max = 40.0;
    // metric-name -> tolerance override
    std::map<std::string, double> tol;
};

CheckResult product_formula_check(const CheckOptions& opt);     // Phi_{lambda,k}: circle vs closed
CheckResult projection_cross_check(const CheckOptions& opt);    // closed form vs double quadrature
CheckResult eigen_residual_check(const CheckOptions& opt);      // FD convergence order >= 1.9
CheckResult roundtrip_check(const CheckOptions& opt);           // inversion reproduces the bump
CheckResult residue_sum_identity_check(const CheckOptions& opt);
CheckResult pw_envelope_check(const CheckOptions& opt);         // disk + NA certificates
CheckResult plancherel_identity_check(const CheckOptions& opt); // disk + NA (2,1)
CheckResult l2_bound_check(const CheckOptions& opt);            // Theorem 5.1
CheckResult density_consistency_check(const CheckOptions& opt); // |c00|^{-2} vs lam tanh(pi lam/2)
CheckResult koornwinder_check(const CheckOptions& opt);
CheckResult group_geometry_check(const CheckOptions& opt);

using CheckFn = std::function<CheckResult(const CheckOptions&)>;

// All registered checks in their canonical order.
const std::vector<std::pair<std::string, CheckFn>>& registry();

}  // namespace specproj::checks
