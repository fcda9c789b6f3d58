#pragma once

#include <string>
#include <vector>

#include "specproj/disk_spectral.hpp"
#include "specproj/na.hpp"

namespace specproj::io {

// Deterministic double formatting used by every CSV/JSON artifact ("%.17g").
std::string format_double(double v);

// RadialProfile CSV: header "rho,value", strictly increasing rho column.
void write_radial_profile_csv(const std::string& path, const na::RadialProfile& f, int n_samples);
na::RadialProfile read_radial_profile_csv(const std::string& path);

// NAParams as {"m":..., "k":...}.
std::string naparams_to_json(const na::NAParams& p);
na::NAParams naparams_from_json(const std::string& text);

// SO2FiniteFunction as {R, z0, modes:[{n, samples:[{r, value}]}]}; profiles
// must be real-valued (the stored sample "value" is a real number).
void write_so2_json(const std::string& path, const disk::SO2FiniteFunction& f, int n_samples);
disk::SO2FiniteFunction read_so2_json(const std::string& path);

// Grid-sweep CSV rows "lambda_re,lambda_im,mode,value_re,value_im" behind a
// "#schema=" header comment.
struct SweepRow {
    Complex lambda;
    int mode = 0;
    Complex value;
};
void write_sweep_csv(const std::string& path, const std::string& schema,
                     const std::vector<SweepRow>& rows);

// Generic two-column metric CSV with a schema header.
void write_metric_csv(const std::string& path, const std::string& schema,
                      const std::vector<std::pair<std::string, double>>& rows);

}  // namespace specproj::io
