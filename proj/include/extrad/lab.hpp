#ifndef EXTRAD_LAB_HPP
#define EXTRAD_LAB_HPP

#include <string>
#include <vector>

#include "extrad/families.hpp"
#include "extrad/report.hpp"

namespace extrad {

struct ExperimentConfig {
    SurfaceFamilySpec family;
    std::string sweep_param;          // optional; may also come from the CLI
    std::vector<double> sweep_values;
    int resolution = 64;
    double p = 1.0;
    bool normalize = false;
    std::string out_format = "csv"; // csv | json
    std::string out_path;           // empty: stdout
};

// Strict single-document JSON config: unknown keys are rejected.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Set the named sweep parameter on a family spec
// (amplitude | base_radius | offset | axis, the last ellipsoid semi-axis).
void apply_sweep_value(SurfaceFamilySpec& spec, const std::string& name, double value);

// Full diagnostic pipeline for one surface: sample, enclosing ball, pinching
// report, projection distortion.  Throws nothing: failures land in `status`.
PinchReport make_report(const ExperimentConfig& cfg, const SurfaceFamilySpec& spec,
                        double param_value);

std::vector<PinchReport> run_verify(const ExperimentConfig& cfg);
std::vector<PinchReport> run_sweep(const ExperimentConfig& cfg);

// Default row parameter for verify runs (the family's own dial).
double family_param(const SurfaceFamilySpec& spec);

} // namespace extrad

#endif
