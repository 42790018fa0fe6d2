#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imager/forward.hpp"
#include "imager/imaging.hpp"
#include "imager/spectral.hpp"

namespace imager {

/// Raised on schema violations; the message names the offending field path.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InclusionConfig {
    std::vector<double> x_coeffs;
    std::vector<double> y_coeffs;
    double s_min = -0.5;
    double s_max = 0.5;
    double half_thickness = 0.015;
    double permittivity = 5.0;
    double permeability = 5.0;

    ThinInclusion build() const;
};

/// Frequency specification: a single angular frequency, an explicit list, or
/// a wavelength band sampled with F frequencies (equispaced in wavelength by
/// default, or in angular frequency).
struct FrequencyConfig {
    enum class Mode { Single, List, Band };
    Mode mode = Mode::Single;
    double omega = 2.0 * M_PI / 0.4;
    std::vector<double> omegas;                // Mode::List
    double lambda_min = 0.3, lambda_max = 0.6; // Mode::Band
    int band_count = 10;
    std::string band_spacing = "lambda";       // "lambda" | "omega"

    std::vector<double> resolve() const;       // ascending omegas
};

struct FilterConfig {
    enum class Kind { None, Single, Multi, Custom, RegionSplit };
    Kind kind = Kind::None;
    double threshold = 0.678;
    std::vector<Rect> regions;
};

struct OutputConfig {
    std::string dir = "out";
    std::string prefix = "run";
    bool png = true;
};

struct ExperimentConfig {
    std::vector<InclusionConfig> inclusions;
    int directions = 64;
    FrequencyConfig frequency;
    NoiseSpec noise;                         // defaults to 10 dB, seed 0
    ImagingGrid grid;
    FunctionalKind functional = FunctionalKind::SF;
    TestVectorSpec test_vector = GeometryFreeVector{};
    std::optional<DimStrategy> signal_dim;   // default: ratio(0.01) noiseless, gap noisy
    std::optional<double> sample_spacing;    // default: half wavelength per frequency
    bool force_common_sampling = false;      // sample all frequencies at the finest spacing
    FilterConfig filter;
    OutputConfig output;
    std::vector<std::string> msr_inputs;     // externally supplied data (base paths)

    DimStrategy resolved_dim_strategy() const;
    double spacing_for(double omega, double omega_max) const;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Canonical serialization: parse(serialize(cfg)) is field-identical and the
/// string itself is stable (sorted keys, round-trip float formatting).
std::string serialize_config(const ExperimentConfig& cfg);

/// The section-3 style default experiment (one parabolic inclusion).
ExperimentConfig default_config();

}  // namespace imager
