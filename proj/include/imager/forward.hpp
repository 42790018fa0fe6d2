#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include "imager/geometry.hpp"

namespace imager {

using Complex = std::complex<double>;

/// Equispaced unit directions on the circle, theta_n = (cos, sin)(2 pi n / N).
/// Observation directions are the negatives of the incident ones, so a single
/// set serves both roles.
struct DirectionSet {
    std::vector<Vec2> directions;
    int count() const { return static_cast<int>(directions.size()); }
};

DirectionSet make_directions(int count);

/// Multi-static response matrix at one angular frequency: entry (j, l) is the
/// far-field response at observation j to incident direction l. Noiseless
/// assembly is complex-symmetric.
struct MSRMatrix {
    Eigen::MatrixXcd entries;
    double omega = 0.0;
    DirectionSet directions;
};

/// Additive complex Gaussian noise calibrated to a signal-to-noise ratio in
/// decibels. snr_db = +infinity is the no-noise sentinel.
struct NoiseSpec {
    double snr_db = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
    bool enabled() const { return std::isfinite(snr_db); }
};

/// Exact low-rank factorization K = scale * H * B * H^T of the assembled
/// matrix. H is N x 3M with per-sample column triples (phase, tangent-weighted
/// phase, normal-weighted phase); B is the real block-diagonal coefficient
/// matrix; `scale` carries the scalar prefactor h (1+i) / (4 sqrt(omega pi)).
struct FactorizationParts {
    Eigen::MatrixXcd H;       // N x 3M
    Eigen::MatrixXd B;        // 3M x 3M, block diagonal
    Complex scale{0.0, 0.0};
    std::vector<CurveSample> samples;  // the M representative points, in order

    Eigen::MatrixXcd reconstruct() const;
};

/// Assembles the MSR matrix from the leading-order far-field expansion,
/// summing the contributions of all inclusions. Each inclusion is divided
/// into segments of at most `spacing` arc length with one representative
/// point per segment. An empty inclusion list yields the zero matrix.
MSRMatrix assemble_msr(const std::vector<ThinInclusion>& inclusions,
                       const DirectionSet& directions, double omega, double spacing);

/// Exact factorization of the same sum; reconstruct() matches assemble_msr
/// entrywise to roundoff.
FactorizationParts build_factorization(const std::vector<ThinInclusion>& inclusions,
                                       const DirectionSet& directions, double omega,
                                       double spacing);

/// K + E with i.i.d. circularly-symmetric complex Gaussian entries, per-entry
/// variance (mean |K_jl|^2) * 10^(-snr_db/10). Bit-reproducible for a given
/// seed (own Box-Muller over a fixed-layout mt19937_64 stream).
MSRMatrix add_noise(const MSRMatrix& msr, const NoiseSpec& spec);

}  // namespace imager
