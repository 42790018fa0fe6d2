#pragma once

#include <complex>
#include <vector>

#include "imager/forward.hpp"
#include "imager/geometry.hpp"

namespace imager {

/// A single Bessel evaluation, as reported by the verification suite.
struct BesselEval {
    int order = 0;
    double argument = 0.0;
    double value = 0.0;
};

/// J0 or J1 of the first kind, absolute error below 1e-12 over x >= 0.
/// Power series below the seam, Hankel asymptotic expansion above, both
/// accumulated in extended precision. Rejects negative or non-finite x.
double bessel_j(int order, double x);

BesselEval evaluate_bessel(int order, double x);

/// (1/N) sum_n exp(i omega theta_n . x). For equispaced directions this is
/// the trapezoid rule for the circle average and converges spectrally to
/// J0(omega |x|); with omega |x| near or above N the sum aliases visibly.
Complex discrete_sum_scalar(const Vec2& x, const DirectionSet& directions, double omega);

/// (1/N) sum_n (theta_n . xi) exp(i omega theta_n . x); the trapezoid form of
/// i <x/|x|, xi> J1(omega |x|). Returns the analytic limit 0 at x = 0.
Complex discrete_sum_vector(const Vec2& x, const Vec2& xi, const DirectionSet& directions,
                            double omega);

/// omega * (J0(omega |x|)^2 + J1(omega |x|)^2); nonnegative, radial.
double lambda_fn(const Vec2& x, double omega);

/// Choice of disturbing-term coefficient in the closed-form structure maps.
/// DominantNormal keeps the normal-direction projection (the operative form
/// for permeability contrast above the background); LiteralTangentPlusNormal
/// evaluates the printed tangent-plus-normal variant for comparison.
enum class StructureForm { DominantNormal, LiteralTangentPlusNormal };

/// | sum_m { J0(omega r_m)^2 - c_m J1(omega r_m)^2 } | with r_m = |x_m - z|
/// and c_m the squared direction projection per `form` (times 2). At
/// z = x_m the J1 factor vanishes, so the undefined direction is harmless.
double closed_form_single(const Vec2& z, const std::vector<CurveSample>& samples,
                          double omega, StructureForm form = StructureForm::DominantNormal);

/// Band integral int_{omega_lo}^{omega_hi} J1(omega r)^2 d omega by composite
/// Gauss-Legendre panels, refined by doubling until 1e-8 relative change.
double j1_squared_band_integral(double r, double omega_lo, double omega_hi,
                                int quad_points = 64);

/// Multi-frequency structure map:
/// (1/(omega_hi - omega_lo)) | sum_m { Lambda(x_m - z; omega_hi)
///   - Lambda(x_m - z; omega_lo) + (1 - c_m) int J1(omega r_m)^2 d omega } |.
double closed_form_multi(const Vec2& z, const std::vector<CurveSample>& samples,
                         double omega_lo, double omega_hi, int quad_points = 64,
                         StructureForm form = StructureForm::DominantNormal);

}  // namespace imager
