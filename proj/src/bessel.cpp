#include "imager/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "imager/quadrature.hpp"

namespace imager {

namespace {

constexpr double kSeriesAsymptoticSeam = 16.0;
constexpr long double kPiLong = 3.141592653589793238462643383279502884L;

// Ascending series, extended-precision accumulation. Comfortably inside the
// 1e-12 budget up to the seam (worst-case rounding ~ eps_ld * I0(seam)).
double j0_series(double x) {
    const long double q = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * k);
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-22) break;
    }
    return static_cast<double>(sum);
}

double j1_series(double x) {
    const long double q = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * (k + 1));
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-22) break;
    }
    return static_cast<double>(0.5L * x * sum);
}

// Hankel expansion J_nu(x) = sqrt(2/(pi x)) (P cos(chi) - Q sin(chi)),
// chi = x - nu pi/2 - pi/4; terms by recurrence, truncated at the smallest.
double j_asymptotic(int nu, double x) {
    const long double lx = x;
    long double p = 0.0L, q = 0.0L;
    long double term = 1.0L;
    const long double mu = 4.0L * nu * nu;
    long double prev_mag = 1e30L;
    for (int m = 0; m < 200; ++m) {
        const long double mag = std::abs(term);
        if (mag > prev_mag) break;  // divergence point of the asymptotic series
        prev_mag = mag;
        const int r = m % 4;
        if (r == 0) p += term;
        else if (r == 1) q += term;
        else if (r == 2) p -= term;
        else q -= term;
        if (mag < 1e-20L) break;
        const long double odd = 2.0L * m + 1.0L;
        term *= (mu - odd * odd) / (8.0L * (m + 1.0L) * lx);
    }
    const long double chi = lx - nu * kPiLong / 2.0L - kPiLong / 4.0L;
    const long double val =
        std::sqrt(2.0L / (kPiLong * lx)) * (p * std::cos(chi) - q * std::sin(chi));
    return static_cast<double>(val);
}

}  // namespace

double bessel_j(int order, double x) {
    if (order != 0 && order != 1)
        throw std::invalid_argument("bessel_j: only orders 0 and 1 are supported");
    if (!(x >= 0.0))
        throw std::invalid_argument("bessel_j: argument must be finite and nonnegative");
    if (x < kSeriesAsymptoticSeam) return order == 0 ? j0_series(x) : j1_series(x);
    return j_asymptotic(order, x);
}

BesselEval evaluate_bessel(int order, double x) { return {order, x, bessel_j(order, x)}; }

Complex discrete_sum_scalar(const Vec2& x, const DirectionSet& directions, double omega) {
    Complex acc(0.0, 0.0);
    for (const Vec2& th : directions.directions) acc += std::exp(Complex(0.0, omega * th.dot(x)));
    return acc / static_cast<double>(directions.count());
}

Complex discrete_sum_vector(const Vec2& x, const Vec2& xi, const DirectionSet& directions,
                            double omega) {
    Complex acc(0.0, 0.0);
    for (const Vec2& th : directions.directions)
        acc += th.dot(xi) * std::exp(Complex(0.0, omega * th.dot(x)));
    return acc / static_cast<double>(directions.count());
}

double lambda_fn(const Vec2& x, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("lambda_fn: omega must be positive");
    const double r = omega * x.norm();
    const double j0 = bessel_j(0, r);
    const double j1 = bessel_j(1, r);
    return omega * (j0 * j0 + j1 * j1);
}

namespace {

// Squared projection coefficient 2 <dir, .>^2 for the chosen form; zero at
// r = 0 where the multiplying J1 factor vanishes anyway.
double disturb_coefficient(const Vec2& diff, double r, const CurveSample& s,
                           StructureForm form) {
    if (r == 0.0) return 0.0;
    const Vec2 dir = diff * (1.0 / r);
    if (form == StructureForm::DominantNormal) {
        const double dn = dir.dot(s.normal);
        return 2.0 * dn * dn;
    }
    const double dtn = dir.dot(s.tangent + s.normal);
    return 2.0 * dtn * dtn;
}

}  // namespace

double closed_form_single(const Vec2& z, const std::vector<CurveSample>& samples,
                          double omega, StructureForm form) {
    if (samples.empty()) throw std::invalid_argument("closed_form_single: no samples");
    double acc = 0.0;
    for (const CurveSample& s : samples) {
        const Vec2 diff = s.point - z;
        const double r = diff.norm();
        const double j0 = bessel_j(0, omega * r);
        const double j1 = bessel_j(1, omega * r);
        acc += j0 * j0 - disturb_coefficient(diff, r, s, form) * j1 * j1;
    }
    return std::abs(acc);
}

double j1_squared_band_integral(double r, double omega_lo, double omega_hi, int quad_points) {
    if (!(omega_hi > omega_lo) || !(omega_lo > 0.0))
        throw std::invalid_argument("j1_squared_band_integral: need 0 < omega_lo < omega_hi");
    if (quad_points < 16)
        throw std::invalid_argument("j1_squared_band_integral: need at least 16 nodes");
    if (r == 0.0) return 0.0;
    auto f = [r](double w) {
        const double j1 = bessel_j(1, w * r);
        return j1 * j1;
    };
    const int order = 16;
    int panels = std::max(1, quad_points / order);
    double prev = integrate_panels(f, omega_lo, omega_hi, order, panels);
    for (int i = 0; i < 12; ++i) {
        panels *= 2;
        const double cur = integrate_panels(f, omega_lo, omega_hi, order, panels);
        if (std::abs(cur - prev) <= 1e-8 * (std::abs(cur) + 1e-300)) return cur;
        prev = cur;
    }
    return prev;
}

double closed_form_multi(const Vec2& z, const std::vector<CurveSample>& samples,
                         double omega_lo, double omega_hi, int quad_points,
                         StructureForm form) {
    if (samples.empty()) throw std::invalid_argument("closed_form_multi: no samples");
    if (!(omega_hi > omega_lo) || !(omega_lo > 0.0))
        throw std::invalid_argument("closed_form_multi: need 0 < omega_lo < omega_hi");
    double acc = 0.0;
    for (const CurveSample& s : samples) {
        const Vec2 diff = s.point - z;
        const double r = diff.norm();
        const double band = j1_squared_band_integral(r, omega_lo, omega_hi, quad_points);
        acc += lambda_fn(diff, omega_hi) - lambda_fn(diff, omega_lo) +
               (1.0 - disturb_coefficient(diff, r, s, form)) * band;
    }
    return std::abs(acc) / (omega_hi - omega_lo);
}

}  // namespace imager
