#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace imager {

/// Plane point / vector with the handful of operations the toolkit needs.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double c) const { return {c * x, c * y}; }
    constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const;
    Vec2 normalized() const;
    /// Rotation by +90 degrees: (x, y) -> (-y, x).
    constexpr Vec2 rot90() const { return {-y, x}; }
};

inline constexpr Vec2 operator*(double c, const Vec2& v) { return v * c; }

/// Polynomial in one variable, coefficients in ascending degree order.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

    double operator()(double s) const;
    Polynomial derivative() const;
    int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coeffs_; }

  private:
    std::vector<double> coeffs_;
};

/// Smooth supporting curve given by per-coordinate polynomials over a
/// closed parameter interval. Must be regular: |r'(s)| > 0 wherever sampled.
class ParametricCurve {
  public:
    ParametricCurve(Polynomial x, Polynomial y, double s_min, double s_max);

    Vec2 position(double s) const { return {x_(s), y_(s)}; }
    Vec2 velocity(double s) const { return {dx_(s), dy_(s)}; }
    double speed(double s) const { return velocity(s).norm(); }
    double s_min() const { return s_min_; }
    double s_max() const { return s_max_; }
    const Polynomial& x_poly() const { return x_; }
    const Polynomial& y_poly() const { return y_; }

    /// Total arc length, adaptive Gauss-Legendre to 1e-10 relative.
    double arc_length() const;
    /// Parameter s with arc length from s_min equal to target (bisection, 1e-10).
    double parameter_at_arc_length(double target) const;
    /// Minimum distance from p to the curve (dense sampling plus local refinement).
    double distance_to(const Vec2& p) const;

  private:
    Polynomial x_, y_, dx_, dy_;
    double s_min_, s_max_;
};

/// One representative curve point with its orthonormal frame.
/// The normal is the tangent rotated by +90 degrees; downstream formulas use
/// the normal only through squared inner products, so the sign convention is
/// not observable.
struct CurveSample {
    Vec2 point;
    Vec2 tangent;
    Vec2 normal;
};

/// Thin penetrable inclusion: a tube of half-thickness h around a supporting
/// curve, with constant material contrast against the unit background.
struct ThinInclusion {
    ParametricCurve curve;
    double half_thickness;  // h > 0
    double permittivity;    // eps_star > 1
    double permeability;    // mu_star > 1
};

ThinInclusion make_inclusion(ParametricCurve curve, double half_thickness,
                             double permittivity, double permeability);

/// Splits the curve into M = ceil(L / spacing) equal arc-length segments and
/// returns the sample at each segment's arc-length midpoint. Guarantees the
/// segment length L/M <= spacing.
std::vector<CurveSample> sample_curve(const ParametricCurve& curve, double spacing);

/// Lemma-type polarization tensor: eigenvector t with eigenvalue 2(1/mu - 1),
/// eigenvector n with eigenvalue 2(1 - mu). Returned row-major as
/// {m00, m01, m10, m11}; always symmetric.
std::array<double, 4> polarization_tensor(const CurveSample& sample, double mu_star);

}  // namespace imager
