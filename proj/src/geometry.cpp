#include "imager/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "imager/quadrature.hpp"

namespace imager {

double Vec2::norm() const { return std::hypot(x, y); }

Vec2 Vec2::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("Vec2::normalized: zero vector");
    return {x / n, y / n};
}

double Polynomial::operator()(double s) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * s + coeffs_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

ParametricCurve::ParametricCurve(Polynomial x, Polynomial y, double s_min, double s_max)
    : x_(std::move(x)), y_(std::move(y)), dx_(x_.derivative()), dy_(y_.derivative()),
      s_min_(s_min), s_max_(s_max) {
    if (!(s_min < s_max)) throw std::invalid_argument("ParametricCurve: empty parameter range");
    if (x_.degree() < 1 && y_.degree() < 1)
        throw std::invalid_argument("ParametricCurve: needs degree >= 1 in at least one coordinate");
}

double ParametricCurve::arc_length() const {
    return integrate_adaptive([this](double s) { return speed(s); }, s_min_, s_max_, 1e-12);
}

double ParametricCurve::parameter_at_arc_length(double target) const {
    const double total = arc_length();
    if (target <= 0.0) return s_min_;
    if (target >= total) return s_max_;
    auto partial = [this](double s) {
        return integrate_adaptive([this](double t) { return speed(t); }, s_min_, s, 1e-12);
    };
    double lo = s_min_, hi = s_max_;
    // Bisection on the monotone cumulative length.
    while (hi - lo > 1e-10 * std::max(1.0, std::abs(s_max_ - s_min_))) {
        const double mid = 0.5 * (lo + hi);
        if (partial(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double ParametricCurve::distance_to(const Vec2& p) const {
    // Dense scan, then golden-section refinement around the best parameter.
    const int n = 512;
    double best_s = s_min_, best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        const double s = s_min_ + (s_max_ - s_min_) * i / n;
        const double d = (position(s) - p).norm();
        if (d < best_d) {
            best_d = d;
            best_s = s;
        }
    }
    const double step = (s_max_ - s_min_) / n;
    double lo = std::max(s_min_, best_s - step), hi = std::min(s_max_, best_s + step);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
    double fa = (position(a) - p).norm(), fb = (position(b) - p).norm();
    for (int it = 0; it < 80; ++it) {
        if (fa < fb) {
            hi = b; b = a; fb = fa;
            a = hi - phi * (hi - lo);
            fa = (position(a) - p).norm();
        } else {
            lo = a; a = b; fa = fb;
            b = lo + phi * (hi - lo);
            fb = (position(b) - p).norm();
        }
    }
    return std::min({best_d, fa, fb});
}

ThinInclusion make_inclusion(ParametricCurve curve, double half_thickness,
                             double permittivity, double permeability) {
    if (!(half_thickness > 0.0))
        throw std::invalid_argument("make_inclusion: half thickness must be positive");
    if (!(permittivity > 1.0))
        throw std::invalid_argument("make_inclusion: permittivity must exceed the unit background");
    if (!(permeability > 1.0))
        throw std::invalid_argument("make_inclusion: permeability must exceed the unit background");
    return ThinInclusion{std::move(curve), half_thickness, permittivity, permeability};
}

std::vector<CurveSample> sample_curve(const ParametricCurve& curve, double spacing) {
    if (!(spacing > 0.0)) throw std::invalid_argument("sample_curve: spacing must be positive");
    const double total = curve.arc_length();
    const int count = std::max(1, static_cast<int>(std::ceil(total / spacing)));
    std::vector<CurveSample> samples;
    samples.reserve(count);
    for (int m = 0; m < count; ++m) {
        const double target = (m + 0.5) * total / count;
        const double s = curve.parameter_at_arc_length(target);
        const Vec2 v = curve.velocity(s);
        const double sp = v.norm();
        if (!(sp > 1e-14)) {
            std::ostringstream msg;
            msg << "sample_curve: degenerate curve, |r'(s)| = " << sp << " at s = " << s;
            throw std::domain_error(msg.str());
        }
        CurveSample cs;
        cs.point = curve.position(s);
        cs.tangent = v * (1.0 / sp);
        cs.normal = cs.tangent.rot90();
        samples.push_back(cs);
    }
    return samples;
}

std::array<double, 4> polarization_tensor(const CurveSample& sample, double mu_star) {
    if (!(mu_star > 0.0)) throw std::invalid_argument("polarization_tensor: mu must be positive");
    const Vec2& t = sample.tangent;
    const Vec2& n = sample.normal;
    const double lt = 2.0 * (1.0 / mu_star - 1.0);
    const double ln = 2.0 * (1.0 - mu_star);
    return {lt * t.x * t.x + ln * n.x * n.x, lt * t.x * t.y + ln * n.x * n.y,
            lt * t.y * t.x + ln * n.y * n.x, lt * t.y * t.y + ln * n.y * n.y};
}

}  // namespace imager
