#pragma once

#include <functional>
#include <vector>

namespace imager {

/// Gauss-Legendre nodes and weights on [-1, 1], computed once per order by
/// Newton iteration on the Legendre recurrence and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

/// Fixed-order composite rule: `panels` equal subintervals of [a, b].
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int order, int panels);

/// Panel-doubling refinement until the relative change drops below rel_tol
/// (with a small absolute floor). Starts from `order`-point panels.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int order = 16);

}  // namespace imager
