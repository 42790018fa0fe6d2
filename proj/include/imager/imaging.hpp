#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <variant>
#include <vector>

#include "imager/forward.hpp"
#include "imager/spectral.hpp"

namespace imager {

/// Rectangular search grid, endpoints included on both axes.
struct ImagingGrid {
    double x_min = -1.0, x_max = 1.0;
    double y_min = -1.0, y_max = 1.0;
    int nx = 128, ny = 128;

    double x_at(int ix) const { return x_min + (x_max - x_min) * ix / (nx - 1); }
    double y_at(int iy) const { return y_min + (y_max - y_min) * iy / (ny - 1); }
    void validate() const;
};

/// Real nonnegative functional samples over a grid. values(iy, ix) holds the
/// sample at (x_at(ix), y_at(iy)).
struct ImageMap {
    ImagingGrid grid;
    Eigen::MatrixXd values;  // ny x nx
    std::string label;
    std::vector<double> frequencies;

    double max_value() const { return values.size() ? values.maxCoeff() : 0.0; }
    Vec2 argmax() const;
};

struct GeometryFreeVector {};
/// Per-direction weight triples c_n applied to [1, theta_x, theta_y]; a single
/// triple is shared across all directions.
struct WeightedVector {
    std::vector<std::array<double, 3>> weights{{1.0, 0.0, 1.0}};
};
using TestVectorSpec = std::variant<GeometryFreeVector, WeightedVector>;

/// Pure-phase steering vector (1/sqrt(N)) exp(i omega theta_n . z); unit norm.
Eigen::VectorXcd test_vector_geomfree(const Vec2& z, const DirectionSet& directions,
                                      double omega);

/// Entries (c_n . [1, theta_n]) exp(i omega theta_n . z), normalized to unit
/// norm. Rejects zero weight triples and weights that annihilate the vector.
Eigen::VectorXcd test_vector_weighted(const Vec2& z, const DirectionSet& directions,
                                      double omega,
                                      const std::vector<std::array<double, 3>>& weights);

/// SM/MM use the weighted test vector, SF/MF the geometry-free one;
/// the second letter picks single- versus multi-frequency.
enum class FunctionalKind { SM, SF, MM, MF };

FunctionalKind functional_kind_from_string(const std::string& name);
std::string to_string(FunctionalKind kind);

/// At each grid point z: | sum_f sum_{m < dim_f} <v, U_m> <v, conj(V_m)> |,
/// with <a, b> = conj(a) . b, times 1/F for the multi-frequency kinds.
/// Single kinds take exactly one decomposition, multi kinds at least two.
ImageMap evaluate_functional(FunctionalKind kind, const ImagingGrid& grid,
                             const std::vector<SpectralDecomposition>& decompositions,
                             const std::vector<int>& dims, const TestVectorSpec& spec);

/// Divides by the map's own maximum; rejects all-zero maps.
ImageMap normalize_map(const ImageMap& map);

/// Hard threshold on a normalized map: values below the cut become zero.
ImageMap apply_filter(const ImageMap& map, double threshold);

/// Axis-aligned rectangle, closed bounds.
struct Rect {
    double x_min, x_max, y_min, y_max;
    bool contains(double x, double y) const {
        return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
    }
};

/// Renormalizes each region by its own maximum, thresholds inside it, and
/// zeroes everything outside all regions. Regions must not overlap in area;
/// shared edges are allowed and resolved in listing order.
ImageMap region_split_filter(const ImageMap& map, const std::vector<Rect>& regions,
                             double threshold);

}  // namespace imager
