#include "imager/imaging.hpp"

#include <cmath>
#include <stdexcept>

namespace imager {

void ImagingGrid::validate() const {
    if (nx < 2 || ny < 2) throw std::invalid_argument("ImagingGrid: need at least 2x2 points");
    if (!(x_max > x_min) || !(y_max > y_min))
        throw std::invalid_argument("ImagingGrid: degenerate range");
}

Vec2 ImageMap::argmax() const {
    Eigen::Index iy = 0, ix = 0;
    values.maxCoeff(&iy, &ix);
    return {grid.x_at(static_cast<int>(ix)), grid.y_at(static_cast<int>(iy))};
}

Eigen::VectorXcd test_vector_geomfree(const Vec2& z, const DirectionSet& directions,
                                      double omega) {
    const int n = directions.count();
    Eigen::VectorXcd v(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i)
        v(i) = scale * std::exp(Complex(0.0, omega * directions.directions[i].dot(z)));
    return v;
}

Eigen::VectorXcd test_vector_weighted(const Vec2& z, const DirectionSet& directions,
                                      double omega,
                                      const std::vector<std::array<double, 3>>& weights) {
    const int n = directions.count();
    if (weights.size() != 1 && static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("test_vector_weighted: need one shared or N weight triples");
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
        const auto& c = weights[weights.size() == 1 ? 0 : i];
        if (c[0] == 0.0 && c[1] == 0.0 && c[2] == 0.0)
            throw std::invalid_argument("test_vector_weighted: zero weight triple");
        const Vec2& th = directions.directions[i];
        const double amp = c[0] + c[1] * th.x + c[2] * th.y;
        v(i) = amp * std::exp(Complex(0.0, omega * th.dot(z)));
    }
    const double norm = v.norm();
    if (!(norm > 0.0))
        throw std::invalid_argument("test_vector_weighted: weights annihilate the test vector");
    return v / norm;
}

FunctionalKind functional_kind_from_string(const std::string& name) {
    if (name == "SM") return FunctionalKind::SM;
    if (name == "SF") return FunctionalKind::SF;
    if (name == "MM") return FunctionalKind::MM;
    if (name == "MF") return FunctionalKind::MF;
    throw std::invalid_argument("unknown functional kind: " + name);
}

std::string to_string(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::SM: return "SM";
        case FunctionalKind::SF: return "SF";
        case FunctionalKind::MM: return "MM";
        case FunctionalKind::MF: return "MF";
    }
    return "?";
}

namespace {

bool is_multi(FunctionalKind kind) {
    return kind == FunctionalKind::MM || kind == FunctionalKind::MF;
}

bool is_geometry_free(FunctionalKind kind) {
    return kind == FunctionalKind::SF || kind == FunctionalKind::MF;
}

}  // namespace

ImageMap evaluate_functional(FunctionalKind kind, const ImagingGrid& grid,
                             const std::vector<SpectralDecomposition>& decompositions,
                             const std::vector<int>& dims, const TestVectorSpec& spec) {
    grid.validate();
    if (decompositions.empty())
        throw std::invalid_argument("evaluate_functional: no decompositions");
    if (dims.size() != decompositions.size())
        throw std::invalid_argument("evaluate_functional: one dimension per decomposition");
    const std::size_t freq_count = decompositions.size();
    if (!is_multi(kind) && freq_count != 1)
        throw std::invalid_argument("evaluate_functional: single-frequency kind takes one matrix");
    if (is_multi(kind) && freq_count < 2)
        throw std::invalid_argument("evaluate_functional: multi-frequency kind needs F >= 2");

    const int n = static_cast<int>(decompositions.front().left_vectors.rows());
    std::vector<Eigen::MatrixXcd> u_sig(freq_count), v_sig(freq_count);
    for (std::size_t f = 0; f < freq_count; ++f) {
        if (dims[f] < 1 || dims[f] > decompositions[f].count())
            throw std::invalid_argument("evaluate_functional: signal dimension out of range");
        u_sig[f] = decompositions[f].left_vectors.leftCols(dims[f]);
        v_sig[f] = decompositions[f].right_vectors.leftCols(dims[f]);
    }

    const DirectionSet dirs = make_directions(n);
    const auto* weighted = std::get_if<WeightedVector>(&spec);
    if (!is_geometry_free(kind) && weighted == nullptr)
        throw std::invalid_argument("evaluate_functional: SM/MM kinds need weighted test vectors");

    ImageMap map;
    map.grid = grid;
    map.label = to_string(kind);
    for (const auto& dec : decompositions) map.frequencies.push_back(dec.omega);
    map.values.resize(grid.ny, grid.nx);

    const double prefactor = is_multi(kind) ? 1.0 / static_cast<double>(freq_count) : 1.0;
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const Vec2 z{grid.x_at(ix), grid.y_at(iy)};
            Complex total(0.0, 0.0);
            for (std::size_t f = 0; f < freq_count; ++f) {
                const double omega = decompositions[f].omega;
                const Eigen::VectorXcd v =
                    is_geometry_free(kind)
                        ? test_vector_geomfree(z, dirs, omega)
                        : test_vector_weighted(z, dirs, omega, weighted->weights);
                const Eigen::RowVectorXcd left = v.adjoint() * u_sig[f];
                const Eigen::RowVectorXcd right = v.transpose() * v_sig[f];
                total += (left.array() * right.array().conjugate()).sum();
            }
            map.values(iy, ix) = prefactor * std::abs(total);
        }
    }
    return map;
}

ImageMap normalize_map(const ImageMap& map) {
    const double peak = map.max_value();
    if (!(peak > 0.0)) throw std::invalid_argument("normalize_map: all-zero map");
    ImageMap out = map;
    out.values /= peak;
    return out;
}

ImageMap apply_filter(const ImageMap& map, double threshold) {
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw std::invalid_argument("apply_filter: threshold must lie in (0, 1)");
    ImageMap out = map;
    out.values = (out.values.array() >= threshold).select(out.values, 0.0);
    return out;
}

ImageMap region_split_filter(const ImageMap& map, const std::vector<Rect>& regions,
                             double threshold) {
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw std::invalid_argument("region_split_filter: threshold must lie in (0, 1)");
    for (std::size_t a = 0; a < regions.size(); ++a)
        for (std::size_t b = a + 1; b < regions.size(); ++b) {
            const Rect& r = regions[a];
            const Rect& s = regions[b];
            const bool x_overlap = std::min(r.x_max, s.x_max) > std::max(r.x_min, s.x_min);
            const bool y_overlap = std::min(r.y_max, s.y_max) > std::max(r.y_min, s.y_min);
            if (x_overlap && y_overlap)
                throw std::invalid_argument("region_split_filter: regions overlap");
        }

    // Assign each grid point to the first region containing it, find the
    // per-region maxima, then renormalize and threshold region by region.
    ImageMap out = map;
    out.values.setZero();
    std::vector<double> region_max(regions.size(), 0.0);
    Eigen::MatrixXi owner = Eigen::MatrixXi::Constant(map.grid.ny, map.grid.nx, -1);
    for (int iy = 0; iy < map.grid.ny; ++iy)
        for (int ix = 0; ix < map.grid.nx; ++ix) {
            const double x = map.grid.x_at(ix);
            const double y = map.grid.y_at(iy);
            for (std::size_t r = 0; r < regions.size(); ++r)
                if (regions[r].contains(x, y)) {
                    owner(iy, ix) = static_cast<int>(r);
                    region_max[r] = std::max(region_max[r], map.values(iy, ix));
                    break;
                }
        }
    for (int iy = 0; iy < map.grid.ny; ++iy)
        for (int ix = 0; ix < map.grid.nx; ++ix) {
            const int r = owner(iy, ix);
            if (r < 0 || region_max[r] <= 0.0) continue;
            const double scaled = map.values(iy, ix) / region_max[r];
            if (scaled >= threshold) out.values(iy, ix) = scaled;
        }
    return out;
}

}  // namespace imager
