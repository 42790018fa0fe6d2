#include "imager/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace imager {

SpectralDecomposition decompose(const MSRMatrix& msr) {
    if (!msr.entries.allFinite())
        throw std::invalid_argument("decompose: matrix has non-finite entries");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(msr.entries,
                                           Eigen::ComputeFullU | Eigen::ComputeFullV);
    SpectralDecomposition dec;
    dec.singular_values = svd.singularValues();
    dec.left_vectors = svd.matrixU();
    dec.right_vectors = svd.matrixV();
    dec.omega = msr.omega;

    // Pin the free joint phase of each (U_m, V_m) pair: rotate so the first
    // non-negligible component of U_m is real positive. Applying the same
    // factor to V_m leaves U S V^H unchanged.
    for (int m = 0; m < dec.count(); ++m) {
        const auto col = dec.left_vectors.col(m);
        const double scale = col.cwiseAbs().maxCoeff();
        if (scale <= 0.0) continue;
        Eigen::Index pivot = 0;
        for (Eigen::Index i = 0; i < col.size(); ++i)
            if (std::abs(col(i)) > 1e-12 * scale) {
                pivot = i;
                break;
            }
        const Complex u = col(pivot);
        const Complex phase = std::conj(u) / std::abs(u);
        dec.left_vectors.col(m) *= phase;
        dec.right_vectors.col(m) *= phase;
    }
    return dec;
}

int select_signal_dim(const std::vector<double>& values, const DimStrategy& strategy) {
    if (values.empty() || !(values.front() > 0.0))
        throw std::invalid_argument("select_signal_dim: need at least one positive value");
    const int count = static_cast<int>(values.size());

    if (const auto* fixed = std::get_if<FixedDim>(&strategy))
        return std::clamp(fixed->dim, 1, count);

    if (const auto* ratio = std::get_if<RatioDim>(&strategy)) {
        int dim = 1;
        for (int m = 1; m < count; ++m)
            if (values[m] / values[0] >= ratio->tau) dim = m + 1;
        return dim;
    }

    // Gap rule: the cut with the largest drop ratio; a drop onto an exact
    // zero counts as infinite and the first such cut wins.
    int best = 1;
    double best_ratio = -1.0;
    for (int m = 0; m + 1 < count; ++m) {
        const double lo = values[m + 1];
        const double ratio = lo > 0.0 ? values[m] / lo
                                      : std::numeric_limits<double>::infinity();
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = m + 1;
        }
    }
    return best;
}

int select_signal_dim(const Eigen::VectorXd& values, const DimStrategy& strategy) {
    return select_signal_dim(
        std::vector<double>(values.data(), values.data() + values.size()), strategy);
}

}  // namespace imager
