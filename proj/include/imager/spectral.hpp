#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "imager/forward.hpp"

namespace imager {

/// Full SVD of an MSR matrix with values sorted descending and a pinned
/// sign/phase convention, so repeated runs produce identical vectors.
struct SpectralDecomposition {
    Eigen::VectorXd singular_values;  // descending
    Eigen::MatrixXcd left_vectors;    // columns U_m
    Eigen::MatrixXcd right_vectors;   // columns V_m; K = U S V^H
    double omega = 0.0;

    int count() const { return static_cast<int>(singular_values.size()); }
};

SpectralDecomposition decompose(const MSRMatrix& msr);

/// Signal-subspace dimension rules.
struct FixedDim { int dim = 1; };                 // clamped to the value count
struct RatioDim { double tau = 0.01; };           // largest m with rho_m/rho_1 >= tau
struct GapDim {};                                 // argmax of rho_m / rho_{m+1}
using DimStrategy = std::variant<FixedDim, RatioDim, GapDim>;

int select_signal_dim(const std::vector<double>& values, const DimStrategy& strategy);
int select_signal_dim(const Eigen::VectorXd& values, const DimStrategy& strategy);

}  // namespace imager
