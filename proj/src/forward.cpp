#include "imager/forward.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <stdexcept>

namespace imager {

DirectionSet make_directions(int count) {
    if (count < 4) throw std::invalid_argument("make_directions: need at least 4 directions");
    DirectionSet set;
    set.directions.reserve(count);
    for (int n = 0; n < count; ++n) {
        const double a = 2.0 * M_PI * n / count;
        set.directions.push_back({std::cos(a), std::sin(a)});
    }
    return set;
}

namespace {

Complex scalar_prefactor(double h, double omega) {
    return h * omega * omega * Complex(1.0, 1.0) / (4.0 * std::sqrt(omega * M_PI));
}

}  // namespace

Eigen::MatrixXcd FactorizationParts::reconstruct() const {
    return scale * (H * B.cast<Complex>() * H.transpose());
}

MSRMatrix assemble_msr(const std::vector<ThinInclusion>& inclusions,
                       const DirectionSet& directions, double omega, double spacing) {
    if (!(omega > 0.0)) throw std::invalid_argument("assemble_msr: omega must be positive");
    if (!(spacing > 0.0) || spacing > M_PI / omega + 1e-12)
        throw std::invalid_argument("assemble_msr: spacing must lie in (0, pi/omega]");
    const int n = directions.count();
    MSRMatrix msr;
    msr.entries = Eigen::MatrixXcd::Zero(n, n);
    msr.omega = omega;
    msr.directions = directions;
    if (inclusions.empty()) {
        std::cerr << "warning: assemble_msr called with no inclusions; returning zero matrix\n";
        return msr;
    }
    for (const ThinInclusion& inc : inclusions) {
        const auto samples = sample_curve(inc.curve, spacing);
        const double length = inc.curve.arc_length();
        const auto m_count = static_cast<double>(samples.size());
        const Complex pref = scalar_prefactor(inc.half_thickness, omega) * (length / m_count);
        const double eps_term = inc.permittivity - 1.0;
        const double tan_coef = 1.0 / inc.permeability - 1.0;
        const double nrm_coef = 1.0 - inc.permeability;
        for (const CurveSample& s : samples) {
            Eigen::VectorXcd phase(n);
            Eigen::VectorXd td(n), nd(n);
            for (int j = 0; j < n; ++j) {
                const Vec2& th = directions.directions[j];
                phase(j) = std::exp(Complex(0.0, omega * th.dot(s.point)));
                td(j) = th.dot(s.tangent);
                nd(j) = th.dot(s.normal);
            }
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    const double coef =
                        eps_term + tan_coef * td(j) * td(l) + nrm_coef * nd(j) * nd(l);
                    msr.entries(j, l) += pref * coef * phase(j) * phase(l);
                }
        }
    }
    return msr;
}

FactorizationParts build_factorization(const std::vector<ThinInclusion>& inclusions,
                                       const DirectionSet& directions, double omega,
                                       double spacing) {
    if (!(omega > 0.0)) throw std::invalid_argument("build_factorization: omega must be positive");
    if (!(spacing > 0.0) || spacing > M_PI / omega + 1e-12)
        throw std::invalid_argument("build_factorization: spacing must lie in (0, pi/omega]");
    if (inclusions.empty())
        throw std::invalid_argument("build_factorization: need at least one inclusion");
    const int n = directions.count();

    // The scalar prefactor depends on h, which may differ per inclusion;
    // factor out the first inclusion's value and fold ratios into B.
    const double h0 = inclusions.front().half_thickness;
    FactorizationParts parts;
    parts.scale = scalar_prefactor(h0, omega);

    std::vector<Eigen::MatrixXcd> h_blocks;
    std::vector<Eigen::Matrix3d> b_blocks;
    for (const ThinInclusion& inc : inclusions) {
        const auto samples = sample_curve(inc.curve, spacing);
        const double length = inc.curve.arc_length();
        const double seg_weight =
            omega * omega * length / static_cast<double>(samples.size());
        const double h_ratio = inc.half_thickness / h0;
        for (const CurveSample& s : samples) {
            Eigen::MatrixXcd hm(n, 3);
            for (int j = 0; j < n; ++j) {
                const Vec2& th = directions.directions[j];
                const Complex ph = std::exp(Complex(0.0, omega * th.dot(s.point)));
                hm(j, 0) = ph;
                hm(j, 1) = th.dot(s.tangent) * ph;
                hm(j, 2) = th.dot(s.normal) * ph;
            }
            // Coefficient block matching the assembled matrix entrywise: the
            // permittivity contrast plus the tangent/normal contrast pair in
            // the sample's frame (half the polarization-tensor eigenvalues).
            Eigen::Matrix3d bm = Eigen::Matrix3d::Zero();
            bm(0, 0) = inc.permittivity - 1.0;
            bm(1, 1) = 1.0 / inc.permeability - 1.0;
            bm(2, 2) = 1.0 - inc.permeability;
            b_blocks.push_back(h_ratio * seg_weight * bm);
            h_blocks.push_back(std::move(hm));
            parts.samples.push_back(s);
        }
    }
    const int cols = 3 * static_cast<int>(h_blocks.size());
    parts.H.resize(n, cols);
    parts.B = Eigen::MatrixXd::Zero(cols, cols);
    for (std::size_t m = 0; m < h_blocks.size(); ++m) {
        parts.H.middleCols(3 * static_cast<int>(m), 3) = h_blocks[m];
        parts.B.block(3 * static_cast<int>(m), 3 * static_cast<int>(m), 3, 3) = b_blocks[m];
    }
    return parts;
}

namespace {

// Fixed-layout normal deviates: two uniforms from mt19937_64 per Box-Muller
// pair, independent of any standard-library distribution implementation.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

  private:
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

MSRMatrix add_noise(const MSRMatrix& msr, const NoiseSpec& spec) {
    if (!spec.enabled()) return msr;
    const double power = msr.entries.squaredNorm() / static_cast<double>(msr.entries.size());
    if (!(power > 0.0))
        throw std::invalid_argument("add_noise: zero matrix, SNR undefined");
    const double entry_var = power * std::pow(10.0, -spec.snr_db / 10.0);
    const double sigma = std::sqrt(entry_var / 2.0);

    GaussianStream gauss(spec.seed);
    MSRMatrix out = msr;
    // Row-major traversal fixes the stream layout regardless of storage order.
    for (Eigen::Index j = 0; j < out.entries.rows(); ++j)
        for (Eigen::Index l = 0; l < out.entries.cols(); ++l) {
            const double re = gauss.next();
            const double im = gauss.next();
            out.entries(j, l) += Complex(sigma * re, sigma * im);
        }
    return out;
}

}  // namespace imager
