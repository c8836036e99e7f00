#pragma once

// ULA geometry, spatial signatures, DFT sparsifying bases and k-sparse
// channel synthesis in both the antenna and angular domains.

#include <optional>
#include <vector>

#include "mimocs/common.hpp"

namespace mimocs {

struct ArrayConfig {
  int n_t = 1;            // TX antennas
  int n_r = 1;            // RX antennas
  double delta_t = 0.5;   // antenna spacing / lambda_c
  double delta_r = 0.5;
  double lambda_c = 0.01; // carrier wavelength [m]

  double length_t() const { return n_t * delta_t; }  // normalized array lengths
  double length_r() const { return n_r * delta_r; }

  void validate() const;
};

// A propagation path.  Angular cosines are stored as a grid index g plus an
// optional off-grid offset; Omega = (g + offset) / L.  Strict-grid synthesis
// (offset == 0 for every path) gives an exactly k-sparse angular channel.
struct Path {
  cd alpha;              // path gain
  int grid_t = 0;        // TX grid index in {0..n_t-1}
  int grid_r = 0;        // RX grid index in {0..n_r-1}
  double offset_t = 0.0; // off-grid fraction, exits the sparse model if != 0
  double offset_r = 0.0;
  double rho = 0.0;      // path length [m]

  double omega_t(const ArrayConfig& cfg) const {
    return (grid_t + offset_t) / cfg.length_t();
  }
  double omega_r(const ArrayConfig& cfg) const {
    return (grid_r + offset_r) / cfg.length_r();
  }
};

// Convenience: angular cosine from a physical angle in radians.
inline double angular_cosine(double angle_radians) { return std::cos(angle_radians); }

struct PathSet {
  std::vector<Path> paths;
  double path_loss_mu = 1.0;
  ArrayConfig config;

  int k() const { return static_cast<int>(paths.size()); }

  // Throws on invalid fields.  Returns true when the sparsity-regime
  // condition n_t, n_r >= k^(1+epsilon) holds (reported, not enforced).
  bool validate(double epsilon = 0.1) const;
};

struct ChannelPair {
  Mat q;              // dense channel, n_r x n_t
  Mat q_angular;      // angular channel
  Vec q_angular_vec;  // column-major vectorization of q_angular
};

// Unit-norm steering vector: entry l = exp(-j 2 pi l delta omega) / sqrt(n).
Vec spatial_signature(int n, double delta, double omega);

// Columns are spatial_signature(n, delta, p / (n*delta)) for p = 0..n-1;
// the spacing cancels, so this is the unitary DFT matrix for every delta.
Mat dft_basis(int n, double delta);

Mat angular_transform(const Mat& q, const ArrayConfig& config);
Mat angular_transform_inverse(const Mat& q_angular, const ArrayConfig& config);

// Sum of rank-1 path terms with baseband gains
// alpha_b = alpha * sqrt(n_t n_r) * exp(-j 2 pi rho / lambda_c).
// strict_grid rejects off-grid offsets and colliding grid cells
// (DuplicateGridPoint), which would break the k-sparsity contract.
ChannelPair synthesize_channel(const PathSet& path_set, bool strict_grid = true);

Vec vectorize(const Mat& m);  // column stacking
Mat unvectorize(const Vec& v, Eigen::Index rows, Eigen::Index cols);

}  // namespace mimocs
