#include "mimocs/array_channel.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace mimocs {

void ArrayConfig::validate() const {
  if (n_t < 1 || n_r < 1) throw out_of_range_error("antenna counts must be >= 1");
  if (delta_t <= 0 || delta_r <= 0) throw out_of_range_error("spacings must be > 0");
  if (lambda_c <= 0) throw out_of_range_error("lambda_c must be > 0");
}

bool PathSet::validate(double epsilon) const {
  config.validate();
  const int kk = k();
  if (kk > std::min(config.n_t, config.n_r))
    throw out_of_range_error("k exceeds min(n_t, n_r)");
  for (const auto& p : paths) {
    if (!std::isfinite(p.alpha.real()) || !std::isfinite(p.alpha.imag()))
      throw out_of_range_error("path gain must be finite");
    if (p.rho < 0) throw out_of_range_error("path length must be >= 0");
    if (p.grid_t < 0 || p.grid_t >= config.n_t || p.grid_r < 0 || p.grid_r >= config.n_r)
      throw out_of_range_error("grid index outside array");
  }
  if (kk == 0) return true;
  const double thresh = std::pow(static_cast<double>(kk), 1.0 + epsilon);
  return config.n_t >= thresh && config.n_r >= thresh;
}

Vec spatial_signature(int n, double delta, double omega) {
  if (n < 1) throw out_of_range_error("spatial_signature: n must be >= 1");
  Vec e(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int l = 0; l < n; ++l) {
    const double phase = -2.0 * std::numbers::pi * l * delta * omega;
    e(l) = scale * cd(std::cos(phase), std::sin(phase));
  }
  return e;
}

Mat dft_basis(int n, double delta) {
  if (n < 1) throw out_of_range_error("dft_basis: n must be >= 1");
  const double L = n * delta;
  Mat u(n, n);
  for (int p = 0; p < n; ++p) u.col(p) = spatial_signature(n, delta, p / L);
  return u;
}

Mat angular_transform(const Mat& q, const ArrayConfig& config) {
  if (q.rows() != config.n_r || q.cols() != config.n_t)
    throw dimension_mismatch("angular_transform: q must be n_r x n_t");
  const Mat u_t = dft_basis(config.n_t, config.delta_t);
  const Mat u_r = dft_basis(config.n_r, config.delta_r);
  return u_r.adjoint() * q * u_t;
}

Mat angular_transform_inverse(const Mat& q_angular, const ArrayConfig& config) {
  if (q_angular.rows() != config.n_r || q_angular.cols() != config.n_t)
    throw dimension_mismatch("angular_transform_inverse: input must be n_r x n_t");
  const Mat u_t = dft_basis(config.n_t, config.delta_t);
  const Mat u_r = dft_basis(config.n_r, config.delta_r);
  return u_r * q_angular * u_t.adjoint();
}

ChannelPair synthesize_channel(const PathSet& path_set, bool strict_grid) {
  path_set.validate();
  const auto& cfg = path_set.config;

  if (strict_grid) {
    std::set<std::pair<int, int>> cells;
    for (const auto& p : path_set.paths) {
      if (p.offset_t != 0.0 || p.offset_r != 0.0)
        throw Error("DuplicateGridPoint",
                    "strict-grid synthesis requires zero off-grid offsets");
      if (!cells.insert({p.grid_r, p.grid_t}).second)
        throw Error("DuplicateGridPoint", "two paths share an angular grid cell");
    }
  }

  ChannelPair out;
  out.q = Mat::Zero(cfg.n_r, cfg.n_t);
  const double gain_scale = std::sqrt(static_cast<double>(cfg.n_t) * cfg.n_r);
  for (const auto& p : path_set.paths) {
    const double phase = -2.0 * std::numbers::pi * p.rho / cfg.lambda_c;
    const cd alpha_b = p.alpha * gain_scale * cd(std::cos(phase), std::sin(phase));
    const Vec e_r = spatial_signature(cfg.n_r, cfg.delta_r, p.omega_r(cfg));
    const Vec e_t = spatial_signature(cfg.n_t, cfg.delta_t, p.omega_t(cfg));
    out.q += (alpha_b / path_set.path_loss_mu) * (e_r * e_t.adjoint());
  }
  out.q_angular = angular_transform(out.q, cfg);
  out.q_angular_vec = vectorize(out.q_angular);
  return out;
}

Vec vectorize(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

Mat unvectorize(const Vec& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols)
    throw dimension_mismatch("unvectorize: size mismatch");
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

}  // namespace mimocs
