#include "mimocs/sensing.hpp"

#include <random>

namespace mimocs {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

RealMat kron_real(const RealMat& a, const RealMat& b) {
  RealMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat complex_gaussian(Eigen::Index rows, Eigen::Index cols, double sigma,
                     std::uint64_t seed) {
  // mt19937_64 + normal_distribution, drawn in column-major order; a fresh
  // engine per call keeps results independent of call order.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, sigma / std::sqrt(2.0));
  Mat out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      out(r, c) = cd(re, im);
    }
  return out;
}

Mat measure(const Mat& q, const SensingDesign& design, const NoiseSpec& noise) {
  noise.validate();
  if (design.w.rows() != q.rows() || design.f.rows() != q.cols())
    throw dimension_mismatch("measure: W/F do not conform with Q");
  Mat y = design.w.adjoint() * q * design.f;
  if (noise.sigma > 0)
    y += complex_gaussian(y.rows(), y.cols(), noise.sigma, noise.seed);
  return y;
}

VectorizedSystem vectorize_system(const ChannelPair& q_pair,
                                  const SensingDesign& design,
                                  const ArrayConfig& config,
                                  const NoiseSpec& noise) {
  noise.validate();
  if (q_pair.q.rows() != config.n_r || q_pair.q.cols() != config.n_t)
    throw dimension_mismatch("vectorize_system: Q must be n_r x n_t");
  if (design.w.rows() != config.n_r || design.f.rows() != config.n_t)
    throw dimension_mismatch("vectorize_system: W/F do not conform");

  const Mat u_t = dft_basis(config.n_t, config.delta_t);
  const Mat u_r = dft_basis(config.n_r, config.delta_r);

  VectorizedSystem sys;
  sys.m_t = (design.f.adjoint() * u_t).conjugate();
  sys.m_r = design.w.adjoint() * u_r;
  sys.g_v = kron(sys.m_t, sys.m_r);

  const Mat noiseless = design.w.adjoint() * q_pair.q * design.f;
  Mat n = Mat::Zero(noiseless.rows(), noiseless.cols());
  if (noise.sigma > 0)
    n = complex_gaussian(noiseless.rows(), noiseless.cols(), noise.sigma, noise.seed);
  sys.n_v = vectorize(n);
  sys.y_v = vectorize(noiseless) + sys.n_v;

  const Vec lhs = vectorize(noiseless);
  const Vec rhs = sys.g_v * q_pair.q_angular_vec;
  if ((lhs - rhs).cwiseAbs().maxCoeff() > kIdentityTol)
    throw Error("ConsistencyCheckFailed",
                "vec(W^H Q F) != G_v q^a_v beyond tolerance");
  return sys;
}

SensingDesign gaussian_design(int n_t, int n_r, int m_t, int m_r,
                              std::uint64_t seed) {
  if (n_t < 1 || n_r < 1 || m_t < 1 || m_r < 1)
    throw out_of_range_error("gaussian_design: dims must be positive");
  SensingDesign d;
  // Distinct sub-seeds for F and W so the banks are independent.
  d.f = complex_gaussian(n_t, m_t, 1.0 / std::sqrt(static_cast<double>(m_t)),
                         seed * 2 + 1);
  d.w = complex_gaussian(n_r, m_r, 1.0 / std::sqrt(static_cast<double>(m_r)),
                         seed * 2 + 2);
  return d;
}

}  // namespace mimocs
