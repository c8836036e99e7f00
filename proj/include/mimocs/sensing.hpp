#pragma once

// Precoder/combiner banks, noisy measurement simulation and assembly of the
// vectorized sparse-recovery system y_v = G_v q^a_v + n_v with the
// Kronecker-structured sensing matrix G_v = M_t (x) M_r.

#include <cstdint>

#include "mimocs/array_channel.hpp"
#include "mimocs/common.hpp"

namespace mimocs {

struct SensingDesign {
  Mat f;  // precoder bank, n_t x m_t, columns f_j
  Mat w;  // combiner bank, n_r x m_r, columns w_i
  // pilot symbol zeta fixed to 1

  Eigen::Index m_t() const { return f.cols(); }
  Eigen::Index m_r() const { return w.cols(); }
  Eigen::Index m() const { return m_t() * m_r(); }
};

struct NoiseSpec {
  double sigma = 0.0;      // per-entry circular complex-Gaussian std
  std::uint64_t seed = 0;

  void validate() const {
    if (sigma < 0) throw out_of_range_error("sigma must be >= 0");
  }
};

struct VectorizedSystem {
  Mat m_t;  // (F^H U_t)^*, m_t x n_t
  Mat m_r;  // W^H U_r,     m_r x n_r
  Mat g_v;  // m_t (x) m_r, (m_t m_r) x (n_t n_r)
  Vec y_v;  // measurements
  Vec n_v;  // noise realization (zero when sigma = 0)
};

// Kronecker product: block (i,j) of the result is a(i,j) * b.
Mat kron(const Mat& a, const Mat& b);
RealMat kron_real(const RealMat& a, const RealMat& b);

// i.i.d. CN(0, sigma^2) matrix, deterministic in (seed, shape).
Mat complex_gaussian(Eigen::Index rows, Eigen::Index cols, double sigma,
                     std::uint64_t seed);

// Y = W^H Q F + N (zeta = 1); sigma = 0 gives the exact noiseless Y.
Mat measure(const Mat& q, const SensingDesign& design, const NoiseSpec& noise);

// Builds M_t, M_r, G_v and the vectorized measurements; asserts the
// vectorization identity vec(W^H Q F) = G_v q^a_v to 1e-10
// (ConsistencyCheckFailed on violation: an implementation bug, not bad input).
VectorizedSystem vectorize_system(const ChannelPair& q_pair,
                                  const SensingDesign& design,
                                  const ArrayConfig& config,
                                  const NoiseSpec& noise);

// Random baseline design: F entries CN(0, 1/m_t), W entries CN(0, 1/m_r),
// so G_v columns have near-unit expected norm.
SensingDesign gaussian_design(int n_t, int n_r, int m_t, int m_r,
                              std::uint64_t seed);

}  // namespace mimocs
