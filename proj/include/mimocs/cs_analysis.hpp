#pragma once

// Exhaustive, oracle-grade spark and k-RIP computation plus numerical checks
// of the Kronecker-product structure results.
//
// The support/subset enumerations are embarrassingly parallel; the default
// entry points run OpenMP kernels with deterministic max/min reductions
// (ties broken by lexicographically smallest support).  *_serial variants
// keep the straightforward single-threaded reference used by the tests and
// the benchmark.

#include <cstdint>
#include <vector>

#include "mimocs/common.hpp"

namespace mimocs {

struct SparkReport {
  int spark = 0;              // n+1 when no dependent subset exists (full spark)
  bool full_spark = false;
  std::vector<int> witness;   // a minimal dependent column set (empty if full)
  double tolerance = kRankTol;
};

struct RipReport {
  int order_k = 0;
  double delta = 0.0;      // after symmetric rescaling: (lmax-lmin)/(lmax+lmin)
  double delta_raw = 0.0;  // as-given reading: max(lmax-1, 1-lmin)
  double scale = 1.0;      // alpha with alpha^2 = 2/(lmax+lmin)
  double lambda_min = 0.0; // global extremal Gramian eigenvalues, |S| <= k
  double lambda_max = 0.0;
  std::vector<int> extremal_support;  // support achieving delta_raw
  std::vector<int> support_min;       // argmin of lambda_min
  std::vector<int> support_max;       // argmax of lambda_max
};

struct KroneckerRipReport {
  RipReport a, b, ab;
  bool holds = false;         // raw reading: delta_ab >= max(delta_a, delta_b) - 1e-9
  bool holds_scaled = false;  // same inequality on the rescaled reading
};

struct KroneckerSymmetryReport {
  double delta_ab = 0.0;  // raw readings; identical spectra make the choice moot
  double delta_ba = 0.0;
  bool equal = false;
};

struct KroneckerSparkReport {
  int spark_a = 0;
  int spark_b = 0;
  bool spark_ab_exceeds_k = false;  // spark(A (x) B) > k, decided by bounded search
  bool premise = false;             // min(spark_a, spark_b) > k
  bool holds = false;               // premise implies spark_ab_exceeds_k
};

struct RotationInvarianceReport {
  std::vector<double> delta_plain;
  std::vector<double> delta_rotated;
  double mean_plain = 0.0;
  double mean_rotated = 0.0;
  double rank_sum_u = 0.0;  // Mann-Whitney U of plain vs rotated samples
};

// Smallest number of linearly dependent columns (numerical rank with
// sigma_min <= tol * sigma_max).  Search is bounded by size min(m+1, n);
// full spark is reported as n+1.  n above n_limit raises
// ExhaustiveLimitExceeded.
SparkReport spark(const Mat& g, double tol = kRankTol, int n_limit = 18);
SparkReport spark_serial(const Mat& g, double tol = kRankTol, int n_limit = 18);

// Bounded decision version: true iff no dependent subset of size <= k exists,
// i.e. spark(g) > k.  Budgeted on the subset count, not on n.
bool spark_exceeds(const Mat& g, int k, double tol = kRankTol);

// Exhaustive k-RIP constant over all supports of size <= k.
RipReport rip_constant(const Mat& g, int k);
RipReport rip_constant_serial(const Mat& g, int k);

KroneckerRipReport verify_kronecker_rip(const Mat& a, const Mat& b, int k);
KroneckerSymmetryReport verify_kronecker_symmetry(const Mat& a, const Mat& b, int k);
KroneckerSparkReport verify_kronecker_spark(const Mat& a, const Mat& b, int k);

bool verify_unitary(const Mat& u, double tol = kIdentityTol);

// Permutation K with K vec(X) = vec(X^T) for X rows x cols; together with
// its counterpart it realizes B (x) A = P_rho (A (x) B) P_c.
RealMat commutation_matrix(Eigen::Index rows, Eigen::Index cols);

// Samples delta_k of Gaussian G and of G V for random unitary V (QR of a
// Gaussian).  identity_rotation substitutes V = I, which must reproduce the
// plain sample exactly.
RotationInvarianceReport rotation_invariance_experiment(
    int m, int n, int k, int trials, std::uint64_t seed,
    bool identity_rotation = false);

namespace detail {
// All column subsets of {0..n-1} with sizes in [1, max_size], enumerated by
// size then lexicographically.  Throws ExhaustiveLimitExceeded past budget.
std::vector<std::vector<int>> enumerate_subsets(int n, int max_size,
                                                std::uint64_t budget);
}  // namespace detail

}  // namespace mimocs
