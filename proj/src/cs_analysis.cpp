#include "mimocs/cs_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "mimocs/sensing.hpp"

namespace mimocs {

namespace detail {

namespace {

std::uint64_t binom_capped(int n, int s, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 1; i <= s; ++i) {
    v = v * static_cast<std::uint64_t>(n - s + i) / static_cast<std::uint64_t>(i);
    if (v > cap) return cap + 1;
  }
  return v;
}

void append_subsets_of_size(int n, int s, std::vector<std::vector<int>>& out) {
  std::vector<int> c(s);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = s - 1;
    while (i >= 0 && c[i] == n - s + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_subsets(int n, int max_size,
                                                std::uint64_t budget) {
  max_size = std::min(max_size, n);
  std::uint64_t total = 0;
  for (int s = 1; s <= max_size; ++s) {
    total += binom_capped(n, s, budget);
    if (total > budget)
      throw exhaustive_limit_exceeded("subset enumeration exceeds budget of " +
                                      std::to_string(budget));
  }
  std::vector<std::vector<int>> out;
  out.reserve(total);
  for (int s = 1; s <= max_size; ++s) append_subsets_of_size(n, s, out);
  return out;
}

}  // namespace detail

namespace {

Mat submatrix(const Mat& g, const std::vector<int>& cols) {
  Mat s(g.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) s.col(j) = g.col(cols[j]);
  return s;
}

bool columns_dependent(const Mat& g, const std::vector<int>& cols, double tol) {
  const Mat s = submatrix(g, cols);
  Eigen::JacobiSVD<Mat> svd(s);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (smax == 0.0) return true;
  if (static_cast<std::size_t>(sv.size()) < cols.size()) return true;
  return sv(sv.size() - 1) <= tol * smax;
}

// Eigenvalue range of G_S^H G_S.
std::pair<double, double> gramian_range(const Mat& g, const std::vector<int>& cols) {
  const Mat s = submatrix(g, cols);
  const Mat gram = s.adjoint() * s;
  Eigen::SelfAdjointEigenSolver<Mat> eig(gram, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparkReport spark_impl(const Mat& g, double tol, int n_limit, bool parallel) {
  const int n = static_cast<int>(g.cols());
  const int m = static_cast<int>(g.rows());
  if (n == 0) throw out_of_range_error("spark: empty matrix");
  if (tol <= 0) throw out_of_range_error("spark: tol must be > 0");
  if (n > n_limit)
    throw exhaustive_limit_exceeded("spark: n = " + std::to_string(n) +
                                    " exceeds exhaustive limit " +
                                    std::to_string(n_limit));
  const int max_size = std::min(m + 1, n);
  const auto budget = enumeration_budget();
  for (int s = 1; s <= max_size; ++s) {
    std::vector<std::vector<int>> combos;
    detail::append_subsets_of_size(n, s, combos);
    if (combos.size() > budget)
      throw exhaustive_limit_exceeded("spark: subset count exceeds budget");

    std::vector<int> best;  // lexicographically smallest dependent subset
#pragma omp parallel if (parallel)
    {
      std::vector<int> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(combos.size()); ++i) {
        if (columns_dependent(g, combos[i], tol))
          if (local.empty() || lex_less(combos[i], local)) local = combos[i];
      }
#pragma omp critical
      if (!local.empty() && (best.empty() || lex_less(local, best))) best = local;
    }
    if (!best.empty())
      return SparkReport{s, false, best, tol};
  }
  // Any m+1 columns of an m-row matrix are dependent, so reaching this point
  // means m >= n with all n columns independent.
  return SparkReport{n + 1, true, {}, tol};
}

RipReport rip_impl(const Mat& g, int k, bool parallel) {
  const int n = static_cast<int>(g.cols());
  if (k < 1 || k > n) throw out_of_range_error("rip_constant: need 1 <= k <= n");
  const auto combos = detail::enumerate_subsets(n, k, enumeration_budget());

  constexpr double inf = std::numeric_limits<double>::infinity();
  double lmin = inf, lmax = -inf;
  std::vector<int> smin, smax;

#pragma omp parallel if (parallel)
  {
    double tmin = inf, tmax = -inf;
    std::vector<int> tsmin, tsmax;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(combos.size()); ++i) {
      const auto [lo, hi] = gramian_range(g, combos[i]);
      if (lo < tmin || (lo == tmin && lex_less(combos[i], tsmin))) {
        tmin = lo;
        tsmin = combos[i];
      }
      if (hi > tmax || (hi == tmax && lex_less(combos[i], tsmax))) {
        tmax = hi;
        tsmax = combos[i];
      }
    }
#pragma omp critical
    {
      if (tmin < lmin || (tmin == lmin && !tsmin.empty() &&
                          (smin.empty() || lex_less(tsmin, smin)))) {
        lmin = tmin;
        smin = tsmin;
      }
      if (tmax > lmax || (tmax == lmax && !tsmax.empty() &&
                          (smax.empty() || lex_less(tsmax, smax)))) {
        lmax = tmax;
        smax = tsmax;
      }
    }
  }

  if (!(lmax > 0))
    throw Error("DegenerateMatrix", "rip_constant: zero matrix has no delta");
  lmin = std::max(lmin, 0.0);  // clip eigensolver noise

  RipReport r;
  r.order_k = k;
  r.lambda_min = lmin;
  r.lambda_max = lmax;
  r.scale = std::sqrt(2.0 / (lmax + lmin));
  r.delta = (lmax - lmin) / (lmax + lmin);
  r.delta_raw = std::max(lmax - 1.0, 1.0 - lmin);
  r.support_min = smin;
  r.support_max = smax;
  r.extremal_support = (lmax - 1.0 >= 1.0 - lmin) ? smax : smin;
  return r;
}

}  // namespace

SparkReport spark(const Mat& g, double tol, int n_limit) {
  return spark_impl(g, tol, n_limit, true);
}

SparkReport spark_serial(const Mat& g, double tol, int n_limit) {
  return spark_impl(g, tol, n_limit, false);
}

bool spark_exceeds(const Mat& g, int k, double tol) {
  const int n = static_cast<int>(g.cols());
  const auto combos =
      detail::enumerate_subsets(n, std::min(k, n), enumeration_budget());
  bool dependent_found = false;
#pragma omp parallel for schedule(dynamic, 64) reduction(|| : dependent_found)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(combos.size()); ++i)
    dependent_found = dependent_found || columns_dependent(g, combos[i], tol);
  return !dependent_found;
}

RipReport rip_constant(const Mat& g, int k) { return rip_impl(g, k, true); }

RipReport rip_constant_serial(const Mat& g, int k) { return rip_impl(g, k, false); }

KroneckerRipReport verify_kronecker_rip(const Mat& a, const Mat& b, int k) {
  KroneckerRipReport r;
  r.a = rip_constant(a, k);
  r.b = rip_constant(b, k);
  r.ab = rip_constant(kron(a, b), k);
  const double slack = 1e-9;
  r.holds = r.ab.delta_raw >= std::max(r.a.delta_raw, r.b.delta_raw) - slack;
  r.holds_scaled = r.ab.delta >= std::max(r.a.delta, r.b.delta) - slack;
  return r;
}

KroneckerSymmetryReport verify_kronecker_symmetry(const Mat& a, const Mat& b, int k) {
  KroneckerSymmetryReport r;
  r.delta_ab = rip_constant(kron(a, b), k).delta_raw;
  r.delta_ba = rip_constant(kron(b, a), k).delta_raw;
  r.equal = std::abs(r.delta_ab - r.delta_ba) < 1e-9;
  return r;
}

KroneckerSparkReport verify_kronecker_spark(const Mat& a, const Mat& b, int k) {
  KroneckerSparkReport r;
  // Factor sparks are exhaustive; the product only needs the > k decision.
  r.spark_a = spark(a).spark;
  r.spark_b = spark(b).spark;
  r.spark_ab_exceeds_k = spark_exceeds(kron(a, b), k);
  r.premise = std::min(r.spark_a, r.spark_b) > k;
  r.holds = !r.premise || r.spark_ab_exceeds_k;
  return r;
}

bool verify_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) throw Error("NonSquare", "verify_unitary: not square");
  const Mat residual = u.adjoint() * u - Mat::Identity(u.cols(), u.cols());
  return max_abs(residual) < tol;
}

RealMat commutation_matrix(Eigen::Index rows, Eigen::Index cols) {
  RealMat k = RealMat::Zero(rows * cols, rows * cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      k(j + i * cols, i + j * rows) = 1.0;  // vec(X^T) entry <- vec(X) entry
  return k;
}

RotationInvarianceReport rotation_invariance_experiment(int m, int n, int k,
                                                        int trials,
                                                        std::uint64_t seed,
                                                        bool identity_rotation) {
  if (m < 1 || n < 1 || trials < 1)
    throw out_of_range_error("rotation_invariance_experiment: bad dims");
  RotationInvarianceReport rep;
  for (int t = 0; t < trials; ++t) {
    const Mat g = complex_gaussian(m, n, 1.0 / std::sqrt(static_cast<double>(m)),
                                   seed + 1000003ULL * t);
    Mat v = Mat::Identity(n, n);
    if (!identity_rotation) {
      const Mat z = complex_gaussian(n, n, 1.0, seed + 1000003ULL * t + 1);
      v = Eigen::HouseholderQR<Mat>(z).householderQ();
    }
    rep.delta_plain.push_back(rip_constant(g, k).delta);
    rep.delta_rotated.push_back(rip_constant(g * v, k).delta);
  }
  const auto mean = [](const std::vector<double>& x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  };
  rep.mean_plain = mean(rep.delta_plain);
  rep.mean_rotated = mean(rep.delta_rotated);
  double u = 0.0;  // Mann-Whitney U of plain over rotated
  for (double p : rep.delta_plain)
    for (double q : rep.delta_rotated) u += (p > q) ? 1.0 : (p == q ? 0.5 : 0.0);
  rep.rank_sum_u = u;
  return rep;
}

}  // namespace mimocs
