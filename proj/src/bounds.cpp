#include "mimocs/bounds.hpp"

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

#include "mimocs/code_matrices.hpp"

namespace mimocs {

using boost::multiprecision::cpp_int;

double log_b(double x, LogBase base) {
  return base == LogBase::natural ? std::log(x) : std::log2(x);
}

std::string log_base_name(LogBase base) {
  return base == LogBase::natural ? "natural" : "base2";
}

LogBase log_base_from_name(const std::string& name) {
  if (name == "natural") return LogBase::natural;
  if (name == "base2") return LogBase::base2;
  throw out_of_range_error("unknown log base: " + name);
}

double c_delta(double delta, LogBase base) {
  if (delta <= 0.0 || delta >= 1.0)
    throw out_of_range_error("c_delta: delta must be in (0,1)");
  return 0.18 / log_b(std::sqrt((1.0 + delta) / (1.0 - delta)) + 1.0, base);
}

double rip_lower_single(int n, int k, double delta, LogBase base) {
  if (k < 1 || k > n) throw out_of_range_error("rip_lower_single: need 1 <= k <= n");
  return c_delta(delta, base) * k *
         log_b(static_cast<double>(n) / static_cast<double>(k), base);
}

double loose_mimo_lower(const BoundInputs& in) {
  const double n = static_cast<double>(in.n_t) * in.n_r;
  if (2.0 * in.k > n) throw out_of_range_error("loose_mimo_lower: 2k > n_t n_r");
  return c_delta(in.delta, in.log_base) * (2.0 * in.k) *
         log_b(n / (2.0 * in.k), in.log_base);
}

TightBound tight_mimo_lower(const BoundInputs& in) {
  if (2 * in.k > std::min(in.n_t, in.n_r))
    throw out_of_range_error("tight_mimo_lower: need 2k <= min(n_t, n_r)");
  const double c = c_delta(in.delta, in.log_base);
  TightBound b;
  b.value = 4.0 * c * c * static_cast<double>(in.k) * in.k *
            log_b(in.n_t / (2.0 * in.k), in.log_base) *
            log_b(in.n_r / (2.0 * in.k), in.log_base);
  b.unscaled_shape = static_cast<double>(in.k) * in.k *
                     log_b(static_cast<double>(in.n_t) / in.k, in.log_base) *
                     log_b(static_cast<double>(in.n_r) / in.k, in.log_base);
  return b;
}

namespace {

cpp_int binomial(int n, int k) {
  cpp_int v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

cpp_int binomial_sum(int n, int k) {
  cpp_int s = 0;
  for (int i = 0; i <= k; ++i) s += binomial(n, i);
  return s;
}

std::int64_t ceil_log2(const cpp_int& x) {
  if (x <= 1) return 0;
  return static_cast<std::int64_t>(boost::multiprecision::msb(x - 1)) + 1;
}

}  // namespace

std::int64_t m_underbar(int n_t, int n_r, int k) {
  if (k < 0 || k > std::min(n_t, n_r))
    throw out_of_range_error("m_underbar: need 0 <= k <= min(n_t, n_r)");
  // The pairing of each sum with a side of the product is immaterial: the
  // product is symmetric, so the t/r assignment does not affect the value.
  return ceil_log2(binomial_sum(n_r, k)) * ceil_log2(binomial_sum(n_t, k));
}

BinomialBoundsReport binomial_bounds_check(int n, int k) {
  if (k < 1 || 2 * k >= n + 1)
    throw out_of_range_error("binomial_bounds_check: need 1 <= k < (n+1)/2");
  BinomialBoundsReport r;
  const double ratio = static_cast<double>(n) / k;
  r.lower = std::pow(ratio, k);
  r.upper = std::pow(ratio * std::numbers::e, k);
  r.value = static_cast<double>(binomial(n, k));
  r.sum = static_cast<double>(binomial_sum(n, k));
  r.holds = r.lower <= r.value && r.value <= r.upper && r.value <= r.sum &&
            r.sum <= (k + 1) * r.value;
  return r;
}

std::vector<AuditRow> asymptotic_ratio_audit(const std::vector<int>& n_grid,
                                             int k, LogBase base) {
  std::vector<AuditRow> rows;
  for (int n : n_grid) {
    int t = 0;
    while ((1 << (t + 1)) - 1 <= n) ++t;
    if ((1 << t) - 1 != n)
      throw out_of_range_error("audit grid values must be 2^t - 1");
    const auto design = bch_parity_check(t, k);

    AuditRow row;
    row.n_t = row.n_r = n;
    row.k = k;
    row.m_under = m_underbar(n, n, k);
    row.m_bch = static_cast<std::int64_t>(design.parity_rows) * design.parity_rows;
    const double lg = log_b(static_cast<double>(n) / k, base);
    row.ref = static_cast<double>(k) * k * lg * lg;
    row.ratio_underbar = row.m_under / row.ref;
    row.ratio_bch = row.m_bch / row.ref;
    rows.push_back(row);
  }
  return rows;
}

std::vector<Fig1Row> fig1_fixed_k(int k, int n_min, int n_max, LogBase base) {
  if (k < 1 || n_min < k || n_max < n_min)
    throw out_of_range_error("fig1_fixed_k: need 1 <= k <= n_min <= n_max");
  std::vector<Fig1Row> rows;
  for (int n = n_min; n <= n_max; ++n) {
    Fig1Row r;
    r.x = n;
    r.f_loose = k * log_b(static_cast<double>(n) * n / k, base);
    const double lg = log_b(static_cast<double>(n) / k, base);
    r.f_tight = static_cast<double>(k) * k * lg * lg;
    rows.push_back(r);
  }
  return rows;
}

std::vector<Fig1Row> fig1_fixed_n(int n, int k_min, int k_max, LogBase base) {
  if (k_min < 1 || k_max < k_min || k_max > n)
    throw out_of_range_error("fig1_fixed_n: need 1 <= k_min <= k_max <= n");
  std::vector<Fig1Row> rows;
  for (int k = k_min; k <= k_max; ++k) {
    Fig1Row r;
    r.x = k;
    r.f_loose = k * log_b(static_cast<double>(n) * n / k, base);
    const double lg = log_b(static_cast<double>(n) / k, base);
    r.f_tight = static_cast<double>(k) * k * lg * lg;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace mimocs
