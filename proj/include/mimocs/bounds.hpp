#pragma once

// Closed-form measurement bounds, the m_underbar arithmetic with exact
// big-integer binomial sums, and the comparison-curve / audit generators.

#include <cstdint>
#include <string>
#include <vector>

#include "mimocs/common.hpp"

namespace mimocs {

// The bound formulas never fix the base of "log"; it is configuration.
enum class LogBase { natural, base2 };

double log_b(double x, LogBase base);
std::string log_base_name(LogBase base);
LogBase log_base_from_name(const std::string& name);

struct BoundInputs {
  int n_t = 1;
  int n_r = 1;
  int k = 1;
  double delta = 0.5;
  double epsilon = 0.1;
  LogBase log_base = LogBase::natural;
};

// c_delta = 0.18 / log(sqrt((1+delta)/(1-delta)) + 1)
double c_delta(double delta, LogBase base = LogBase::natural);

// Single-matrix RIP bound: c_delta * k * log(n/k).
double rip_lower_single(int n, int k, double delta,
                        LogBase base = LogBase::natural);

// c_delta * 2k * log(n_t n_r / 2k) -- valid but ignores the Kronecker
// structure.
double loose_mimo_lower(const BoundInputs& in);

struct TightBound {
  double value = 0.0;           // 4 c_delta^2 k^2 log(n_t/2k) log(n_r/2k)
  double unscaled_shape = 0.0;  // k^2 log(n_t/k) log(n_r/k)
};
TightBound tight_mimo_lower(const BoundInputs& in);

// ceil(log2 sum_{i<=k} C(n_r, i)) * ceil(log2 sum_{i<=k} C(n_t, i)),
// exact via big-integer arithmetic.
std::int64_t m_underbar(int n_t, int n_r, int k);

struct BinomialBoundsReport {
  double lower = 0.0;  // (n/k)^k
  double value = 0.0;  // C(n, k)
  double upper = 0.0;  // (n e / k)^k
  double sum = 0.0;    // sum_{i<=k} C(n, i)
  bool holds = false;  // lower <= value <= upper and value <= sum <= (k+1) value
};
BinomialBoundsReport binomial_bounds_check(int n, int k);

struct AuditRow {
  int n_t = 0;
  int n_r = 0;
  int k = 0;
  std::int64_t m_under = 0;
  std::int64_t m_bch = 0;  // parity_rows(t, k)^2 for the square design
  double ref = 0.0;        // k^2 log(n_t/k) log(n_r/k)
  double ratio_underbar = 0.0;
  double ratio_bch = 0.0;
};
// Square grids n_t = n_r = n with n = 2^t - 1 so a BCH design exists.
std::vector<AuditRow> asymptotic_ratio_audit(const std::vector<int>& n_grid,
                                             int k,
                                             LogBase base = LogBase::natural);

struct Fig1Row {
  double x = 0.0;
  double f_loose = 0.0;  // k log(n_t n_r / k)
  double f_tight = 0.0;  // k^2 log(n_t/k) log(n_r/k)
};
std::vector<Fig1Row> fig1_fixed_k(int k, int n_min, int n_max,
                                  LogBase base = LogBase::natural);
std::vector<Fig1Row> fig1_fixed_n(int n, int k_min, int k_max,
                                  LogBase base = LogBase::natural);

}  // namespace mimocs
