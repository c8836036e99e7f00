#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mimocs {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealMat = Eigen::MatrixXd;

// Max-abs tolerance for identity checks (unitarity, round trips, vectorization).
inline constexpr double kIdentityTol = 1e-10;
// Relative rank threshold: sigma_min <= tol * sigma_max means dependent.
inline constexpr double kRankTol = 1e-9;
// Nonzero-detection threshold for sparse angular channels.
inline constexpr double kSparsityTol = 1e-8;

// Domain errors carry a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Error dimension_mismatch(const std::string& msg) {
  return Error("DimensionMismatch", msg);
}
inline Error out_of_range_error(const std::string& msg) {
  return Error("OutOfRange", msg);
}
inline Error exhaustive_limit_exceeded(const std::string& msg) {
  return Error("ExhaustiveLimitExceeded", msg);
}

// Enumeration budget for exhaustive spark/RIP/l0 searches.  Overridable via
// the MIMO_CS_BUDGET environment variable.
inline std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("MIMO_CS_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1'000'000;
}

inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace mimocs
