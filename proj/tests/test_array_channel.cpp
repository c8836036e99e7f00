#include <numbers>

#include "doctest.h"
#include "mimocs/array_channel.hpp"
#include "mimocs/sensing.hpp"

using namespace mimocs;

TEST_CASE("spatial signature at zero angle is all-ones over sqrt(n)") {
  const Vec e = spatial_signature(4, 0.5, 0.0);
  for (int l = 0; l < 4; ++l) {
    CHECK(e(l).real() == doctest::Approx(0.5));
    CHECK(e(l).imag() == doctest::Approx(0.0));
  }
}

TEST_CASE("spatial signature half-turn phase") {
  // n=2, delta=0.5, omega = 1/L with L = 1
  const Vec e = spatial_signature(2, 0.5, 1.0);
  CHECK(e(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(e(1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(std::abs(e(1).imag()) < 1e-12);
}

TEST_CASE("spatial signature always unit norm") {
  for (double omega : {0.0, 0.13, -0.7, 2.31, 11.0})
    CHECK(spatial_signature(8, 0.5, omega).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dft basis is unitary for n in 1..64") {
  for (int n = 1; n <= 64; ++n) {
    const Mat u = dft_basis(n, 0.5);
    const Mat residual = u.adjoint() * u - Mat::Identity(n, n);
    CHECK(max_abs(residual) < 1e-10);
  }
}

TEST_CASE("dft basis stays unitary when spacing changes") {
  // delta cancels in delta * (p / L) = p / n
  const Mat u = dft_basis(8, 0.25);
  CHECK(max_abs(u.adjoint() * u - Mat::Identity(8, 8)) < 1e-10);
}

TEST_CASE("dft basis n=1") {
  const Mat u = dft_basis(1, 0.5);
  CHECK(u(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("zero-path synthesis gives zero channel") {
  PathSet ps;
  ps.config = {4, 4, 0.5, 0.5, 0.01};
  const auto pair = synthesize_channel(ps);
  CHECK(max_abs(pair.q) == 0.0);
  CHECK(max_abs(pair.q_angular) == 0.0);
}

TEST_CASE("single on-grid path lands on one angular cell") {
  PathSet ps;
  ps.config = {4, 4, 0.5, 0.5, 0.01};
  ps.paths.push_back({cd(1.0, 0.0), 3, 2, 0.0, 0.0, 0.0});
  const auto pair = synthesize_channel(ps);
  // alpha_b = sqrt(16) = 4 at row 2, col 3
  CHECK(pair.q_angular(2, 3).real() == doctest::Approx(4.0).epsilon(1e-10));
  int nonzeros = 0;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j)
      if (std::abs(pair.q_angular(i, j)) > 1e-10) ++nonzeros;
  CHECK(nonzeros == 1);
}

TEST_CASE("baseband gain includes the path-length phase") {
  PathSet ps;
  ps.config = {2, 2, 0.5, 0.5, 0.02};
  ps.path_loss_mu = 3.0;
  ps.paths.push_back({cd(0.5, -0.25), 1, 0, 0.0, 0.0, 0.013});
  const auto pair = synthesize_channel(ps);
  const double phase = -2.0 * std::numbers::pi * 0.013 / 0.02;
  const cd alpha_b = cd(0.5, -0.25) * 2.0 * cd(std::cos(phase), std::sin(phase));
  CHECK(std::abs(pair.q_angular(0, 1) - alpha_b / 3.0) < 1e-10);
}

TEST_CASE("k on-grid paths give exactly k angular nonzeros") {
  PathSet ps;
  ps.config = {8, 8, 0.5, 0.5, 0.01};
  ps.paths.push_back({cd(1.0, 0.3), 1, 5, 0.0, 0.0, 0.004});
  ps.paths.push_back({cd(-0.2, 0.9), 6, 2, 0.0, 0.0, 0.011});
  ps.paths.push_back({cd(0.4, -1.1), 3, 3, 0.0, 0.0, 0.0});
  const auto pair = synthesize_channel(ps);
  int nonzeros = 0;
  for (Eigen::Index i = 0; i < 8; ++i)
    for (Eigen::Index j = 0; j < 8; ++j)
      if (std::abs(pair.q_angular(i, j)) > 1e-8) ++nonzeros;
  CHECK(nonzeros == 3);
  // unitary change of basis preserves energy
  CHECK(pair.q.norm() == doctest::Approx(pair.q_angular.norm()).epsilon(1e-10));
}

TEST_CASE("colliding grid cells are rejected in strict mode") {
  PathSet ps;
  ps.config = {4, 4, 0.5, 0.5, 0.01};
  ps.paths.push_back({cd(1.0, 0.0), 1, 1, 0.0, 0.0, 0.0});
  ps.paths.push_back({cd(2.0, 0.0), 1, 1, 0.0, 0.0, 0.0});
  CHECK_THROWS_WITH_AS(synthesize_channel(ps), doctest::Contains("grid cell"), Error);
}

TEST_CASE("off-grid paths allowed outside strict mode") {
  PathSet ps;
  ps.config = {4, 4, 0.5, 0.5, 0.01};
  ps.paths.push_back({cd(1.0, 0.0), 1, 1, 0.2, 0.0, 0.0});
  CHECK_THROWS_AS(synthesize_channel(ps, true), Error);
  const auto pair = synthesize_channel(ps, false);
  CHECK(pair.q.norm() > 0.0);
}

TEST_CASE("angular transform round trip") {
  ArrayConfig cfg{4, 4, 0.5, 0.5, 0.01};
  const Mat q = complex_gaussian(4, 4, 1.0, 77);
  const Mat back = angular_transform_inverse(angular_transform(q, cfg), cfg);
  CHECK(max_abs(back - q) < 1e-10);
}

TEST_CASE("angular transform maps rotated basis matrix to standard basis") {
  ArrayConfig cfg{3, 4, 0.5, 0.5, 0.01};
  Mat e = Mat::Zero(4, 3);
  e(2, 1) = cd(1.0, 0.0);
  const Mat u_t = dft_basis(3, 0.5);
  const Mat u_r = dft_basis(4, 0.5);
  const Mat q = u_r * e * u_t.adjoint();
  CHECK(max_abs(angular_transform(q, cfg) - e) < 1e-10);
}

TEST_CASE("angular transform rejects wrong shape") {
  ArrayConfig cfg{4, 4, 0.5, 0.5, 0.01};
  CHECK_THROWS_AS(angular_transform(Mat::Zero(3, 4), cfg), Error);
}

TEST_CASE("path set validation reports the sparsity regime") {
  PathSet ps;
  ps.config = {16, 16, 0.5, 0.5, 0.01};
  ps.paths.push_back({cd(1.0, 0.0), 0, 0, 0.0, 0.0, 0.0});
  ps.paths.push_back({cd(1.0, 0.0), 1, 1, 0.0, 0.0, 0.0});
  CHECK(ps.validate(0.5));        // 16 >= 2^1.5
  CHECK_FALSE(ps.validate(10.0)); // 16 < 2^11, reported not enforced
}

TEST_CASE("vectorize is column stacking") {
  Mat m(2, 2);
  m << cd(1, 0), cd(3, 0), cd(2, 0), cd(4, 0);
  const Vec v = vectorize(m);
  CHECK(v(0).real() == 1.0);
  CHECK(v(1).real() == 2.0);
  CHECK(v(2).real() == 3.0);
  CHECK(v(3).real() == 4.0);
  CHECK(max_abs(unvectorize(v, 2, 2) - m) == 0.0);
}
