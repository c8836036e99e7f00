#include <nlohmann/json.hpp>

#include "doctest.h"
#include "mimocs/matrix_io.hpp"
#include "mimocs/sensing.hpp"

using namespace mimocs;
using nlohmann::json;

TEST_CASE("complex matrices round-trip through JSON") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Mat m = complex_gaussian(3, 4, 1.0, seed);
    const Mat back = matrix_from_json(matrix_to_json(m));
    CHECK(max_abs(back - m) == 0.0);
  }
}

TEST_CASE("real matrices use scalar entries") {
  RealMat m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  const json j = matrix_to_json(m);
  CHECK(j["complex"] == false);
  CHECK(j["data"][0].is_number());
  const Mat back = matrix_from_json(j);
  CHECK(back(1, 0).real() == 3.0);
  CHECK(back(1, 0).imag() == 0.0);
}

TEST_CASE("vectors round-trip") {
  const Vec v = complex_gaussian(5, 1, 1.0, 9).col(0);
  CHECK((vector_from_json(vector_to_json(v)) - v).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bad data length is rejected") {
  json j = {{"rows", 2}, {"cols", 2}, {"complex", false}, {"data", {1.0, 2.0}}};
  CHECK_THROWS_AS(matrix_from_json(j), Error);
}
