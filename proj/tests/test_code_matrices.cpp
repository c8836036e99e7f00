#include <random>

#include "doctest.h"
#include "mimocs/code_matrices.hpp"
#include "mimocs/cs_analysis.hpp"
#include "mimocs/sensing.hpp"

using namespace mimocs;

namespace {

// Independent GF(2) rank oracle: plain int elimination, no bit tricks.
int gf2_rank(std::vector<std::vector<int>> rows) {
  const int nr = static_cast<int>(rows.size());
  if (nr == 0) return 0;
  const int nc = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < nc && rank < nr; ++c) {
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (rows[r][c]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < nr; ++r)
      if (r != rank && rows[r][c])
        for (int cc = 0; cc < nc; ++cc) rows[r][cc] ^= rows[rank][cc];
    ++rank;
  }
  return rank;
}

bool oracle_subset_independent(const RealMat& h, const std::vector<int>& cols) {
  std::vector<std::vector<int>> m(h.rows(), std::vector<int>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      m[i][j] = h(i, cols[j]) != 0.0 ? 1 : 0;
  return gf2_rank(m) == static_cast<int>(cols.size());
}

bool oracle_all_subsets_independent(const RealMat& h, int size) {
  const int n = static_cast<int>(h.cols());
  std::vector<int> c(size);
  for (int i = 0; i < size; ++i) c[i] = i;
  while (true) {
    if (!oracle_subset_independent(h, c)) return false;
    int i = size - 1;
    while (i >= 0 && c[i] == n - size + i) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

TEST_CASE("GF(2^3) antilog table from x^3 + x + 1") {
  const auto gf = build_field(3);
  const std::vector<int> expected{1, 2, 4, 3, 6, 7, 5};
  CHECK(gf.antilog_table() == expected);
  CHECK(gf.power_of_alpha(7) == 1);  // alpha^7 = 1
}

TEST_CASE("alpha has full multiplicative order") {
  for (int t : {3, 4, 5, 6, 7, 8}) {
    const auto gf = build_field(t);
    // no smaller positive power of alpha equals 1
    for (int e = 1; e < gf.order(); ++e) CHECK(gf.power_of_alpha(e) != 1);
    CHECK(gf.power_of_alpha(gf.order()) == 1);
  }
}

TEST_CASE("unsupported field degrees are rejected") {
  CHECK_THROWS_AS(build_field(2), Error);
  CHECK_THROWS_AS(build_field(17), Error);
}

TEST_CASE("t=3 k=1 yields the Hamming(7,4) check matrix") {
  const auto d = bch_parity_check(3, 1);
  CHECK(d.n == 7);
  CHECK(d.parity_rows == 3);
  CHECK(d.d_min_design == 3);
  CHECK(d.h.rows() == 3);
  CHECK(d.h.cols() == 7);
  // systematic: first m columns are the identity
  CHECK((d.h.leftCols(3) - RealMat::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  // generator is x^3 + x + 1
  CHECK(d.generator == std::vector<std::uint8_t>{1, 1, 0, 1});
}

TEST_CASE("t=4 k=2 generator is the product of the two minimal polynomials") {
  const auto d = bch_parity_check(4, 2);
  CHECK(d.n == 15);
  CHECK(d.parity_rows == 8);  // meets t*k = 8 with equality
  // oracle: (x^4 + x + 1)(x^4 + x^3 + x^2 + x + 1) computed by hand convolution
  const std::vector<int> m1{1, 1, 0, 0, 1};
  const std::vector<int> m3{1, 1, 1, 1, 1};
  std::vector<std::uint8_t> prod(9, 0);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) prod[i + j] ^= m1[i] & m3[j];
  CHECK(d.generator == prod);
}

TEST_CASE("t=4 k=3 generator degree from three cosets") {
  const auto d = bch_parity_check(4, 3);
  CHECK(d.parity_rows == 10);  // deg lcm(m1, m3, m5) = 4 + 4 + 2
  CHECK(d.parity_rows <= 4 * 3);
  CHECK(d.d_min_design == 7);
}

TEST_CASE("parity rows never exceed t*k") {
  for (int t : {3, 4, 5, 6})
    for (int k = 1; k <= 3; ++k) {
      if (k >= (1 << (t - 1))) continue;
      const auto d = bch_parity_check(t, k);
      CHECK(d.parity_rows <= t * k);
      CHECK(d.n == (1 << t) - 1);
    }
}

TEST_CASE("invalid k is rejected") {
  CHECK_THROWS_AS(bch_parity_check(3, 4), Error);
  CHECK_THROWS_AS(bch_parity_check(3, 0), Error);
}

TEST_CASE("2k-column GF(2) independence against the oracle") {
  const auto hamming = bch_parity_check(3, 1);
  CHECK(oracle_all_subsets_independent(hamming.h, 2));
  CHECK(gf2_independence_order(hamming.h, 2));

  const auto bch15 = bch_parity_check(4, 2);
  CHECK(oracle_all_subsets_independent(bch15.h, 4));
  CHECK(gf2_independence_order(bch15.h, 4));

  // oracle and fast path agree on a matrix that is NOT independent at
  // order 4: the Hamming matrix has dependent triples
  CHECK_FALSE(oracle_all_subsets_independent(hamming.h, 3));
  CHECK_FALSE(gf2_independence_order(hamming.h, 3));
}

TEST_CASE("shortening keeps parity rows and independence") {
  const auto hamming = bch_parity_check(3, 1);
  const auto s5 = shorten(hamming, 5);
  CHECK(s5.parity_rows == 3);
  CHECK(s5.h.cols() == 5);
  CHECK(s5.shortened_to == 5);
  CHECK(oracle_all_subsets_independent(s5.h, 2));

  const auto bch15 = bch_parity_check(4, 2);
  const auto s12 = shorten(bch15, 12);
  CHECK(s12.parity_rows == 8);
  CHECK(s12.h.cols() == 12);
  CHECK(oracle_all_subsets_independent(s12.h, 4));
}

TEST_CASE("shorten rejects bad targets") {
  const auto hamming = bch_parity_check(3, 1);
  CHECK_THROWS_AS(shorten(hamming, 7), Error);   // no-op shortening
  CHECK_THROWS_AS(shorten(hamming, 2), Error);   // below parity_rows
}

TEST_CASE("code-pair sensing matrix") {
  const auto hamming = bch_parity_check(3, 1);
  const RealMat h_v = sensing_from_codes(hamming, hamming);
  CHECK(h_v.rows() == 9);
  CHECK(h_v.cols() == 49);

  // row/column sums multiply across the factors
  CHECK(h_v.row(0).sum() ==
        doctest::Approx(hamming.h.row(0).sum() * hamming.h.row(0).sum()));
  CHECK(h_v.colwise().sum().maxCoeff() ==
        doctest::Approx(std::pow(hamming.h.colwise().sum().maxCoeff(), 2)));

  // spark(H_v) > 2k for the k=1 pair, by the real-valued oracle
  CHECK(spark_exceeds(h_v.cast<cd>(), 2));
}

TEST_CASE("mismatched code sparsity is rejected") {
  const auto a = bch_parity_check(3, 1);
  const auto b = bch_parity_check(4, 2);
  CHECK_THROWS_AS(sensing_from_codes(a, b), Error);
}

TEST_CASE("real-valued spark exceeds 2k on desk-scale designs") {
  const auto hamming = bch_parity_check(3, 1);
  CHECK(spark_exceeds(hamming.h.cast<cd>(), 2));
  const auto bch15 = bch_parity_check(4, 2);
  CHECK(spark_exceeds(bch15.h.cast<cd>(), 4));
}
