#pragma once

// GF(2^t) arithmetic, BCH generator polynomials and binary parity-check
// matrices packaged as real-valued sensing matrices H_t (x) H_r.

#include <cstdint>
#include <optional>
#include <vector>

#include "mimocs/common.hpp"

namespace mimocs {

// Log/antilog tables over GF(2^t) with a fixed primitive polynomial per t.
class FieldContext {
 public:
  explicit FieldContext(int t);

  int t() const { return t_; }
  int order() const { return (1 << t_) - 1; }  // multiplicative group order
  std::uint32_t primitive_poly() const { return poly_; }

  int mul(int a, int b) const;
  int power_of_alpha(int e) const {  // alpha^e, e may exceed the group order
    return antilog_[((e % order()) + order()) % order()];
  }
  const std::vector<int>& antilog_table() const { return antilog_; }

 private:
  int t_;
  std::uint32_t poly_;
  std::vector<int> log_;
  std::vector<int> antilog_;
};

struct BchDesign {
  int t = 0;
  int n = 0;             // block length before shortening, 2^t - 1
  int k_correct = 0;     // designed error-correction capability
  int d_min_design = 0;  // 2 k_correct + 1
  int parity_rows = 0;   // deg g(x), <= t * k_correct
  std::vector<std::uint8_t> generator;  // g(x) coefficients, low degree first
  RealMat h;             // parity_rows x columns, 0/1 entries over the reals
  std::optional<int> shortened_to;

  int columns() const { return static_cast<int>(h.cols()); }
};

FieldContext build_field(int t);

// g(x) = lcm of the minimal polynomials of alpha, alpha^3, ..., alpha^(2k-1);
// H column j holds the coefficients of x^j mod g(x), so columns 0..m-1 form
// an identity block (systematic form).  Construction verifies GF(2)
// independence of every 2k columns, exhaustively within budget and by a
// random-subset audit beyond.
BchDesign bch_parity_check(int t, int k);

// Removes the highest-index information positions, keeping parity_rows and
// the 2k-column independence order intact.
BchDesign shorten(const BchDesign& design, int n_target);

RealMat sensing_from_codes(const BchDesign& design_t, const BchDesign& design_r);

// True iff every subset of `order` columns of h is GF(2)-independent.
// Exhaustive when the subset count fits the budget, otherwise a seeded
// random audit of `audit_trials` subsets.
bool gf2_independence_order(const RealMat& h, int order,
                            int audit_trials = 5000);

}  // namespace mimocs
