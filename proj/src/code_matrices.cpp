#include "mimocs/code_matrices.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "mimocs/sensing.hpp"

namespace mimocs {

namespace {

// Fixed primitive polynomials (bitmask, bit i = coeff of x^i).
std::uint32_t primitive_poly_for(int t) {
  switch (t) {
    case 3: return 0b1011;                // x^3 + x + 1
    case 4: return 0b10011;               // x^4 + x + 1
    case 5: return 0b100101;              // x^5 + x^2 + 1
    case 6: return 0b1000011;             // x^6 + x + 1
    case 7: return 0b10001001;            // x^7 + x^3 + 1
    case 8: return 0b100011101;           // x^8 + x^4 + x^3 + x^2 + 1
    case 9: return (1u << 9) | (1u << 4) | 1u;
    case 10: return (1u << 10) | (1u << 3) | 1u;
    case 11: return (1u << 11) | (1u << 2) | 1u;
    case 12: return (1u << 12) | (1u << 6) | (1u << 4) | (1u << 1) | 1u;
    case 13: return (1u << 13) | (1u << 4) | (1u << 3) | (1u << 1) | 1u;
    case 14: return (1u << 14) | (1u << 10) | (1u << 6) | (1u << 1) | 1u;
    case 15: return (1u << 15) | (1u << 1) | 1u;
    case 16: return (1u << 16) | (1u << 12) | (1u << 3) | (1u << 1) | 1u;
    default:
      throw Error("UnsupportedDegree", "GF(2^t) supported for 3 <= t <= 16");
  }
}

using Gf2Poly = std::vector<std::uint8_t>;  // coefficients, low degree first

int degree(const Gf2Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i]) return i;
  return -1;
}

Gf2Poly gf2_mul(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
  return out;
}

// Minimal polynomial of alpha^i: product of (x + alpha^c) over the
// cyclotomic coset of i.  Coefficients land in GF(2) by construction.
Gf2Poly minimal_polynomial(const FieldContext& gf, int i, int& coset_rep) {
  const int n = gf.order();
  std::set<int> coset;
  int c = i % n;
  while (coset.insert(c).second) c = (2 * c) % n;
  coset_rep = *coset.begin();

  std::vector<int> poly{1};  // over GF(2^t), low degree first
  for (int e : coset) {
    const int beta = gf.power_of_alpha(e);
    std::vector<int> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] ^= poly[d];            // x * poly
      next[d] ^= gf.mul(beta, poly[d]);  // beta * poly
    }
    poly = std::move(next);
  }
  Gf2Poly out(poly.size());
  for (std::size_t d = 0; d < poly.size(); ++d) {
    if (poly[d] > 1)
      throw Error("InternalError", "minimal polynomial not over GF(2)");
    out[d] = static_cast<std::uint8_t>(poly[d]);
  }
  return out;
}

// Column bitmasks over GF(2), one word-chain per column.
using BitColumn = std::vector<std::uint64_t>;

BitColumn column_bits(const RealMat& h, int j) {
  const int m = static_cast<int>(h.rows());
  BitColumn col((m + 63) / 64, 0);
  for (int i = 0; i < m; ++i)
    if (h(i, j) != 0.0) col[i / 64] |= 1ULL << (i % 64);
  return col;
}

int leading_bit(const BitColumn& v) {
  for (int w = static_cast<int>(v.size()) - 1; w >= 0; --w)
    if (v[w]) return w * 64 + 63 - std::countl_zero(v[w]);
  return -1;
}

bool gf2_subset_independent(std::vector<BitColumn> cols) {
  // Gaussian elimination; dependent iff some column reduces to zero.
  std::map<int, BitColumn> basis;  // leading bit -> pivot vector
  for (auto& v : cols) {
    while (true) {
      const int lead = leading_bit(v);
      if (lead < 0) return false;
      const auto it = basis.find(lead);
      if (it == basis.end()) {
        basis.emplace(lead, v);
        break;
      }
      for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= it->second[w];
    }
  }
  return true;
}

}  // namespace

FieldContext::FieldContext(int t) : t_(t), poly_(primitive_poly_for(t)) {
  const int n = order();
  log_.assign(n + 1, 0);
  antilog_.assign(n, 0);
  std::uint32_t b = 1;
  for (int j = 0; j < n; ++j) {
    antilog_[j] = static_cast<int>(b);
    log_[b] = j;
    b <<= 1;
    if (b & (1u << t_)) b ^= poly_;
  }
  if (b != 1)
    throw Error("InternalError", "primitive polynomial check failed");
}

int FieldContext::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return antilog_[(log_[a] + log_[b]) % order()];
}

FieldContext build_field(int t) { return FieldContext(t); }

bool gf2_independence_order(const RealMat& h, int order, int audit_trials) {
  const int n = static_cast<int>(h.cols());
  if (order <= 0) return true;
  if (order > n) return false;

  std::vector<BitColumn> all(n);
  for (int j = 0; j < n; ++j) all[j] = column_bits(h, j);

  const auto pick = [&](const std::vector<int>& idx) {
    std::vector<BitColumn> cols;
    cols.reserve(idx.size());
    for (int j : idx) cols.push_back(all[j]);
    return gf2_subset_independent(std::move(cols));
  };

  std::uint64_t count = 1;
  bool exhaustive = true;
  for (int i = 1; i <= order; ++i) {
    count = count * static_cast<std::uint64_t>(n - order + i) / i;
    if (count > enumeration_budget()) {
      exhaustive = false;
      break;
    }
  }

  if (exhaustive) {
    std::vector<int> c(order);
    for (int i = 0; i < order; ++i) c[i] = i;
    while (true) {
      if (!pick(c)) return false;
      int i = order - 1;
      while (i >= 0 && c[i] == n - order + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < order; ++j) c[j] = c[j - 1] + 1;
    }
    return true;
  }

  // Random audit for matrices too wide for the exhaustive sweep.
  std::mt19937_64 rng(0xb0c5u);
  std::vector<int> idx(n);
  for (int j = 0; j < n; ++j) idx[j] = j;
  for (int trial = 0; trial < audit_trials; ++trial) {
    std::shuffle(idx.begin(), idx.end(), rng);
    if (!pick({idx.begin(), idx.begin() + order})) return false;
  }
  return true;
}

BchDesign bch_parity_check(int t, int k) {
  const FieldContext gf = build_field(t);
  const int n = gf.order();
  if (k < 1 || k >= (1 << (t - 1)))
    throw Error("InvalidK", "bch_parity_check: need 1 <= k < 2^(t-1)");

  // g(x) = lcm of minimal polynomials of alpha^1, alpha^3, ..., alpha^(2k-1).
  // The factors are irreducible, so the lcm is the product over distinct
  // cyclotomic cosets.
  Gf2Poly g{1};
  std::set<int> seen_cosets;
  for (int i = 1; i <= 2 * k - 1; i += 2) {
    int rep = 0;
    const Gf2Poly mp = minimal_polynomial(gf, i, rep);
    if (seen_cosets.insert(rep).second) g = gf2_mul(g, mp);
  }
  const int m = degree(g);
  if (m > t * k)
    throw Error("InternalError", "deg g(x) exceeds t*k");

  BchDesign d;
  d.t = t;
  d.n = n;
  d.k_correct = k;
  d.d_min_design = 2 * k + 1;
  d.parity_rows = m;
  d.generator = g;

  // H column j = coefficients of x^j mod g(x).
  d.h = RealMat::Zero(m, n);
  Gf2Poly r(m, 0);
  r[0] = 1;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) d.h(i, j) = r[i];
    // r <- (r * x) mod g
    const std::uint8_t top = r[m - 1];
    for (int i = m - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = 0;
    if (top)
      for (int i = 0; i < m; ++i) r[i] ^= g[i];
  }

  if (!gf2_independence_order(d.h, 2 * k))
    throw Error("InternalError",
                "constructed H has a dependent 2k-column subset");
  return d;
}

BchDesign shorten(const BchDesign& design, int n_target) {
  if (n_target >= design.columns())
    throw out_of_range_error("shorten: n_target must be < current length");
  if (n_target < design.parity_rows)
    throw Error("TargetTooSmall", "shorten: n_target below parity_rows");
  BchDesign d = design;
  // Information positions are the high-index columns of the systematic form;
  // drop the highest ones.
  d.h = design.h.leftCols(n_target).eval();
  d.shortened_to = n_target;
  if (!gf2_independence_order(d.h, 2 * d.k_correct))
    throw Error("InternalError", "shortened H lost independence order");
  return d;
}

RealMat sensing_from_codes(const BchDesign& design_t, const BchDesign& design_r) {
  if (design_t.k_correct != design_r.k_correct)
    throw Error("SparsityMismatch",
                "sensing_from_codes: factor designs serve different k");
  return kron_real(design_t.h, design_r.h);
}

}  // namespace mimocs
