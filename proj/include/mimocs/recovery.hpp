#pragma once

// Sparse recovery: brute-force l0 search (the executable uniqueness witness)
// and orthogonal matching pursuit as the greedy baseline.

#include <vector>

#include "mimocs/array_channel.hpp"
#include "mimocs/common.hpp"
#include "mimocs/sensing.hpp"

namespace mimocs {

enum class RecoveryAlgorithm { l0_exhaustive, omp };

struct RecoveryResult {
  Vec estimate;
  std::vector<int> support;
  double residual_norm = 0.0;
  bool exact = false;  // set by callers that know the ground truth
  RecoveryAlgorithm algorithm = RecoveryAlgorithm::l0_exhaustive;
};

// Least squares on every support of size <= k; returns the minimum-residual
// solution (ties broken by lexicographic support order).  Raises
// AmbiguousSolution when a second support fits equally well with a genuinely
// different solution and spark(g) <= 2k.
RecoveryResult l0_exhaustive(const Mat& g, const Vec& y, int k);

// Greedy max-correlation selection, full least-squares refit each round,
// early stop when the residual drops below tol.
RecoveryResult omp_recover(const Mat& g, const Vec& y, int k, double tol = 1e-12);

struct EndToEndReport {
  double nmse = 0.0;  // ||est - truth||^2 / ||truth||^2, 0/0 -> 0
  bool support_match = false;
  RecoveryResult result;
};

EndToEndReport end_to_end(const PathSet& path_set, const SensingDesign& design,
                          const NoiseSpec& noise, RecoveryAlgorithm algorithm);

}  // namespace mimocs
