#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "unruh/coherence.hpp"
#include "unruh/frames.hpp"

namespace unruh {

// Raised when the requested series tolerance cannot be met within the term
// cap. Carries the tolerance that would be achievable at the cap.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& msg, double achievable_tol, std::int64_t max_terms)
      : std::runtime_error(msg), achievable_tol_(achievable_tol), max_terms_(max_terms) {}

  double achievable_tol() const { return achievable_tol_; }
  std::int64_t max_terms() const { return max_terms_; }

 private:
  double achievable_tol_;
  std::int64_t max_terms_;
};

struct SeriesLimits {
  std::int64_t max_terms = 1'000'000;
};

// One 2x2 block of the scalar reduced state at Rindler excitation index n.
// Each block is rank-1: its determinant vanishes identically, so the block
// eigenvalues are {lam, 0} with lam = p0 + p1.
struct ScalarBlock {
  std::int64_t n = 0;
  double weight = 0.0;  // tanh^{2n} r / cosh^2 r
  double p0 = 0.0;      // diagonal mass on |0,n>
  double p1 = 0.0;      // diagonal mass on |1,n+1>
  double lam = 0.0;     // block eigenvalue
};

// Truncated block spectrum with certified bounds on the omitted mass.
struct ScalarSpectrum {
  std::vector<ScalarBlock> blocks;  // n = 0..N, no gaps
  double tail_mass_lam = 0.0;
  double tail_mass_p0 = 0.0;
  double tail_mass_p1 = 0.0;
};

ScalarBlock scalar_block(double alpha, const ScalarFrame& frame, std::int64_t n);

// Includes blocks 0..N for the smallest N at which both analytic tails
//   sum_{n>N} x^n (1-x)           = x^{N+1}
//   sum_{n>N} x^n (1-x)^2 (n+1)   = x^{N+1} (1 + (N+1)(1-x))
// (x = tanh^2 r) drop below tol. Throws TruncationError when that N would
// exceed limits.max_terms.
ScalarSpectrum scalar_spectrum(double alpha, const ScalarFrame& frame, double tol,
                               const SeriesLimits& limits = {});

// Relative entropy of coherence of the scalar reduced state by certified
// series truncation; see scalar_field.cpp for the tail-bound derivation.
CoherenceReport scalar_coherence(double alpha, const ScalarFrame& frame, double tol,
                                 const SeriesLimits& limits = {});

// The n-th 2x2 block, trace-normalized, as a DensityMatrix on the basis
// {|0,n>, |1,n+1>}. Throws on zero-weight blocks.
DensityMatrix scalar_block_matrix(double alpha, const ScalarFrame& frame, std::int64_t n);

}  // namespace unruh
