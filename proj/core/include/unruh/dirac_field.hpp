#pragma once

#include "unruh/coherence.hpp"
#include "unruh/frames.hpp"

namespace unruh {

// Reduced state of the Dirac modes on the basis {|00>, |01>, |10>, |11>}.
// Row and column |10> are identically zero; the eigenvalues are
// {1 - alpha^2 sin^2(theta), alpha^2 sin^2(theta), 0, 0}.
struct DiracState {
  double alpha = 0.0;
  DiracFrame frame;
  DensityMatrix matrix;
};

DiracState dirac_state(double alpha, const DiracFrame& frame);

// The two nonzero eigenvalues, in decreasing order.
ProbVector dirac_eigenvalues(double alpha, const DiracFrame& frame);

// Closed-form relative entropy of coherence (bits); tail_guarantee = 0.
CoherenceReport dirac_coherence(double alpha, const DiracFrame& frame);

// Coherence in the infinite-acceleration limit theta -> pi/4, evaluated from
// its own closed form rather than as a limit of dirac_coherence.
double dirac_limit_coherence(double alpha);

// Coherence lost between theta = 0 and the infinite-acceleration limit.
double dirac_coherence_loss(double alpha);

}  // namespace unruh
