#include "unruh/dirac_field.hpp"

#include <cmath>
#include <stdexcept>

namespace unruh {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
}

}  // namespace

DiracState dirac_state(double alpha, const DiracFrame& frame) {
  check_alpha(alpha);
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  // cos(theta) from the cached cos^2 keeps the {|00>,|11>} sub-block exactly
  // rank-1: off^2 = a2 * cos2 * b2 = m(0,0) * m(3,3) to rounding.
  const double off = alpha * std::sqrt(b2) * std::sqrt(frame.cos2);

  DiracState st;
  st.alpha = alpha;
  st.frame = frame;
  st.matrix.mat = Eigen::MatrixXcd::Zero(4, 4);
  st.matrix.mat(0, 0) = a2 * frame.cos2;
  st.matrix.mat(1, 1) = a2 * frame.sin2;
  st.matrix.mat(3, 3) = b2;
  st.matrix.mat(0, 3) = off;
  st.matrix.mat(3, 0) = off;
  return st;
}

ProbVector dirac_eigenvalues(double alpha, const DiracFrame& frame) {
  check_alpha(alpha);
  const double lam2 = alpha * alpha * frame.sin2;
  return ProbVector{{1.0 - lam2, lam2}, 0.0};
}

CoherenceReport dirac_coherence(double alpha, const DiracFrame& frame) {
  check_alpha(alpha);
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  const double a2c = a2 * frame.cos2;
  const double a2s = a2 * frame.sin2;

  CoherenceReport rep;
  rep.s_diag = entropy_term(a2c) + entropy_term(a2s) + entropy_term(b2);
  rep.s_rho = entropy_term(1.0 - a2s) + entropy_term(a2s);
  rep.value = entropy_term(a2c) + entropy_term(b2) - entropy_term(1.0 - a2s);
  rep.terms_used = 2;
  rep.tail_guarantee = 0.0;
  if (alpha == 0.0 || alpha == 1.0) rep.value = 0.0;
  return rep;
}

double dirac_limit_coherence(double alpha) {
  check_alpha(alpha);
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  return entropy_term(b2) + entropy_term(a2 / 2.0) - entropy_term((2.0 - a2) / 2.0);
}

double dirac_coherence_loss(double alpha) {
  check_alpha(alpha);
  const double a2 = alpha * alpha;
  return entropy_term(a2) - entropy_term(a2 / 2.0) + entropy_term((2.0 - a2) / 2.0);
}

}  // namespace unruh
