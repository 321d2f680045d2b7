#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace unruh {

// Validation tolerances shared by the state and spectrum facilities.
struct Tolerances {
  double norm = 1e-10;  // normalization / trace drift
  double herm = 1e-10;  // deviation from Hermitian symmetry
  double psd = 1e-10;   // allowed eigenvalue negativity
};

// -p*log2(p) with the 0*log 0 = 0 convention.
inline double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// Probability data, possibly truncated. `tail_bound` is a certified upper
// bound on the probability mass missing from `entries`; full spectra carry 0.
struct ProbVector {
  std::vector<double> entries;
  double tail_bound = 0.0;

  double mass() const;
};

struct DensityMatrix {
  Eigen::MatrixXcd mat;

  Eigen::Index dim() const { return mat.rows(); }
};

// Relative entropy of coherence together with the entropies it came from and
// the truncation metadata. All entropies are in bits (log base 2).
struct CoherenceReport {
  double value = 0.0;
  double s_diag = 0.0;
  double s_rho = 0.0;
  std::int64_t terms_used = 0;
  double tail_guarantee = 0.0;  // bound on the truncation error of `value`
};

// Entropy of a (possibly sub-normalized) probability vector in bits.
// Entries below -tol.norm are rejected; entries in [-tol.norm, 0) count as 0.
double shannon_entropy(const ProbVector& p, const Tolerances& tol = {});

// Eigenvalues of a Hermitian density matrix, ascending, clamped to [0, 1]
// after the -tol.psd negativity filter, renormalized when the total drift
// stays below tol.norm (otherwise an error).
ProbVector density_spectrum(const DensityMatrix& rho, const Tolerances& tol = {});

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = {});

// Projection onto the diagonal: same diagonal, zero elsewhere. Idempotent.
DensityMatrix dephase(const DensityMatrix& rho);

// S(dephase(rho)) - S(rho). Exact (tail_guarantee = 0) for finite matrices.
CoherenceReport rel_ent_coherence_matrix(const DensityMatrix& rho, const Tolerances& tol = {});

// True iff every off-diagonal magnitude is at most `tol`.
bool is_incoherent(const DensityMatrix& rho, double tol);

// Applies sum_k K rho K^dag and renormalizes. The Kraus set must be complete
// (sum K^dag K = 1 within tol.norm) and incoherent: each K must map every
// basis projector to a diagonal matrix (checked entrywise within tol.herm).
DensityMatrix apply_incoherent_channel(const DensityMatrix& rho,
                                       const std::vector<Eigen::MatrixXcd>& kraus,
                                       const Tolerances& tol = {});

// G G^dag / tr(G G^dag) with G filled from a seeded Gaussian generator.
// Deterministic for a fixed seed.
DensityMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed);

}  // namespace unruh
