#include "unruh/coherence.hpp"

#include <random>
#include <stdexcept>

namespace unruh {

namespace {

void check_square(const DensityMatrix& rho) {
  if (rho.mat.rows() < 1 || rho.mat.rows() != rho.mat.cols()) {
    throw std::invalid_argument("density matrix must be square with dim >= 1");
  }
}

void check_hermitian(const DensityMatrix& rho, double tol) {
  const double dev = (rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff();
  if (!(dev <= tol)) {
    throw std::invalid_argument("matrix is not Hermitian: max asymmetry " +
                                std::to_string(dev));
  }
}

}  // namespace

double ProbVector::mass() const {
  double s = 0.0;
  for (double p : entries) s += p;
  return s + tail_bound;
}

double shannon_entropy(const ProbVector& p, const Tolerances& tol) {
  double s = 0.0;
  for (double q : p.entries) {
    if (q < -tol.norm || q > 1.0 + tol.norm) {
      throw std::invalid_argument("probability entry out of range: " + std::to_string(q));
    }
    s += entropy_term(q);
  }
  return s;
}

ProbVector density_spectrum(const DensityMatrix& rho, const Tolerances& tol) {
  check_square(rho);
  check_hermitian(rho, tol.herm);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.mat, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }

  ProbVector out;
  out.entries.reserve(static_cast<std::size_t>(rho.dim()));
  double total = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    double ev = solver.eigenvalues()[i];
    if (ev < -tol.psd) {
      throw std::invalid_argument("matrix is not positive semidefinite: eigenvalue " +
                                  std::to_string(ev));
    }
    ev = std::min(std::max(ev, 0.0), 1.0);
    out.entries.push_back(ev);
    total += ev;
  }
  if (std::abs(total - 1.0) > tol.norm) {
    throw std::invalid_argument("spectrum mass drifts from 1 by " +
                                std::to_string(total - 1.0));
  }
  if (total > 0.0) {
    for (double& ev : out.entries) ev /= total;
  }
  return out;
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  return shannon_entropy(density_spectrum(rho, tol), tol);
}

DensityMatrix dephase(const DensityMatrix& rho) {
  check_square(rho);
  DensityMatrix out;
  out.mat = rho.mat.diagonal().asDiagonal();
  return out;
}

CoherenceReport rel_ent_coherence_matrix(const DensityMatrix& rho, const Tolerances& tol) {
  CoherenceReport rep;
  rep.s_rho = von_neumann_entropy(rho, tol);
  rep.s_diag = von_neumann_entropy(dephase(rho), tol);
  rep.value = rep.s_diag - rep.s_rho;
  rep.terms_used = static_cast<std::int64_t>(rho.dim());
  rep.tail_guarantee = 0.0;
  return rep;
}

bool is_incoherent(const DensityMatrix& rho, double tol) {
  check_square(rho);
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      if (i != j && std::abs(rho.mat(i, j)) > tol) return false;
    }
  }
  return true;
}

DensityMatrix apply_incoherent_channel(const DensityMatrix& rho,
                                       const std::vector<Eigen::MatrixXcd>& kraus,
                                       const Tolerances& tol) {
  check_square(rho);
  const Eigen::Index d = rho.dim();
  if (kraus.empty()) throw std::invalid_argument("empty Kraus set");
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) {
      throw std::invalid_argument("Kraus operator dimension mismatch");
    }
  }

  Eigen::MatrixXcd completeness = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& k : kraus) completeness += k.adjoint() * k;
  const double comp_dev =
      (completeness - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (comp_dev > tol.norm) {
    throw std::invalid_argument("Kraus set is not complete: deviation " +
                                std::to_string(comp_dev));
  }

  // Incoherence: K |i><i| K^dag must be diagonal for every basis projector,
  // i.e. every column of K has at most one non-negligible entry.
  for (const auto& k : kraus) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const Eigen::VectorXcd col = k.col(i);
      for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
          if (a != b && std::abs(col[a]) * std::abs(col[b]) > tol.herm) {
            throw std::invalid_argument("Kraus set is not incoherent");
          }
        }
      }
    }
  }

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& k : kraus) out += k * rho.mat * k.adjoint();
  const double tr = out.trace().real();
  if (!(tr > 0.0)) throw std::runtime_error("channel output has nonpositive trace");
  out /= tr;
  return DensityMatrix{std::move(out)};
}

DensityMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");

  std::mt19937_64 rng(seed);
  // Explicit Box-Muller instead of std::normal_distribution so the stream is
  // identical across standard library implementations.
  auto gauss = [&rng]() {
    constexpr double kScale = 1.0 / 18446744073709551616.0;  // 2^-64
    const double u1 = (static_cast<double>(rng()) + 0.5) * kScale;
    const double u2 = (static_cast<double>(rng()) + 0.5) * kScale;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };

  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = std::complex<double>(gauss(), gauss());
    }
  }
  Eigen::MatrixXcd m = g * g.adjoint();
  m = (m + m.adjoint()) / 2.0;  // scrub rounding asymmetry
  m /= m.trace().real();
  return DensityMatrix{std::move(m)};
}

}  // namespace unruh
