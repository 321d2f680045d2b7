#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "unruh/coherence.hpp"
#include "unruh/dirac_field.hpp"

using namespace unruh;
using testsup::plus_projector;

TEST_CASE("shannon entropy anchors") {
  CHECK(shannon_entropy({{1.0}, 0.0}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(shannon_entropy({{0.5, 0.5}, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
  // -0.25 log2 0.25 - 0.75 log2 0.75
  const double expected = 0.25 * 2.0 - 0.75 * std::log2(0.75);
  CHECK(shannon_entropy({{0.25, 0.75}, 0.0}) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(shannon_entropy({{0.25, 0.75}, 0.0}) == doctest::Approx(0.811278).epsilon(1e-5));
}

TEST_CASE("shannon entropy conventions and validation") {
  CHECK(entropy_term(0.0) == 0.0);
  CHECK(shannon_entropy({{0.0, 1.0}, 0.0}) == 0.0);
  CHECK_THROWS_AS(shannon_entropy({{-0.1, 1.1}, 0.0}), std::invalid_argument);
  // tiny negatives within tolerance count as zero
  CHECK(shannon_entropy({{-1e-12, 1.0}, 0.0}) == 0.0);
}

TEST_CASE("shannon entropy is permutation invariant and maximal at uniform") {
  std::mt19937_64 rng(11);
  for (int dim = 2; dim <= 8; ++dim) {
    std::vector<double> p(dim);
    double total = 0.0;
    for (auto& v : p) total += v = std::uniform_real_distribution<>(0.01, 1.0)(rng);
    for (auto& v : p) v /= total;

    const double s = shannon_entropy({p, 0.0});
    auto shuffled = p;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(shannon_entropy({shuffled, 0.0}) == doctest::Approx(s).epsilon(1e-12));

    const std::vector<double> uniform(dim, 1.0 / dim);
    CHECK(s <= shannon_entropy({uniform, 0.0}) + 1e-12);
    CHECK(shannon_entropy({uniform, 0.0}) == doctest::Approx(std::log2(dim)).epsilon(1e-13));
  }
}

TEST_CASE("von Neumann entropy anchors") {
  CHECK(von_neumann_entropy(testsup::maximally_mixed(2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(plus_projector()) == doctest::Approx(0.0).epsilon(1e-10));

  // 4x4 Dirac reduced state at alpha = 1/sqrt(2), theta = pi/4, built by hand
  // (pi/4 itself is outside DiracFrame's domain).
  const double a2 = 0.5;
  const double c2 = 0.5, s2 = 0.5;
  DensityMatrix rho;
  rho.mat = Eigen::MatrixXcd::Zero(4, 4);
  rho.mat(0, 0) = a2 * c2;
  rho.mat(1, 1) = a2 * s2;
  rho.mat(3, 3) = 1.0 - a2;
  rho.mat(0, 3) = rho.mat(3, 0) = std::sqrt(a2) * std::sqrt(1.0 - a2) * std::sqrt(c2);
  const double expected = shannon_entropy({{0.75, 0.25}, 0.0});
  CHECK(von_neumann_entropy(rho) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("von Neumann entropy validation") {
  DensityMatrix bad;
  bad.mat = Eigen::MatrixXcd::Zero(2, 2);
  bad.mat(0, 0) = 1.0;
  bad.mat(0, 1) = 0.5;  // not Hermitian
  CHECK_THROWS_AS(von_neumann_entropy(bad), std::invalid_argument);

  DensityMatrix negative;
  negative.mat = Eigen::MatrixXcd::Zero(2, 2);
  negative.mat(0, 0) = 1.5;
  negative.mat(1, 1) = -0.5;
  CHECK_THROWS_AS(von_neumann_entropy(negative), std::invalid_argument);
}

TEST_CASE("dephase") {
  auto rho = random_density_matrix(4, 21);
  const auto diag = dephase(rho);
  SUBCASE("keeps the diagonal and zeroes the rest") {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i == j) {
          CHECK(diag.mat(i, j) == rho.mat(i, j));
        } else {
          CHECK(std::abs(diag.mat(i, j)) == 0.0);
        }
      }
    }
  }
  SUBCASE("idempotent and trace preserving") {
    const auto twice = dephase(diag);
    CHECK((twice.mat - diag.mat).cwiseAbs().maxCoeff() == 0.0);
    CHECK(diag.mat.trace().real() == doctest::Approx(rho.mat.trace().real()).epsilon(1e-14));
  }
  SUBCASE("diagonal input is a fixed point") {
    const auto again = dephase(diag);
    CHECK((again.mat - diag.mat).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("uniform superposition dephases to maximally mixed") {
    const auto mixed = dephase(plus_projector());
    CHECK((mixed.mat - testsup::maximally_mixed(2).mat).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("dirac state dephases to its diagonal") {
    const auto st = dirac_state(0.6, DiracFrame::from_theta(0.4));
    const auto d = dephase(st.matrix);
    CHECK(std::abs(d.mat(0, 3)) == 0.0);
    CHECK(d.mat(0, 0) == st.matrix.mat(0, 0));
    CHECK(d.mat(3, 3) == st.matrix.mat(3, 3));
  }
}

TEST_CASE("relative entropy of coherence on matrices") {
  SUBCASE("diagonal states carry none") {
    const auto rep = rel_ent_coherence_matrix(dephase(random_density_matrix(3, 5)));
    CHECK(std::abs(rep.value) < 1e-10);
  }
  SUBCASE("uniform qubit superposition carries one bit") {
    const auto rep = rel_ent_coherence_matrix(plus_projector());
    CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rep.s_diag == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.tail_guarantee == 0.0);
  }
  SUBCASE("matches the closed form on the Dirac state") {
    const auto st = dirac_state(0.5, DiracFrame::from_theta(std::numbers::pi / 6));
    const auto rep = rel_ent_coherence_matrix(st.matrix);
    CHECK(rep.value == doctest::Approx(0.6768).epsilon(2e-4));
    CHECK(rep.value ==
          doctest::Approx(testsup::dirac_closed_form_oracle(0.5, std::numbers::pi / 6))
              .epsilon(1e-10));
  }
  SUBCASE("report is self-consistent") {
    const auto rep = rel_ent_coherence_matrix(random_density_matrix(4, 33));
    CHECK(rep.value == doctest::Approx(rep.s_diag - rep.s_rho).epsilon(1e-12));
    CHECK(rep.value >= -1e-10);
  }
}

TEST_CASE("is_incoherent") {
  CHECK(is_incoherent(testsup::maximally_mixed(3), 1e-10));
  CHECK_FALSE(is_incoherent(plus_projector(), 1e-10));
  // alpha = 1 kills the off-diagonal coefficient for any theta
  const auto st = dirac_state(1.0, DiracFrame::from_theta(0.3));
  CHECK(is_incoherent(st.matrix, 1e-10));
}

TEST_CASE("incoherent channels") {
  SUBCASE("identity channel is a no-op") {
    const auto rho = random_density_matrix(3, 71);
    std::vector<Eigen::MatrixXcd> id = {Eigen::MatrixXcd::Identity(3, 3)};
    const auto out = apply_incoherent_channel(rho, id);
    CHECK((out.mat - rho.mat).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("permutation channel permutes a diagonal state") {
    const auto rho = dephase(random_density_matrix(3, 72));
    const auto out = apply_incoherent_channel(rho, testsup::cyclic_permutation_kraus(3));
    CHECK(is_incoherent(out, 1e-14));
    CHECK(out.mat(1, 1).real() == doctest::Approx(rho.mat(0, 0).real()).epsilon(1e-14));
    CHECK(out.mat(2, 2).real() == doctest::Approx(rho.mat(1, 1).real()).epsilon(1e-14));
    CHECK(out.mat(0, 0).real() == doctest::Approx(rho.mat(2, 2).real()).epsilon(1e-14));
  }
  SUBCASE("full dephasing sends |+><+| to maximally mixed") {
    const auto out = apply_incoherent_channel(plus_projector(), testsup::dephasing_kraus(2));
    // independent Kraus-sum computation: sum_i |i><i| rho |i><i| = diag(rho)
    CHECK((out.mat - testsup::maximally_mixed(2).mat).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("rejects incomplete Kraus sets") {
    std::vector<Eigen::MatrixXcd> half = {0.5 * Eigen::MatrixXcd::Identity(2, 2)};
    CHECK_THROWS_AS(apply_incoherent_channel(plus_projector(), half), std::invalid_argument);
  }
  SUBCASE("rejects coherence-creating Kraus sets") {
    Eigen::MatrixXcd h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    CHECK_THROWS_AS(apply_incoherent_channel(testsup::maximally_mixed(2), {h}),
                    std::invalid_argument);
  }
}

TEST_CASE("random density matrices") {
  const auto rho = random_density_matrix(2, 99);
  CHECK(rho.mat.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-14);

  const auto a = random_density_matrix(4, 7);
  const auto b = random_density_matrix(4, 7);
  CHECK((a.mat - b.mat).cwiseAbs().maxCoeff() == 0.0);  // bit-identical

  const auto spectrum = density_spectrum(random_density_matrix(3, 123));
  for (double ev : spectrum.entries) {
    CHECK(ev >= 0.0);
    CHECK(ev <= 1.0);
  }
  CHECK_THROWS_AS(random_density_matrix(0, 1), std::invalid_argument);
}

TEST_CASE("axiom C1: coherence vanishes exactly on incoherent states") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(seed % 3);
    const auto rho = random_density_matrix(dim, seed);
    const auto rep = rel_ent_coherence_matrix(rho);
    CHECK(rep.value >= -1e-10);
    CHECK_FALSE(is_incoherent(rho, 1e-10));  // Gaussian states are never diagonal
    CHECK(rep.value > 1e-9);

    const auto diag = dephase(rho);
    CHECK(is_incoherent(diag, 1e-10));
    CHECK(std::abs(rel_ent_coherence_matrix(diag).value) <= 1e-10);
  }
}

TEST_CASE("axiom C3: convexity on seeded mixtures") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index dim = 2 + trial % 3;
    const auto r1 = random_density_matrix(dim, 1000 + trial);
    const auto r2 = random_density_matrix(dim, 5000 + trial);
    const double p = std::uniform_real_distribution<>(0.0, 1.0)(rng);
    DensityMatrix mix;
    mix.mat = p * r1.mat + (1.0 - p) * r2.mat;
    const double lhs = rel_ent_coherence_matrix(mix).value;
    const double rhs = p * rel_ent_coherence_matrix(r1).value +
                       (1.0 - p) * rel_ent_coherence_matrix(r2).value;
    CHECK(lhs <= rhs + 1e-10);
  }
}

TEST_CASE("axiom C2a: monotone under dephasing and permutation channels") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(seed % 3);
    const auto rho = random_density_matrix(dim, 31 * seed + 1);
    const double before = rel_ent_coherence_matrix(rho).value;

    const auto dephased = apply_incoherent_channel(rho, testsup::dephasing_kraus(dim));
    CHECK(rel_ent_coherence_matrix(dephased).value <= before + 1e-10);

    const auto permuted =
        apply_incoherent_channel(rho, testsup::cyclic_permutation_kraus(dim));
    CHECK(rel_ent_coherence_matrix(permuted).value <= before + 1e-10);
  }
}

TEST_CASE("axiom C2b spot check: dephasing outcomes are incoherent") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(seed % 3);
    const auto rho = random_density_matrix(dim, 777 + seed);
    const double before = rel_ent_coherence_matrix(rho).value;
    double avg = 0.0;
    for (const auto& k : testsup::dephasing_kraus(dim)) {
      const double p = (k * rho.mat * k.adjoint()).trace().real();
      if (p <= 0.0) continue;
      DensityMatrix outcome;
      outcome.mat = (k * rho.mat * k.adjoint()) / p;
      CHECK(is_incoherent(outcome, 1e-12));
      avg += p * rel_ent_coherence_matrix(outcome).value;
    }
    CHECK(avg <= before + 1e-10);
  }
}

TEST_CASE("dephasing never lowers entropy") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto rho = random_density_matrix(2 + seed % 3, 4242 + seed);
    CHECK(von_neumann_entropy(dephase(rho)) >= von_neumann_entropy(rho) - 1e-10);
  }
}
