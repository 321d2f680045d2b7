#include "unruh/scalar_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace unruh {

namespace {

// Compensated accumulator; the sums below run over up to ~1e8 terms and the
// certified bounds must not be swamped by accumulation rounding.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
}

// Series geometry for a frame: x = tanh^2 r, handled through 1-x = 1/cosh^2 r
// so that nothing cancels at large r.
struct SeriesGeometry {
  double x = 0.0;
  double one_minus_x = 1.0;
  double log_x = 0.0;  // ln x

  explicit SeriesGeometry(const ScalarFrame& f)
      : one_minus_x(1.0 / f.cosh2) {
    x = 1.0 - one_minus_x;
    log_x = (x > 0.0) ? std::log1p(-one_minus_x) : 0.0;
  }

  // sum_{n>N} (1-x) x^n
  double tail_w(std::int64_t n_last) const {
    if (x <= 0.0) return 0.0;
    return std::exp(static_cast<double>(n_last + 1) * log_x);
  }

  // sum_{n>N} (1-x)^2 (n+1) x^n
  double tail_excited(std::int64_t n_last) const {
    if (x <= 0.0) return 0.0;
    return tail_w(n_last) * (1.0 + static_cast<double>(n_last + 1) * one_minus_x);
  }
};

// Smallest N with both analytic tails below tol, or -1 when no N within the
// cap works.
std::int64_t choose_last_index(const SeriesGeometry& g, double tol, std::int64_t max_terms) {
  if (g.x <= 0.0) return 0;
  const std::int64_t cap = max_terms - 1;
  auto ok = [&](std::int64_t n) { return g.tail_w(n) <= tol && g.tail_excited(n) <= tol; };
  if (!ok(cap)) return -1;

  // Lower bound from the plain geometric tail, then binary search.
  std::int64_t lo = static_cast<std::int64_t>(std::floor(std::log(tol) / g.log_x)) - 1;
  lo = std::max<std::int64_t>(lo, 0);
  if (ok(lo)) return lo;
  std::int64_t hi = lo + 1;
  std::int64_t step = 1;
  while (!ok(hi)) {
    step *= 2;
    hi = std::min(cap, hi + step);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::int64_t require_last_index(const SeriesGeometry& g, double tol,
                                const SeriesLimits& limits) {
  if (!(tol > 0.0)) throw std::invalid_argument("series tolerance must be > 0");
  if (limits.max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
  const std::int64_t n_last = choose_last_index(g, tol, limits.max_terms);
  if (n_last < 0) {
    const double achievable = g.tail_excited(limits.max_terms - 1);
    throw TruncationError("series tolerance " + fmt_g(tol) + " infeasible within " +
                              std::to_string(limits.max_terms) +
                              " terms; achievable tolerance is " + fmt_g(achievable),
                          achievable, limits.max_terms);
  }
  return n_last;
}

// Entropy carried by the omitted tail, in bits, from the closed forms over
// n > N with x = tanh^2 r:
//
//   p0_n = A x^n,        A = alpha^2 (1-x)
//   p1_n = B (n+1) x^n,  B = (1-alpha^2) (1-x)^2
//
// The p0 part is an exact geometric sum:
//   -sum p0_n log2 p0_n = -A [ log2(A) S0 + log2(x) Sn ],
//   S0 = x^{N+1}/(1-x),  Sn = x^{N+1} ((N+1)(1-x) + x)/(1-x)^2.
//
// The p1 part is bounded by dropping the -log2(n+1) <= 0 term:
//   -sum p1_n log2 p1_n <= B [ -log2(B) S1 - log2(x) S2 ],
//   S1 = x^{N+1} (1 + (N+1)(1-x)) / (1-x)^2,
//   S2 = x^{N+1} [ x(1+x)/(1-x)^3 + (2N+3)x/(1-x)^2 + (N+1)(N+2)/(1-x) ].
//
// Because -(a+b)log2(a+b) <= -a log2 a - b log2 b for a, b >= 0 with
// a + b <= 1, the same quantity bounds the eigenvalue-entropy tail, and the
// truncation error of s_diag - s_rho lies in [0, E_p0 + E_p1].
double tail_entropy_bound(const SeriesGeometry& g, double alpha, std::int64_t n_last) {
  if (g.x <= 0.0) return 0.0;
  const double x = g.x;
  const double omx = g.one_minus_x;
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  const double np1 = static_cast<double>(n_last + 1);
  const double xn1 = std::exp(np1 * g.log_x);  // x^{N+1}
  const double log2_x = g.log_x / std::numbers::ln2;

  double bound = 0.0;
  if (a2 > 0.0) {
    const double a = a2 * omx;
    const double s0 = xn1 / omx;
    const double sn = xn1 * (np1 * omx + x) / (omx * omx);
    bound += -a * (std::log2(a) * s0 + log2_x * sn);
  }
  if (b2 > 0.0) {
    const double b = b2 * omx * omx;
    const double s1 = xn1 * (1.0 + np1 * omx) / (omx * omx);
    const double s2 = xn1 * (x * (1.0 + x) / (omx * omx * omx) +
                             (2.0 * np1 + 1.0) * x / (omx * omx) +
                             np1 * (np1 + 1.0) / omx);
    bound += b * (-std::log2(b) * s1 - log2_x * s2);
  }
  return bound;
}

}  // namespace

ScalarBlock scalar_block(double alpha, const ScalarFrame& frame, std::int64_t n) {
  check_alpha(alpha);
  if (n < 0) throw std::invalid_argument("block index must be >= 0");

  const SeriesGeometry g(frame);
  ScalarBlock blk;
  blk.n = n;
  if (g.x <= 0.0) {
    blk.weight = (n == 0) ? 1.0 : 0.0;
  } else {
    blk.weight = std::exp(static_cast<double>(n) * g.log_x) * g.one_minus_x;
  }
  const double a2 = alpha * alpha;
  blk.p0 = blk.weight * a2;
  blk.p1 = blk.weight * (1.0 - a2) * static_cast<double>(n + 1) * g.one_minus_x;
  blk.lam = blk.p0 + blk.p1;
  return blk;
}

ScalarSpectrum scalar_spectrum(double alpha, const ScalarFrame& frame, double tol,
                               const SeriesLimits& limits) {
  check_alpha(alpha);
  const SeriesGeometry g(frame);
  const std::int64_t n_last = require_last_index(g, tol, limits);

  ScalarSpectrum spec;
  spec.blocks.reserve(static_cast<std::size_t>(n_last + 1));

  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  const double c0 = a2 * g.one_minus_x;
  const double c1 = b2 * g.one_minus_x * g.one_minus_x;

  constexpr std::int64_t kResync = 1024;
  double xn = 1.0;
  for (std::int64_t n = 0; n <= n_last; ++n) {
    if (g.x > 0.0 && n % kResync == 0) {
      xn = std::exp(static_cast<double>(n) * g.log_x);
    }
    ScalarBlock blk;
    blk.n = n;
    blk.weight = xn * g.one_minus_x;
    blk.p0 = c0 * xn;
    blk.p1 = c1 * static_cast<double>(n + 1) * xn;
    blk.lam = blk.p0 + blk.p1;
    spec.blocks.push_back(blk);
    xn *= g.x;
  }

  spec.tail_mass_p0 = a2 * g.tail_w(n_last);
  spec.tail_mass_p1 = b2 * g.tail_excited(n_last);
  spec.tail_mass_lam = spec.tail_mass_p0 + spec.tail_mass_p1;
  return spec;
}

CoherenceReport scalar_coherence(double alpha, const ScalarFrame& frame, double tol,
                                 const SeriesLimits& limits) {
  check_alpha(alpha);
  const SeriesGeometry g(frame);

  CoherenceReport rep;
  if (g.x <= 0.0) {
    // Zero acceleration: the single n = 0 block is the pure initial state.
    const double a2 = alpha * alpha;
    rep.s_diag = entropy_term(a2) + entropy_term(1.0 - a2);
    rep.s_rho = 0.0;
    rep.value = rep.s_diag;
    rep.terms_used = 1;
    rep.tail_guarantee = 0.0;
    return rep;
  }

  const std::int64_t n_last = require_last_index(g, tol, limits);
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  const double c0 = a2 * g.one_minus_x;
  const double c1 = b2 * g.one_minus_x * g.one_minus_x;

  KahanSum s_diag;
  KahanSum s_rho;
  constexpr std::int64_t kResync = 1024;
  double xn = 1.0;
  for (std::int64_t n = 0; n <= n_last; ++n) {
    if (n % kResync == 0) xn = std::exp(static_cast<double>(n) * g.log_x);
    const double p0 = c0 * xn;
    const double p1 = c1 * static_cast<double>(n + 1) * xn;
    s_diag.add(entropy_term(p0));
    s_diag.add(entropy_term(p1));
    s_rho.add(entropy_term(p0 + p1));
    xn *= g.x;
  }

  rep.s_diag = s_diag.sum;
  rep.s_rho = s_rho.sum;
  rep.value = rep.s_diag - rep.s_rho;
  rep.terms_used = n_last + 1;
  rep.tail_guarantee = tail_entropy_bound(g, alpha, n_last);
  if (alpha == 0.0 || alpha == 1.0) rep.value = 0.0;  // diagonal state
  return rep;
}

DensityMatrix scalar_block_matrix(double alpha, const ScalarFrame& frame, std::int64_t n) {
  const ScalarBlock blk = scalar_block(alpha, frame, n);
  if (!(blk.weight > 0.0)) {
    throw std::invalid_argument("block " + std::to_string(n) + " has zero weight");
  }

  // Unnormalized block on {|0,n>, |1,n+1>}, then trace-normalized. Its
  // determinant vanishes identically, so the spectrum is {1, 0}.
  const double a2 = alpha * alpha;
  const double d = (1.0 - a2) * static_cast<double>(n + 1) / frame.cosh2;
  const double off = alpha * std::sqrt(1.0 - a2) *
                     std::sqrt(static_cast<double>(n + 1)) / std::sqrt(frame.cosh2);
  const double tr = a2 + d;

  DensityMatrix out;
  out.mat = Eigen::MatrixXcd::Zero(2, 2);
  out.mat(0, 0) = a2 / tr;
  out.mat(0, 1) = off / tr;
  out.mat(1, 0) = off / tr;
  out.mat(1, 1) = d / tr;
  return out;
}

}  // namespace unruh
