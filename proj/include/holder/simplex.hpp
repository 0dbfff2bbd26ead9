// Copyright 2026 The holder-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "holder/norm_core.hpp"
#include "holder/numerics.hpp"

namespace holder {

/// A point of the open simplex: a_i > 0, sum a_i = 1 (to 2^(-prec/2)).
class SimplexPoint {
 public:
  SimplexPoint(std::vector<Real> coordinates, Bits prec) : coords_(std::move(coordinates)), precision_(prec) {
    if (coords_.size() < 2) throw std::invalid_argument("simplex point needs at least 2 coordinates");
    Real sum(prec);
    for (Real& c : coords_) {
      c = c.with_precision(prec);
      if (!(c > 0)) throw std::invalid_argument("simplex coordinates must be > 0");
      sum += c;
    }
    if (abs(sum - 1) > relative_tolerance(prec))
      throw std::invalid_argument("simplex coordinates must sum to 1, got " + sum.to_string(20));
  }

  /// Divides positive weights by their sum at full precision.
  static SimplexPoint normalized(std::span<const double> weights, Bits prec = kDefaultPrecision) {
    Real sum(prec);
    for (double w : weights) sum += Real(w, prec);
    std::vector<Real> c;
    c.reserve(weights.size());
    for (double w : weights) c.push_back(Real(w, prec) / sum);
    return SimplexPoint(std::move(c), prec);
  }

  static SimplexPoint centroid(int n, Bits prec = kDefaultPrecision) {
    if (n < 2) throw std::invalid_argument("centroid needs n >= 2");
    return SimplexPoint(std::vector<Real>(static_cast<size_t>(n), Real(1, prec) / n), prec);
  }

  const std::vector<Real>& coordinates() const { return coords_; }
  size_t size() const { return coords_.size(); }
  Bits precision() const { return precision_; }

  std::vector<double> to_doubles() const {
    std::vector<double> out;
    out.reserve(coords_.size());
    for (const Real& c : coords_) out.push_back(c.to_double());
    return out;
  }

 private:
  std::vector<Real> coords_;
  Bits precision_;
};

/// max of sum_{i<j} a_i a_j over the simplex: (n-1)/(2n), at the centroid.
inline BigRational pairwise_sum_bound(int n) {
  if (n < 2) throw std::invalid_argument("pairwise_sum_bound: n must be >= 2");
  return make_rational(n - 1, 2 * n);
}

/// g_k = prod_{i != k} a_i with unit weights; {ab, bc, ca} up to order when
/// n = 3 (here g_0 = bc, g_1 = ca, g_2 = ab).
inline WeightedSequence leave_one_out_products(const SimplexPoint& a) {
  const auto& c = a.coordinates();
  const size_t n = c.size();
  std::vector<Real> prefix(n + 1, Real(1, a.precision()));
  std::vector<Real> suffix(n + 1, Real(1, a.precision()));
  for (size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * c[i];
  for (size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * c[i];
  WeightedSequence g(a.precision());
  for (size_t k = 0; k < n; ++k) g.push_back(prefix[k] * suffix[k + 1], Real(1, a.precision()));
  return g;
}

/// sum_k g_k^s over the leave-one-out products; for n = 3 and s = 5/4,
/// (ab)^(5/4) + (bc)^(5/4) + (ca)^(5/4).
inline Real dinu_lhs(const SimplexPoint& a, const BigRational& s) {
  if (s < 1) throw std::invalid_argument("dinu_lhs: s must be >= 1");
  return power_sum(leave_one_out_products(a), s);
}

/// ((n-1)/(2n)) * (1/4)^(1/m).
inline Real general_simplex_bound(int n, int m_int, Bits prec = kDefaultPrecision) {
  if (n < 3) throw std::invalid_argument("general_simplex_bound: n must be >= 3");
  if (m_int < 1) throw std::invalid_argument("general_simplex_bound: m must be >= 1");
  const Real quarter(BigRational(1, 4), prec + 16);
  Real v = Real(pairwise_sum_bound(n), prec + 16) * pow(quarter, Real(BigRational(1, m_int), prec + 16));
  return v.with_precision(prec);
}

struct ChainStep {
  int step_index = 0;
  Exponent q = Exponent(1);
  Exponent p = Exponent::infinity();
  /// sum_k f_k^(1 + 1/q), when replayed on a concrete sequence.
  std::optional<Real> step_value;
  /// ||f * f^(1/q)||_1 <= ||f||_p ||f^(1/q)||_q on the concrete sequence.
  std::optional<BoundReport> holder;
  /// Back-substituted bound on step_value.
  Real intermediate_bound;
};

struct ChainCertificate {
  BigRational s;
  int m_int = 0;
  std::vector<ChainStep> steps;
  Real final_bound;
  Real norm_1;
  Real norm_inf;
};

namespace detail {

inline void require_chain_length(int m_int) {
  if (m_int < 1) throw std::invalid_argument("holder_chain: m must be >= 1");
}

/**
 * Step j = 1..m applies Hölder with q_j = m-j+1 to f * f^(1/q_j):
 *   S_j <= S_{j+1}^((q-1)/q) ||f||_1^(1/q),   S_m <= ||f||_inf ||f||_1,
 * where S_j = sum f^(1+1/q_j). Back-substituting from the last step gives
 * S_1 <= ||f||_1 ||f||_inf^(1/m).
 */
inline ChainCertificate chain_skeleton(int m_int, const Real& norm_1, const Real& norm_inf) {
  ChainCertificate cert;
  cert.m_int = m_int;
  cert.s = BigRational(m_int + 1, m_int);
  cert.norm_1 = norm_1;
  cert.norm_inf = norm_inf;
  cert.steps.resize(static_cast<size_t>(m_int));
  for (int j = 1; j <= m_int; ++j) {
    ChainStep& st = cert.steps[static_cast<size_t>(j - 1)];
    st.step_index = j;
    st.q = Exponent(m_int - j + 1);
    st.p = st.q.conjugate();
  }
  const Bits prec = std::max(norm_1.precision(), norm_inf.precision());
  Real bound = norm_inf * norm_1;
  cert.steps.back().intermediate_bound = bound;
  for (int j = m_int - 1; j >= 1; --j) {
    const long q = m_int - j + 1;
    bound = pow(bound, Real(BigRational(q - 1, q), prec)) * pow(norm_1, Real(BigRational(1, q), prec));
    cert.steps[static_cast<size_t>(j - 1)].intermediate_bound = bound;
  }
  cert.final_bound = bound;
  return cert;
}

}  // namespace detail

/// The chain evaluated from norm caps alone, e.g. ||g||_1 <= 1/3 and
/// ||g||_inf <= 1/4 for the three-variable case.
inline ChainCertificate holder_chain_from_norms(int m_int, const Real& norm_1, const Real& norm_inf) {
  detail::require_chain_length(m_int);
  if (norm_1 < 0 || norm_inf < 0) throw std::invalid_argument("holder_chain: norms must be >= 0");
  return detail::chain_skeleton(m_int, norm_1, norm_inf);
}

/// The chain replayed on a concrete nonnegative sequence with unit weights.
inline ChainCertificate holder_chain(int m_int, const WeightedSequence& f) {
  detail::require_chain_length(m_int);
  if (!f.has_unit_weights()) throw std::invalid_argument("holder_chain: sequence must have unit weights");
  ChainCertificate cert = detail::chain_skeleton(m_int, p_norm(f, Exponent(1)), p_norm(f, Exponent::infinity()));
  for (ChainStep& st : cert.steps) {
    const BigRational inv_q = st.q.reciprocal();
    WeightedSequence g(f.precision());
    for (const Atom& a : f.atoms())
      g.push_back(a.value.is_zero() ? a.value : pow(a.value, inv_q), a.weight);
    st.step_value = power_sum(f, BigRational(1 + inv_q));
    st.holder = holder_check(f, g, st.p);
  }
  return cert;
}

struct GeneralInequalityResult {
  int n = 0;
  int m_int = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  int grid_depth = 0;
  long points_evaluated = 0;
  BoundReport report;
  std::vector<double> argmax;
  /// Samples where ||g||_1 <= (n-1)/(2n) or ||g||_inf <= 1/4 failed.
  long premise_violations = 0;
  double max_norm_1 = 0;
  double max_norm_inf = 0;
  /// lhs at the closed-boundary edge midpoint (1/2, 1/2, 0, ...).
  Real boundary_limit;
};

namespace detail {

inline constexpr double kSimplexFloor = 1e-12;
inline constexpr long kMaxGridPoints = 20000;
inline constexpr int kSamplingShards = 8;

struct FastEval {
  double lhs = 0;
  double norm_1 = 0;
  double norm_inf = 0;
};

/// Double-precision leave-one-out power sum; used only to locate maxima.
inline FastEval fast_dinu(std::span<const double> a, double s, std::vector<double>& scratch) {
  const size_t n = a.size();
  scratch.assign(n + 1, 1.0);
  for (size_t i = n; i-- > 0;) scratch[i] = scratch[i + 1] * a[i];
  FastEval out;
  double prefix = 1.0;
  for (size_t k = 0; k < n; ++k) {
    double g = prefix * scratch[k + 1];
    out.lhs += std::pow(g, s);
    out.norm_1 += g;
    out.norm_inf = std::max(out.norm_inf, g);
    prefix *= a[k];
  }
  return out;
}

inline void clamp_and_normalize(std::vector<double>& a) {
  double sum = 0;
  for (double& v : a) {
    v = std::max(v, kSimplexFloor);
    sum += v;
  }
  for (double& v : a) v /= sum;
}

struct Candidate {
  double lhs = -1;
  std::vector<double> point;
};

struct ShardResult {
  Candidate best;
  long violations = 0;
  double max_norm_1 = 0;
  double max_norm_inf = 0;
  long evaluated = 0;
};

struct PremiseCaps {
  double norm_1;
  double norm_inf;
};

inline void consider(ShardResult& r, const std::vector<double>& a, double s, const PremiseCaps& caps,
                     std::vector<double>& scratch) {
  FastEval e = fast_dinu(a, s, scratch);
  ++r.evaluated;
  r.max_norm_1 = std::max(r.max_norm_1, e.norm_1);
  r.max_norm_inf = std::max(r.max_norm_inf, e.norm_inf);
  if (e.norm_1 > caps.norm_1 * (1 + 1e-12) || e.norm_inf > caps.norm_inf * (1 + 1e-12)) ++r.violations;
  if (e.lhs > r.best.lhs) r.best = {e.lhs, a};
}

inline void grid_points(int n, int depth, std::vector<int>& parts, int remaining, int index,
                        const std::function<void(const std::vector<int>&)>& visit) {
  if (index == n - 1) {
    parts[static_cast<size_t>(index)] = remaining;
    visit(parts);
    return;
  }
  for (int k = 1; k <= remaining - (n - 1 - index); ++k) {
    parts[static_cast<size_t>(index)] = k;
    grid_points(n, depth, parts, remaining - k, index + 1, visit);
  }
}

inline double binomial_double(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Coordinate ascent: move mass between coordinate pairs, halving the step
/// whenever no move improves.
inline Candidate refine(Candidate best, double s, int iterations) {
  std::vector<double> scratch;
  double step = 0.05;
  const size_t n = best.point.size();
  for (int it = 0; it < iterations; ++it) {
    Candidate round_best = best;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        double t = std::min(step, best.point[j] - kSimplexFloor);
        if (t <= 0) continue;
        std::vector<double> trial = best.point;
        trial[i] += t;
        trial[j] -= t;
        double v = fast_dinu(trial, s, scratch).lhs;
        if (v > round_best.lhs) round_best = {v, trial};
      }
    }
    if (round_best.lhs > best.lhs)
      best = std::move(round_best);
    else
      step /= 2;
  }
  return best;
}

}  // namespace detail

/**
 * Searches for a violation of
 *   sum_k (prod_{i != k} a_i)^(1+1/m) <= ((n-1)/(2n)) (1/4)^(1/m)
 * over the open simplex: uniform samples (normalized exponentials, sharded
 * with seeds derived from (seed, shard)), a lattice of the given depth, the
 * centroid and clamped edge midpoints, then local ascent from the best
 * point. The premises ||g||_1 <= (n-1)/(2n) and ||g||_inf <= 1/4 are
 * checked on every evaluated point. A violation is reported, never thrown.
 */
inline GeneralInequalityResult verify_general_inequality(int n, int m_int, long trials, int grid_depth,
                                                         std::uint64_t seed, Bits prec = kDefaultPrecision) {
  if (n < 3) throw std::invalid_argument("verify_general_inequality: n must be >= 3");
  if (m_int < 1) throw std::invalid_argument("verify_general_inequality: m must be >= 1");
  if (trials < 1) throw std::invalid_argument("verify_general_inequality: trials must be >= 1");

  const BigRational s_exact(m_int + 1, m_int);
  const double s = s_exact.get_d();
  const detail::PremiseCaps caps{pairwise_sum_bound(n).get_d(), 0.25};
  using detail::ShardResult;

  std::vector<ShardResult> shards(detail::kSamplingShards);
  {
    std::vector<std::jthread> workers;
    for (int shard = 0; shard < detail::kSamplingShards; ++shard) {
      long begin = trials * shard / detail::kSamplingShards;
      long end = trials * (shard + 1) / detail::kSamplingShards;
      workers.emplace_back([&, shard, begin, end] {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(shard)};
        std::mt19937_64 rng(seq);
        std::exponential_distribution<double> expo(1.0);
        std::vector<double> a(static_cast<size_t>(n));
        std::vector<double> scratch;
        ShardResult& r = shards[static_cast<size_t>(shard)];
        for (long t = begin; t < end; ++t) {
          for (double& v : a) v = expo(rng);
          detail::clamp_and_normalize(a);
          detail::consider(r, a, s, caps, scratch);
        }
      });
    }
  }

  ShardResult merged;
  for (const ShardResult& r : shards) {
    if (r.best.lhs > merged.best.lhs) merged.best = r.best;
    merged.violations += r.violations;
    merged.max_norm_1 = std::max(merged.max_norm_1, r.max_norm_1);
    merged.max_norm_inf = std::max(merged.max_norm_inf, r.max_norm_inf);
    merged.evaluated += r.evaluated;
  }

  // Lattice of points k/depth with positive parts, coarsened to a point budget.
  int depth = grid_depth;
  while (depth >= n && detail::binomial_double(depth - 1, n - 1) > detail::kMaxGridPoints) --depth;
  std::vector<double> scratch;
  if (depth >= n) {
    std::vector<int> parts(static_cast<size_t>(n));
    std::vector<double> a(static_cast<size_t>(n));
    detail::grid_points(n, depth, parts, depth, 0, [&](const std::vector<int>& p) {
      for (size_t i = 0; i < p.size(); ++i) a[i] = static_cast<double>(p[i]) / depth;
      detail::consider(merged, a, s, caps, scratch);
    });
  }

  std::vector<double> centroid(static_cast<size_t>(n), 1.0 / n);
  detail::consider(merged, centroid, s, caps, scratch);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<double> mid(static_cast<size_t>(n), 0.0);
      mid[static_cast<size_t>(i)] = mid[static_cast<size_t>(j)] = 0.5;
      detail::clamp_and_normalize(mid);
      detail::consider(merged, mid, s, caps, scratch);
    }
  }

  detail::Candidate best = detail::refine(merged.best, s, 100);

  GeneralInequalityResult out;
  out.n = n;
  out.m_int = m_int;
  out.trials = trials;
  out.seed = seed;
  out.grid_depth = depth >= n ? depth : 0;
  out.points_evaluated = merged.evaluated;
  out.premise_violations = merged.violations;
  out.max_norm_1 = merged.max_norm_1;
  out.max_norm_inf = merged.max_norm_inf;

  // Re-evaluate the winner and the exact centroid at full precision.
  Real lhs = dinu_lhs(SimplexPoint::normalized(best.point, prec), s_exact);
  Real at_centroid = dinu_lhs(SimplexPoint::centroid(n, prec), s_exact);
  out.argmax = best.point;
  if (at_centroid >= lhs) {
    lhs = at_centroid;
    out.argmax = centroid;
  }
  out.report = make_report(std::move(lhs), general_simplex_bound(n, m_int, prec), prec);

  // On the closed boundary only the coordinate pair survives; for n = 3
  // the limit is (1/4)^s, for n >= 4 every product contains a zero.
  out.boundary_limit = n == 3 ? pow(Real(BigRational(1, 4), prec), Real(s_exact, prec)) : Real(0, prec);
  return out;
}

}  // namespace holder
