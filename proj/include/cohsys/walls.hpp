#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cohsys/arith.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

// Numerical type (n', d', k') of a proper subsystem.
struct SubType {
  long long n_sub = 1;
  long long d_sub = 0;
  long long k_sub = 0;
};

// Candidate critical values of alpha for one system type, sorted and
// deduplicated. upper_cutoff is set when k < n (no alpha-stable systems
// exist at or beyond d/(n-k)); empty means unbounded. The scanned
// subsystem degree window is recorded so callers can audit it.
struct WallSet {
  std::vector<Rational> walls;
  std::optional<Rational> upper_cutoff;
  long long d_sub_min = 0;
  long long d_sub_max = 0;
};

// Exact alpha-slope (d + alpha k)/n. Stability only makes sense for
// alpha > 0, so nonpositive alpha is rejected.
inline Rational alpha_slope(long long n, long long d, long long k,
                            const Rational& alpha) {
  if (n < 1) throw std::domain_error("alpha_slope: requires rank n >= 1");
  if (alpha <= Rational(0))
    throw std::domain_error("alpha_slope: requires alpha > 0");
  return (Rational(d) + alpha * Rational(k)) / Rational(n);
}

// Candidate walls: alpha = (n d' - n' d)/(n' k - n k') solves
// slope(sub) = slope(whole) for a subsystem (n', d', k'). Enumerates
// 1 <= n' < n, 0 <= k' <= k, 0 <= d' <= d and keeps positive values
// below the cutoff (when one applies).
inline WallSet wall_candidates(long long n, long long d, long long k) {
  if (n < 2) throw std::domain_error("wall_candidates: requires rank n >= 2");
  if (d <= 0) throw std::domain_error("wall_candidates: requires d > 0");
  if (k < 0) throw std::domain_error("wall_candidates: requires k >= 0");
  WallSet ws;
  ws.d_sub_min = 0;
  ws.d_sub_max = d;
  if (k < n) ws.upper_cutoff = Rational(d, n - k);
  std::vector<Rational> acc;
  for (long long n_sub = 1; n_sub <= n - 1; ++n_sub) {
    for (long long k_sub = 0; k_sub <= k; ++k_sub) {
      long long den = n_sub * k - n * k_sub;
      if (den == 0) continue;  // slopes shift in lockstep, no crossing
      for (long long d_sub = 0; d_sub <= d; ++d_sub) {
        Rational alpha(n * d_sub - n_sub * d, den);
        if (alpha <= Rational(0)) continue;
        if (ws.upper_cutoff && alpha >= *ws.upper_cutoff) continue;
        acc.push_back(alpha);
      }
    }
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  ws.walls = std::move(acc);
  return ws;
}

// Section-density test k'/n' <= k/n for a subsystem, by exact
// cross-multiplication.
inline bool subsystem_ratio_ok(long long n, long long k, long long n_sub,
                               long long k_sub) {
  if (n_sub <= 0 || n_sub >= n)
    throw std::domain_error("subsystem_ratio_ok: sub-rank out of (0, n)");
  return k_sub * n <= k * n_sub;
}

// k within the Clifford bound for (g, n, d).
inline bool clifford_feasible(long long g, long long n, long long d,
                              long long k) {
  return k <= clifford_max_k(g, n, d);
}

}  // namespace cohsys
