#pragma once

#include <optional>
#include <stdexcept>

namespace cohsys {

// Mathematical remainder in [0, m). m must be positive.
inline long long mod_floor(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

// Numerical type (g; n, d, k) of a coherent system on a genus-g curve:
// rank n, degree d, k-dimensional space of sections. Bundles themselves are
// never materialized; everything downstream is arithmetic on these four
// integers.
struct SystemType {
  long long g = 2;  // genus of the base curve
  long long n = 1;  // rank
  long long d = 0;  // degree
  long long k = 0;  // dimension of the section space

  // Critical section count d + n(1-g): above it the generic bundle has no
  // extra sections.
  long long k0() const { return d + n * (1 - g); }

  void validate() const {
    if (g < 2) throw std::domain_error("SystemType: genus must be >= 2");
    if (n < 1) throw std::domain_error("SystemType: rank must be >= 1");
    if (k < 0) throw std::domain_error("SystemType: section count must be >= 0");
  }
};

// One stratum of the moduli space cut out by a Segre invariant value:
// rank-m subbundles realise slope defect s. dim is empty when no stable
// bundle attains (m, s).
struct SegreStratum {
  long long m = 1;
  long long s = 0;
  std::optional<long long> dim;
};

// 1 when d = g-1 (mod n), 0 otherwise. A value of 1 drops the top
// stability level a = g-1 out of reach.
inline long long epsilon_correction(long long g, long long n, long long d) {
  if (g < 2) throw std::domain_error("epsilon_correction: genus must be >= 2");
  if (n < 1) throw std::domain_error("epsilon_correction: rank must be >= 1");
  return mod_floor(d - (g - 1), n) == 0 ? 1 : 0;
}

// Expected dimension n^2(g-1) + 1 - k(k - d + n(g-1)) of the locus of
// stable bundles with at least k independent sections.
inline long long brill_noether_number(long long g, long long n, long long d,
                                      long long k) {
  if (g < 2) throw std::domain_error("brill_noether_number: genus must be >= 2");
  if (n < 1) throw std::domain_error("brill_noether_number: rank must be >= 1");
  if (k < 0) throw std::domain_error("brill_noether_number: requires k >= 0");
  return n * n * (g - 1) + 1 - k * (k - d + n * (g - 1));
}

// Largest section count an alpha-semistable system of type (n, d) can
// carry: d + n(1-g) in large degree (d >= 2gn), floor(d/2) + n below.
inline long long clifford_max_k(long long g, long long n, long long d) {
  if (d <= 0) throw std::domain_error("clifford_max_k: requires d > 0");
  if (g < 2) throw std::domain_error("clifford_max_k: genus must be >= 2");
  if (n < 1) throw std::domain_error("clifford_max_k: rank must be >= 1");
  if (d >= 2 * g * n) return d + n * (1 - g);
  return d / 2 + n;  // d > 0, so truncation is the floor
}

// Slack d - 2(k - n) of the small-degree section bound.
inline long long lambda_gap(long long n, long long d, long long k) {
  return d - 2 * (k - n);
}

// The unique residue delta in [0, n-1] with
// r(n-r)(g-1) + delta = r d (mod n), for a proper subbundle rank r.
inline long long congruence_delta(long long g, long long n, long long d,
                                  long long r) {
  if (r < 1 || r > n - 1)
    throw std::domain_error("congruence_delta: rank r must lie in [1, n-1]");
  return mod_floor(r * d - r * (n - r) * (g - 1), n);
}

// Correction term for the rank-3 bound: +1, -1 or 0 by the class of
// d - a mod 3.
inline long long mod3_correction(long long d, long long a) {
  switch (mod_floor(d - a, 3)) {
    case 0: return 1;
    case 1: return -1;
    default: return 0;
  }
}

// Correction term for the rank-2 bound: 2 when a and d share parity,
// 3 otherwise.
inline long long parity_correction(long long d, long long a) {
  return mod_floor(d - a, 2) == 0 ? 2 : 3;
}

// Largest s <= m*a with s = m*d (mod n). The congruence class is
// unbounded below, so the value exists for every a; it may be <= 0.
inline long long max_segre_value(long long n, long long d, long long a,
                                 long long m) {
  if (m < 1 || m > n - 1)
    throw std::domain_error("max_segre_value: sub-rank m must lie in [1, n-1]");
  long long cap = m * a;
  return cap - mod_floor(cap - m * d, n);
}

// min over m = 1..n-1 of m(n-m)(g-1) - max_segre_value(n, d, a, m).
// Measures how far the worst Segre stratum below level a sits under its
// dimension cap.
inline long long min_segre_gap(long long g, long long n, long long d,
                               long long a) {
  if (n < 2) throw std::domain_error("min_segre_gap: requires rank n >= 2");
  long long best = 0;
  bool first = true;
  for (long long m = 1; m <= n - 1; ++m) {
    long long gap = m * (n - m) * (g - 1) - max_segre_value(n, d, a, m);
    if (first || gap < best) {
      best = gap;
      first = false;
    }
  }
  return best;
}

// Dimension n^2(g-1) + 1 + s - m(n-m)(g-1) of the stratum of stable
// bundles whose rank-m Segre invariant equals s, or empty when the
// stratum is (0 < s <= m(n-m)(g-1) fails or s != m d mod n).
inline std::optional<long long> segre_stratum_dim(long long g, long long n,
                                                  long long d, long long m,
                                                  long long s) {
  if (m < 1 || m > n - 1)
    throw std::domain_error("segre_stratum_dim: sub-rank m must lie in [1, n-1]");
  long long cap = m * (n - m) * (g - 1);
  if (s <= 0 || s > cap) return std::nullopt;
  if (mod_floor(s - m * d, n) != 0) return std::nullopt;
  return n * n * (g - 1) + 1 + s - cap;
}

// Dimension of the locus of stable bundles that are NOT (0, a)-stable:
// n^2(g-1) + 1 - min_segre_gap. Refuses a outside [0, g-1-eps] rather
// than extrapolating.
//
// Ranks 2 and 3 report the closed form of the top sub-rank stratum,
// 3g + a - delta and 7(g-1) + 1 + s2. It equals the stratum minimum
// everywhere except rank 3 at a = 0 with d = 2 mod 3, where every
// stratum of the complement is empty and the two formal values cross;
// the closed form is kept there.
inline long long unstable_locus_dim(long long g, long long n, long long d,
                                    long long a) {
  long long a_cap = g - 1 - epsilon_correction(g, n, d);
  if (a < 0 || a > a_cap)
    throw std::domain_error("unstable_locus_dim: level a out of range");
  if (n == 2 || n == 3)
    return n * n * (g - 1) + 1 - (n - 1) * (g - 1) +
           max_segre_value(n, d, a, n - 1);
  return n * n * (g - 1) + 1 - min_segre_gap(g, n, d, a);
}

// Dimension of the fibre of the forgetful map over the stratum of bundles
// with section_excess extra sections above k0, with c the codimension of
// that stratum in the moduli space.
inline long long forgetful_fiber_dim(long long g, long long n, long long d,
                                     long long k, long long section_excess,
                                     long long c) {
  if (d < n * (g - 1))
    throw std::domain_error("forgetful_fiber_dim: requires d >= n(g-1)");
  long long excess_cap = n * g - (d + 1) / 2;  // n g - ceil(d/2)
  if (section_excess < 0 || section_excess > excess_cap)
    throw std::domain_error("forgetful_fiber_dim: section excess out of range");
  long long k0 = d + n * (1 - g);
  if (k < 0 || k > k0 + section_excess)
    throw std::domain_error("forgetful_fiber_dim: k out of range");
  if (c < 0) throw std::domain_error("forgetful_fiber_dim: requires c >= 0");
  return brill_noether_number(g, n, d, k) + k * section_excess - c;
}

// dim of the bundle of s-planes in a rank-k vector bundle over a base of
// the given dimension.
inline long long grassmann_bundle_dim(long long base_dim, long long s,
                                      long long k) {
  if (base_dim < 0)
    throw std::domain_error("grassmann_bundle_dim: base dimension must be >= 0");
  if (s < 0 || s > k)
    throw std::domain_error("grassmann_bundle_dim: plane dimension out of [0, k]");
  return base_dim + s * (k - s);
}

}  // namespace cohsys
