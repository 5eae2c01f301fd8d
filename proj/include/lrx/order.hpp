#pragma once

// Cyclic-order predicates on positions, the induced linear orders, the Lee
// metric on rotation orbits, and inversion counting against a reference value.

#include <cstdint>
#include <string>

#include "lrx/error.hpp"
#include "lrx/permutation.hpp"

namespace lrx {

// Circular distance min(d, n-d) on Z_n with d = (i - j) mod n.  Equals the
// graph distance between pi*r^i and pi*r^j on a rotation orbit.  Note the
// difference is normalized mod n first; a plain absolute value would
// overestimate for wrapped differences (e.g. n=10, i=2, j=9 gives 3, not 7).
inline int lee_distance(int n, long long i, long long j) {
  if (n < 1) throw invalid_argument("lee_distance: degree must be >= 1");
  long long d = (i - j) % n;
  if (d < 0) d += n;
  return static_cast<int>(d < n - d ? d : n - d);
}

namespace detail {

inline void check_positions_distinct(const Permutation& pi, int a, int b, int c) {
  const int n = pi.degree();
  auto check = [&](int p) {
    if (p < 1 || p > n)
      throw invalid_argument("position " + std::to_string(p) + " out of range 1.." +
                             std::to_string(n));
  };
  check(a);
  check(b);
  check(c);
  if (a == b || b == c || a == c)
    throw invalid_argument("positions must be pairwise distinct");
}

}  // namespace detail

// True iff positions (a, b, c) satisfy one of the chains a<b<c, b<c<a, c<a<b.
inline bool in_cyclic_order(const Permutation& pi, int a, int b, int c) {
  detail::check_positions_distinct(pi, a, b, c);
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

// Linear order on positions != z induced by the cut point z:
// a <_z b iff (z, a, b) are in cyclic order.
inline bool less_z(const Permutation& pi, int z, int a, int b) {
  return in_cyclic_order(pi, z, a, b);
}

// Counts pairs lo <= p < q <= hi whose values are out of order under the
// linear order cut at the reference value z: u precedes v iff
// (u - z) mod n < (v - z) mod n.  The reference is a value, not a position,
// so the count is stable under rotations of pi.  z must not occur inside the
// window.
inline long long window_inversions(const Permutation& pi, int z, int lo, int hi) {
  const int n = pi.degree();
  if (z < 1 || z > n)
    throw invalid_argument("reference value " + std::to_string(z) + " out of range 1.." +
                           std::to_string(n));
  if (lo < 1 || hi > n || lo > hi)
    throw invalid_argument("window " + std::to_string(lo) + ".." + std::to_string(hi) +
                           " invalid for degree " + std::to_string(n));
  auto key = [&](int v) { return ((v - z) % n + n) % n; };
  for (int p = lo; p <= hi; ++p)
    if (pi.at(p) == z)
      throw invalid_argument("reference value " + std::to_string(z) +
                             " occurs inside the window");
  long long count = 0;
  for (int p = lo; p <= hi; ++p)
    for (int q = p + 1; q <= hi; ++q)
      if (key(pi.at(p)) >= key(pi.at(q))) ++count;
  return count;
}

}  // namespace lrx
