#pragma once

// Closed-form distance values: the reversal cost j(j-1)-1, the piecewise
// two-phase total for dist(s*r^(n-i), ()), its unsimplified min-of-four form,
// and the diameter lower bound n(n-1)/2.

#include <algorithm>
#include <cstdint>
#include <string>

#include "lrx/error.hpp"
#include "lrx/order.hpp"

namespace lrx {

enum class TheoremCaseTag { i_eq_1, mid, high };

inline const char* theorem_case_name(TheoremCaseTag t) {
  switch (t) {
    case TheoremCaseTag::i_eq_1: return "I_EQ_1";
    case TheoremCaseTag::mid: return "MID";
    case TheoremCaseTag::high: return "HIGH";
  }
  return "?";
}

struct TheoremCase {
  int n = 0;
  int i = 0;
  TheoremCaseTag tag = TheoremCaseTag::mid;
  std::int64_t value = 0;
};

namespace detail {
inline int floor_half(int n) { return n / 2; }
inline int ceil_half(int n) { return (n + 1) / 2; }

inline void check_theorem_args(int n, int i, const char* who) {
  if (n < 4)
    throw invalid_argument(std::string(who) + ": degree " + std::to_string(n) +
                           " below minimum 4");
  if (i < 1 || i > n)
    throw invalid_argument(std::string(who) + ": shift index " + std::to_string(i) +
                           " out of range 1.." + std::to_string(n));
}

// Rotation exponents reached after the two reversal phases, before the
// shift tail, one per branch choice of m.
inline int residual_ceil(int n) {
  return (ceil_half(floor_half(n)) - 1) + (floor_half(ceil_half(n)) - 1);
}
inline int residual_floor(int n) {
  return (floor_half(floor_half(n)) - 1) + (ceil_half(ceil_half(n)) - 1);
}
}  // namespace detail

// j(j-1)-1 for a length-j prefix reversal, valid for 2 <= j <= ceil(n/2), n >= 3.
inline std::int64_t lemma_value(int n, int j) {
  if (n < 3)
    throw invalid_argument("lemma_value: degree " + std::to_string(n) + " below minimum 3");
  if (j < 2 || j > detail::ceil_half(n))
    throw invalid_argument("lemma_value: reversal length " + std::to_string(j) +
                           " out of range 2..ceil(n/2) for n=" + std::to_string(n));
  return static_cast<std::int64_t>(j) * (j - 1) - 1;
}

// Piecewise total for dist(s*r^(n-i), ()).  The MID and HIGH ranges overlap
// at i = n/2 + 2 for even n; both evaluate equal there and MID is reported.
inline TheoremCase theorem_value(int n, int i) {
  detail::check_theorem_args(n, i, "theorem_value");
  const int fh = detail::floor_half(n);
  const int ch = detail::ceil_half(n);
  const std::int64_t base = static_cast<std::int64_t>(ch) * (ch - 1) - 1 +
                            static_cast<std::int64_t>(fh) * (fh - 1) - 1;
  TheoremCase out;
  out.n = n;
  out.i = i;
  if (i == 1) {
    out.tag = TheoremCaseTag::i_eq_1;
    out.value = base + fh + 1;
  } else if (i <= fh + 2) {
    out.tag = TheoremCaseTag::mid;
    out.value = base + fh - i + 4;
  } else {
    out.tag = TheoremCaseTag::high;
    out.value = base + i - ch;
  }
  return out;
}

// The proof's displayed total: base + 2 + min over the four absolute-value
// arguments, each normalized mod n the way the Lee metric requires.  Reading
// them as plain absolute values breaks the equality with theorem_value.
inline std::int64_t theorem_value_unsimplified(int n, int i) {
  detail::check_theorem_args(n, i, "theorem_value_unsimplified");
  const int fh = detail::floor_half(n);
  const int ch = detail::ceil_half(n);
  const std::int64_t base = static_cast<std::int64_t>(ch) * (ch - 1) - 1 +
                            static_cast<std::int64_t>(fh) * (fh - 1) - 1;
  const long long a = detail::residual_ceil(n) - n + i;
  const long long b = detail::residual_floor(n) - n + i;
  auto norm = [&](long long x) {
    long long m = x % n;
    if (m < 0) m += n;
    return m;
  };
  const long long four[4] = {norm(a), norm(-a), norm(b), norm(-b)};
  return base + 2 + *std::min_element(four, four + 4);
}

// Theorem 2: diameter lower bound n(n-1)/2, attained at i = 2.
inline std::int64_t lower_bound(int n) {
  if (n < 4)
    throw invalid_argument("lower_bound: degree " + std::to_string(n) + " below minimum 4");
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

}  // namespace lrx
