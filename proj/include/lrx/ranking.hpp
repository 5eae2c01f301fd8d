#pragma once

// Lexicographic rank/unrank between S_n and 0..n!-1 (Lehmer code / factorial
// number system).  Restricted to n <= 20 so n! fits in 64 bits.  The raw
// kernels below run on byte words without constructing Permutation values;
// the search engine uses them on its hot path.

#include <array>
#include <cstdint>
#include <bit>
#include <string>

#include "lrx/error.hpp"
#include "lrx/permutation.hpp"

namespace lrx {

inline constexpr int kMaxRankDegree = 20;

inline std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankDegree)
    throw invalid_argument("factorial argument " + std::to_string(n) + " out of range 0.." +
                           std::to_string(kMaxRankDegree));
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

namespace detail {

inline constexpr std::array<std::uint64_t, kMaxRankDegree + 1> kFactorial = [] {
  std::array<std::uint64_t, kMaxRankDegree + 1> t{};
  t[0] = 1;
  for (int i = 1; i <= kMaxRankDegree; ++i) t[i] = t[i - 1] * static_cast<std::uint64_t>(i);
  return t;
}();

// Lexicographic rank of a one-line byte word (values 1..n, n <= 20).
inline std::uint64_t rank_word(const std::uint8_t* w, int n) {
  std::uint64_t used = 0;
  std::uint64_t r = 0;
  for (int p = 0; p < n; ++p) {
    const unsigned v = w[p];
    const std::uint64_t below = (1ull << (v - 1)) - 1;
    const unsigned smaller_used =
        static_cast<unsigned>(std::popcount(used & below));
    r += static_cast<std::uint64_t>(v - 1 - smaller_used) * kFactorial[n - 1 - p];
    used |= 1ull << (v - 1);
  }
  return r;
}

inline void unrank_word(std::uint64_t idx, int n, std::uint8_t* out) {
  std::uint64_t avail = (n >= 64) ? ~0ull : ((1ull << n) - 1);
  for (int p = 0; p < n; ++p) {
    const std::uint64_t f = kFactorial[n - 1 - p];
    std::uint64_t d = idx / f;
    idx %= f;
    std::uint64_t m = avail;
    while (d--) m &= m - 1;  // drop the d lowest set bits
    const unsigned bit = static_cast<unsigned>(std::countr_zero(m));
    out[p] = static_cast<std::uint8_t>(bit + 1);
    avail &= ~(1ull << bit);
  }
}

}  // namespace detail

inline std::uint64_t rank(const Permutation& pi) {
  if (pi.degree() > kMaxRankDegree)
    throw invalid_argument("rank: degree " + std::to_string(pi.degree()) +
                           " exceeds cap " + std::to_string(kMaxRankDegree));
  return detail::rank_word(pi.word().data(), pi.degree());
}

inline Permutation unrank(int n, std::uint64_t idx) {
  if (n < 1 || n > kMaxRankDegree)
    throw invalid_argument("unrank: degree " + std::to_string(n) + " out of range 1.." +
                           std::to_string(kMaxRankDegree));
  const std::uint64_t total = factorial(n);
  if (idx >= total)
    throw invalid_argument("unrank: index " + std::to_string(idx) + " out of range 0.." +
                           std::to_string(total - 1));
  std::array<std::uint8_t, kMaxRankDegree> buf{};
  detail::unrank_word(idx, n, buf.data());
  std::array<int, kMaxRankDegree> ints{};
  for (int i = 0; i < n; ++i) ints[i] = buf[i];
  return Permutation::from_word(std::span<const int>(ints.data(), static_cast<std::size_t>(n)));
}

}  // namespace lrx
