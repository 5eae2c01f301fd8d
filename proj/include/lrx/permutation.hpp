#pragma once

// Permutations of {1..n} in one-line notation and the three Cayley-graph
// generators: X = the transposition (12), L = the left cyclic shift
// r = [2 3 ... n 1], R = its inverse.  Generators act by right
// multiplication, so on the one-line word X swaps the first two entries,
// L rotates the word left by one and R rotates it right by one.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "lrx/error.hpp"

namespace lrx {

inline constexpr int kMaxDegree = 64;

enum class Generator : std::uint8_t { X = 0, L = 1, R = 2 };

inline constexpr std::array<Generator, 3> kAllGenerators{Generator::X, Generator::L,
                                                         Generator::R};

inline char generator_char(Generator g) {
  switch (g) {
    case Generator::X: return 'X';
    case Generator::L: return 'L';
    case Generator::R: return 'R';
  }
  return '?';
}

inline Generator generator_from_char(char c) {
  switch (c) {
    case 'X': return Generator::X;
    case 'L': return Generator::L;
    case 'R': return Generator::R;
  }
  throw invalid_argument(std::string("unknown generator token: ") + c);
}

inline Generator generator_inverse(Generator g) {
  switch (g) {
    case Generator::X: return Generator::X;
    case Generator::L: return Generator::R;
    case Generator::R: return Generator::L;
  }
  return g;
}

class Permutation;
Permutation apply_generator(const Permutation& pi, Generator g);
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
Permutation rotate(const Permutation& pi, int k);
Permutation reversal(const Permutation& pi, int i, int j);

// One-line permutation word over {1..n}, n <= 64.  Positions are 1-based in
// the public interface.  Immutable value type; entries beyond the degree stay
// zero so default comparison orders by degree, then lexicographically.
class Permutation {
 public:
  Permutation() { word_[0] = 1; }

  static Permutation identity(int n) {
    check_degree(n);
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.word_[i] = static_cast<std::uint8_t>(i + 1);
    return p;
  }

  static Permutation from_word(std::span<const int> word) {
    check_degree(static_cast<int>(word.size()));
    const int n = static_cast<int>(word.size());
    std::uint64_t seen = 0;
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) {
      const int v = word[i];
      if (v < 1 || v > n)
        throw invalid_argument("one-line word entry " + std::to_string(v) +
                               " out of range 1.." + std::to_string(n));
      const std::uint64_t bit = 1ull << (v - 1);
      if (seen & bit)
        throw invalid_argument("one-line word repeats value " + std::to_string(v));
      seen |= bit;
      p.word_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  static Permutation from_word(std::initializer_list<int> word) {
    return from_word(std::span<const int>(word.begin(), word.size()));
  }

  int degree() const { return n_; }

  // Value at 1-based position pos.
  int at(int pos) const {
    if (pos < 1 || pos > n_)
      throw invalid_argument("position " + std::to_string(pos) + " out of range 1.." +
                             std::to_string(n_));
    return word_[pos - 1];
  }

  // 1-based position holding `value`.
  int position_of(int value) const {
    if (value < 1 || value > n_)
      throw invalid_argument("value " + std::to_string(value) + " out of range 1.." +
                             std::to_string(n_));
    for (int i = 0; i < n_; ++i)
      if (word_[i] == value) return i + 1;
    return 0;  // unreachable for a valid word
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (word_[i] != i + 1) return false;
    return true;
  }

  std::span<const std::uint8_t> word() const {
    return {word_.data(), static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  static void check_degree(int n) {
    if (n < 1 || n > kMaxDegree)
      throw invalid_argument("degree " + std::to_string(n) + " out of range 1.." +
                             std::to_string(kMaxDegree));
  }

  // Unvalidated slot for internal builders.
  static Permutation raw(int n) {
    check_degree(n);
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    p.word_[0] = 0;
    return p;
  }

  friend Permutation apply_generator(const Permutation& pi, Generator g);
  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation inverse(const Permutation& a);
  friend Permutation rotate(const Permutation& pi, int k);
  friend Permutation reversal(const Permutation& pi, int i, int j);

  std::uint8_t n_ = 1;
  std::array<std::uint8_t, kMaxDegree> word_{};
};

inline Permutation identity(int n) { return Permutation::identity(n); }

// s = [n n-1 ... 1], the full reversal of the identity.
inline Permutation reversed_identity(int n) {
  std::array<int, kMaxDegree> buf{};
  if (n < 1 || n > kMaxDegree)
    throw invalid_argument("degree " + std::to_string(n) + " out of range 1.." +
                           std::to_string(kMaxDegree));
  for (int i = 0; i < n; ++i) buf[i] = n - i;
  return Permutation::from_word(std::span<const int>(buf.data(), static_cast<std::size_t>(n)));
}

inline Permutation apply_generator(const Permutation& pi, Generator g) {
  const int n = pi.degree();
  if (g == Generator::X && n < 2)
    throw invalid_argument("generator X needs degree >= 2");
  Permutation out = pi;
  switch (g) {
    case Generator::X:
      std::swap(out.word_[0], out.word_[1]);
      break;
    case Generator::L: {
      const std::uint8_t head = out.word_[0];
      for (int i = 0; i + 1 < n; ++i) out.word_[i] = out.word_[i + 1];
      out.word_[n - 1] = head;
      break;
    }
    case Generator::R: {
      const std::uint8_t tail = out.word_[n - 1];
      for (int i = n - 1; i > 0; --i) out.word_[i] = out.word_[i - 1];
      out.word_[0] = tail;
      break;
    }
  }
  return out;
}

// (a*b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw invalid_argument("compose: degree mismatch " + std::to_string(a.degree()) +
                           " vs " + std::to_string(b.degree()));
  const int n = a.degree();
  Permutation out = Permutation::raw(n);
  for (int i = 0; i < n; ++i) out.word_[i] = a.word_[b.word_[i] - 1];
  return out;
}

inline Permutation inverse(const Permutation& a) {
  const int n = a.degree();
  Permutation out = Permutation::raw(n);
  for (int i = 0; i < n; ++i) out.word_[a.word_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return out;
}

// pi * r^k; k is reduced mod n, so rotate(pi, -1) right-rotates once.
inline Permutation rotate(const Permutation& pi, int k) {
  const int n = pi.degree();
  int s = k % n;
  if (s < 0) s += n;
  if (s == 0) return pi;
  Permutation out = Permutation::raw(n);
  for (int i = 0; i < n; ++i) out.word_[i] = pi.word_[(i + s) % n];
  return out;
}

// Reverses the segment at positions i..j (1-based, i < j); everything else fixed.
inline Permutation reversal(const Permutation& pi, int i, int j) {
  const int n = pi.degree();
  if (i < 1 || j > n || i >= j)
    throw invalid_argument("reversal: need 1 <= i < j <= n, got i=" + std::to_string(i) +
                           " j=" + std::to_string(j) + " n=" + std::to_string(n));
  Permutation out = pi;
  for (int lo = i - 1, hi = j - 1; lo < hi; ++lo, --hi)
    std::swap(out.word_[lo], out.word_[hi]);
  return out;
}

// k with xi = pi * r^k, if any rotation matches.  Unique when it exists.
inline std::optional<int> rotation_offset(const Permutation& pi, const Permutation& xi) {
  if (pi.degree() != xi.degree())
    throw invalid_argument("rotation_offset: degree mismatch");
  const int n = pi.degree();
  const int k = pi.position_of(xi.at(1)) - 1;
  for (int i = 0; i < n; ++i)
    if (xi.word()[i] != pi.word()[(i + k) % n]) return std::nullopt;
  return k;
}

// 0 for even permutations, 1 for odd; computed from the cycle structure.
inline int parity(const Permutation& pi) {
  const int n = pi.degree();
  std::uint64_t visited = 0;
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (visited & (1ull << i)) continue;
    int len = 0;
    int j = i;
    while (!(visited & (1ull << j))) {
      visited |= 1ull << j;
      j = pi.word()[j] - 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions & 1;
}

// Text form: space-separated one-line word, e.g. "2 1 4 3".  Parsers also
// accept the shorthands "id", "s", "r^k" and "s*r^k" (k any integer, reduced
// mod n).
std::string to_text(const Permutation& pi);
Permutation parse_permutation(std::string_view text, int n);

inline std::string to_text(const Permutation& pi) {
  std::string out;
  for (int i = 1; i <= pi.degree(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(pi.at(i));
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
    if (pos == s.size()) return false;
  }
  long long v = 0;
  for (; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9') return false;
    v = v * 10 + (s[pos] - '0');
    if (v > (1ll << 40)) return false;  // plenty for any exponent or entry
  }
  out = neg ? -v : v;
  return true;
}

}  // namespace detail

inline Permutation parse_permutation(std::string_view text, int n) {
  using detail::parse_int;
  std::string_view s = detail::trim(text);
  if (s == "id") return identity(n);
  if (s == "s") return reversed_identity(n);
  auto parse_shift = [&](std::string_view body) -> int {
    long long k = 0;
    if (!parse_int(body, k))
      throw invalid_argument("bad rotation exponent in permutation text: '" +
                             std::string(text) + "'");
    long long m = k % n;
    if (m < 0) m += n;
    return static_cast<int>(m);
  };
  if (s.rfind("r^", 0) == 0) return rotate(identity(n), parse_shift(s.substr(2)));
  if (s.rfind("s*r^", 0) == 0) return rotate(reversed_identity(n), parse_shift(s.substr(4)));

  std::array<int, kMaxDegree> buf{};
  int count = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    long long v = 0;
    if (!parse_int(s.substr(i, j - i), v))
      throw invalid_argument("bad permutation entry '" + std::string(s.substr(i, j - i)) +
                             "'");
    if (count >= n)
      throw invalid_argument("permutation text has more than " + std::to_string(n) +
                             " entries");
    buf[count++] = static_cast<int>(v);
    i = j;
  }
  if (count != n)
    throw invalid_argument("permutation text has " + std::to_string(count) +
                           " entries, expected " + std::to_string(n));
  return Permutation::from_word(std::span<const int>(buf.data(), static_cast<std::size_t>(n)));
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& pi) {
  return os << '[' << to_text(pi) << ']';
}

}  // namespace lrx
