#pragma once

// Constructive generator words.
//
// Decomposition A swaps the values at positions k and l (k < l) of a
// permutation presented at rotation frame r^(k-1):
//     (X L)^(l-k-1) X (R X)^(l-k-1)
// Each X L peels the element between the pair off to the back, the middle X
// performs the swap, and each R X pulls one element back with a corrective
// swap.  Decomposition B is the mirror image and works at frame r^(l-2):
//     (X R)^(l-k-1) X (L X)^(l-k-1)
// Both have length 4(l-k-1)+1 and return to the rotation frame they started
// at, which is what lets a chain of them run with a single shift between
// consecutive pairs.
//
// A prefix reversal of length j is floor(j/2) pair swaps.  The four lemma
// variants are the four shift schedules:
//   I   - A-chain, outermost pair first, one L between pairs
//   II  - B-chain, outermost pair first, one R between pairs
//   III - A-chain, innermost pair first, one R between pairs
//   IV  - B-chain, innermost pair first, one L between pairs
// All have length j(j-1)-1 and differ only in the rotation frames they
// assume at entry and leave behind.
//
// The theorem word for s*r^(n-i) runs one variant on the first floor(n/2)
// entries, shifts twice, runs the complementary variant on the remaining
// ceil(n/2) entries, and walks the leftover rotation home along the shorter
// direction.  Every builder validates its output by application before
// returning; a failure throws construction_error and is always a bug.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lrx/error.hpp"
#include "lrx/formulas.hpp"
#include "lrx/gen_word.hpp"
#include "lrx/order.hpp"
#include "lrx/permutation.hpp"

namespace lrx {

// Words are Theta(n^2) tokens; past this degree only the closed forms apply.
inline constexpr int kMaxBuilderDegree = 10000;

enum class LemmaVariant { i, ii, iii, iv };

inline const char* lemma_variant_name(LemmaVariant v) {
  switch (v) {
    case LemmaVariant::i: return "I";
    case LemmaVariant::ii: return "II";
    case LemmaVariant::iii: return "III";
    case LemmaVariant::iv: return "IV";
  }
  return "?";
}

struct LemmaWord {
  GenWord word;
  // For any pi: apply_word(rotate(pi, start_rotation), word)
  //           = rotate(reversal(pi, 1, j), end_rotation).
  int start_rotation = 0;
  int end_rotation = 0;
};

enum class TheoremBranch { ceil_branch, floor_branch };

inline const char* theorem_branch_name(TheoremBranch b) {
  return b == TheoremBranch::ceil_branch ? "CEIL_BRANCH" : "FLOOR_BRANCH";
}

struct ReversalPlan {
  int n = 0;
  int j1 = 0;  // length of the first reversed block, floor(n/2)
  int j2 = 0;  // length of the second block, ceil(n/2)
  int m = 0;   // rotation parameter of the chosen branch
  TheoremBranch branch = TheoremBranch::ceil_branch;
  std::int64_t predicted_length = 0;
  int residual_rotation = 0;  // exponent c of r reached before the shift tail
};

struct TheoremWord {
  GenWord word;
  ReversalPlan plan;
};

enum class PairScheme { a, b };

namespace detail {

// Word image on a raw one-line vector, with rotations tracked as an offset so
// long shift runs stay O(1) per token.  Degree may exceed the Permutation cap.
inline std::vector<std::uint16_t> word_image(std::vector<std::uint16_t> w,
                                             const std::vector<Generator>& tokens) {
  const std::size_t n = w.size();
  std::size_t off = 0;
  auto at = [&](std::size_t i) -> std::uint16_t& { return w[(off + i) % n]; };
  for (Generator g : tokens) {
    switch (g) {
      case Generator::X: {
        std::uint16_t& a = at(0);
        std::uint16_t& b = at(1);
        std::swap(a, b);
        break;
      }
      case Generator::L:
        off = (off + 1) % n;
        break;
      case Generator::R:
        off = (off + n - 1) % n;
        break;
    }
  }
  std::vector<std::uint16_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = w[(off + i) % n];
  return out;
}

inline std::vector<std::uint16_t> ascending_word(int n) {
  std::vector<std::uint16_t> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), std::uint16_t{1});
  return w;
}

// s * r^k as a raw word.
inline std::vector<std::uint16_t> descending_rotated_word(int n, int k) {
  std::vector<std::uint16_t> w(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p)
    w[p] = static_cast<std::uint16_t>(n - (p + k) % n);
  return w;
}

inline std::vector<std::uint16_t> rotated(const std::vector<std::uint16_t>& w, int k) {
  const int n = static_cast<int>(w.size());
  int s = k % n;
  if (s < 0) s += n;
  std::vector<std::uint16_t> out(w.size());
  for (int i = 0; i < n; ++i) out[i] = w[(i + s) % n];
  return out;
}

inline std::vector<std::uint16_t> reversed_prefix(std::vector<std::uint16_t> w, int j) {
  std::reverse(w.begin(), w.begin() + j);
  return w;
}

// Deterministic shuffle for self-validation bases (fixed per-call seed; no
// dependence on library distribution internals).
inline std::vector<std::uint16_t> shuffled_word(int n, std::uint64_t seed) {
  std::vector<std::uint16_t> w = ascending_word(n);
  std::uint64_t s = seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull;
  auto next = [&]() {
    s ^= s >> 27;
    s *= 0x3C79AC492BA7B653ull;
    s ^= s >> 33;
    return s;
  };
  for (int i = n - 1; i > 0; --i)
    std::swap(w[i], w[next() % static_cast<std::uint64_t>(i + 1)]);
  return w;
}

// If w is the ascending word rotated left by d, returns d; otherwise -1.
inline int ascending_rotation_of(const std::vector<std::uint16_t>& w) {
  const int n = static_cast<int>(w.size());
  int p0 = -1;
  for (int p = 0; p < n; ++p)
    if (w[p] == 1) {
      p0 = p;
      break;
    }
  if (p0 < 0) return -1;
  const int d = (n - p0) % n;
  for (int p = 0; p < n; ++p)
    if (w[p] != (d + p) % n + 1) return -1;
  return d;
}

inline void check_pair(int n, int k, int l, const char* who) {
  if (n < 2 || n > kMaxBuilderDegree)
    throw invalid_argument(std::string(who) + ": degree " + std::to_string(n) +
                           " out of range 2.." + std::to_string(kMaxBuilderDegree));
  if (k < 1 || l > n || k >= l)
    throw invalid_argument(std::string(who) + ": need 1 <= k < l <= n, got k=" +
                           std::to_string(k) + " l=" + std::to_string(l) +
                           " n=" + std::to_string(n));
}

inline void append_pair_swap(std::vector<Generator>& toks, int k, int l, PairScheme scheme) {
  const int gap = l - k - 1;
  const Generator out = scheme == PairScheme::a ? Generator::L : Generator::R;
  const Generator back = scheme == PairScheme::a ? Generator::R : Generator::L;
  for (int t = 0; t < gap; ++t) {
    toks.push_back(Generator::X);
    toks.push_back(out);
  }
  toks.push_back(Generator::X);
  for (int t = 0; t < gap; ++t) {
    toks.push_back(back);
    toks.push_back(Generator::X);
  }
}

}  // namespace detail

inline GenWord decomposition_a(int n, int k, int l) {
  detail::check_pair(n, k, l, "decomposition_a");
  if (n < 3) throw invalid_argument("decomposition_a: degree must be >= 3");
  GenWord w;
  w.degree = n;
  detail::append_pair_swap(w.tokens, k, l, PairScheme::a);
  return w;
}

inline GenWord decomposition_b(int n, int k, int l) {
  detail::check_pair(n, k, l, "decomposition_b");
  GenWord w;
  w.degree = n;
  detail::append_pair_swap(w.tokens, k, l, PairScheme::b);
  return w;
}

namespace detail {

struct VariantSchedule {
  PairScheme scheme;
  bool outermost_first;
  Generator between;
  int start_rotation;
  int end_rotation;
};

inline VariantSchedule variant_schedule(int j, LemmaVariant v) {
  const int fh = j / 2;
  const int ch = (j + 1) / 2;
  switch (v) {
    case LemmaVariant::i:
      return {PairScheme::a, true, Generator::L, 0, fh - 1};
    case LemmaVariant::ii:
      return {PairScheme::b, true, Generator::R, j - 2, ch - 1};
    case LemmaVariant::iii:
      return {PairScheme::a, false, Generator::R, fh - 1, 0};
    case LemmaVariant::iv:
      return {PairScheme::b, false, Generator::L, ch - 1, j - 2};
  }
  throw invalid_argument("lemma_word: bad variant");
}

}  // namespace detail

inline LemmaWord lemma_word(int n, int j, LemmaVariant variant) {
  if (n < 3 || n > kMaxBuilderDegree)
    throw invalid_argument("lemma_word: degree " + std::to_string(n) + " out of range 3.." +
                           std::to_string(kMaxBuilderDegree));
  if (j < 2 || j > (n + 1) / 2)
    throw invalid_argument("lemma_word: reversal length " + std::to_string(j) +
                           " out of range 2..ceil(n/2) for n=" + std::to_string(n));

  const detail::VariantSchedule sched = detail::variant_schedule(j, variant);
  const int pairs = j / 2;

  LemmaWord out;
  out.word.degree = n;
  out.start_rotation = sched.start_rotation;
  out.end_rotation = sched.end_rotation;
  for (int step = 0; step < pairs; ++step) {
    const int k = sched.outermost_first ? step + 1 : pairs - step;
    if (step > 0) out.word.tokens.push_back(sched.between);
    detail::append_pair_swap(out.word.tokens, k, j + 1 - k, sched.scheme);
  }

  const std::int64_t want_len = static_cast<std::int64_t>(j) * (j - 1) - 1;
  if (static_cast<std::int64_t>(out.word.tokens.size()) != want_len)
    throw construction_error("lemma_word: built length " +
                             std::to_string(out.word.tokens.size()) + ", expected " +
                             std::to_string(want_len));

  // Validate the frame contract by application: once at the ascending base
  // and once at a scrambled base.
  const std::uint64_t seed = (static_cast<std::uint64_t>(n) << 20) ^
                             (static_cast<std::uint64_t>(j) << 4) ^
                             static_cast<std::uint64_t>(variant);
  for (const auto& base : {detail::ascending_word(n), detail::shuffled_word(n, seed)}) {
    const auto got =
        detail::word_image(detail::rotated(base, out.start_rotation), out.word.tokens);
    const auto want = detail::rotated(detail::reversed_prefix(base, j), out.end_rotation);
    if (got != want)
      throw construction_error("lemma_word: self-validation failed for n=" +
                               std::to_string(n) + " j=" + std::to_string(j) + " variant " +
                               lemma_variant_name(variant));
  }
  return out;
}

inline TheoremWord theorem_word(int n, int i) {
  if (n < 4 || n > kMaxBuilderDegree)
    throw invalid_argument("theorem_word: degree " + std::to_string(n) + " out of range 4.." +
                           std::to_string(kMaxBuilderDegree));
  if (i < 1 || i > n)
    throw invalid_argument("theorem_word: shift index " + std::to_string(i) +
                           " out of range 1.." + std::to_string(n));

  const int j1 = n / 2;
  const int j2 = (n + 1) / 2;
  const std::int64_t phase_len = lemma_value(n, j1) + lemma_value(n, j2);

  struct Candidate {
    TheoremWord tw;
    bool ok = false;
  };
  Candidate cands[2];

  for (TheoremBranch branch : {TheoremBranch::ceil_branch, TheoremBranch::floor_branch}) {
    const bool ceil = branch == TheoremBranch::ceil_branch;
    const LemmaWord phase1 = lemma_word(n, j1, ceil ? LemmaVariant::iv : LemmaVariant::iii);
    const LemmaWord phase2 = lemma_word(n, j2, ceil ? LemmaVariant::i : LemmaVariant::ii);
    const Generator trans = ceil ? Generator::L : Generator::R;
    const int residual = ceil ? detail::residual_ceil(n) : detail::residual_floor(n);
    const int m = ceil ? (j1 + 1) / 2 - 1 : j1 / 2 - 1;

    GenWord w;
    w.degree = n;
    w.tokens.reserve(static_cast<std::size_t>(phase_len + 2 + n / 2));
    w.tokens.insert(w.tokens.end(), phase1.word.tokens.begin(), phase1.word.tokens.end());
    w.tokens.push_back(trans);
    w.tokens.push_back(trans);
    w.tokens.insert(w.tokens.end(), phase2.word.tokens.begin(), phase2.word.tokens.end());

    // The two phases must leave a pure rotation on the table; measure it
    // rather than assume it, then insist it matches the branch constant.
    const auto reached =
        detail::word_image(detail::descending_rotated_word(n, n - i), w.tokens);
    const int d = detail::ascending_rotation_of(reached);
    const int want_d = ((residual + i - n) % n + n) % n;
    if (d < 0 || d != want_d) {
      cands[ceil ? 0 : 1].ok = false;
      continue;
    }

    const int tail = lee_distance(n, d, 0);
    if (d != 0) {
      // r^d needs d right-shifts or n-d left-shifts; ties go left.
      const Generator dir = d < n - d ? Generator::R : Generator::L;
      for (int t = 0; t < tail; ++t) w.tokens.push_back(dir);
    }

    const auto final_word =
        detail::word_image(detail::descending_rotated_word(n, n - i), w.tokens);
    const std::int64_t want_total = theorem_value(n, i).value;
    if (final_word != detail::ascending_word(n) ||
        static_cast<std::int64_t>(w.tokens.size()) != want_total) {
      cands[ceil ? 0 : 1].ok = false;
      continue;
    }

    Candidate& c = cands[ceil ? 0 : 1];
    c.ok = true;
    c.tw.word = std::move(w);
    c.tw.plan = ReversalPlan{n,        j1,
                             j2,       m,
                             branch,   phase_len + 2 + tail,
                             residual};
  }

  // Shorter branch wins; ties go to the ceil branch.
  const bool ceil_ok = cands[0].ok;
  const bool floor_ok = cands[1].ok;
  if (!ceil_ok && !floor_ok)
    throw construction_error("theorem_word: both branches failed validation for n=" +
                             std::to_string(n) + " i=" + std::to_string(i));
  int pick;
  if (ceil_ok && floor_ok)
    pick = cands[0].tw.word.length() <= cands[1].tw.word.length() ? 0 : 1;
  else
    pick = ceil_ok ? 0 : 1;
  return std::move(cands[pick].tw);
}

// Positioning prefix plus one pair decomposition: applying the result to pi
// yields rotate(swap of values at positions k and l, k-1) for scheme A and
// rotate(..., l-2) for scheme B.
inline GenWord greedy_pair_word(const Permutation& pi, int k, int l, PairScheme scheme) {
  const int n = pi.degree();
  detail::check_pair(n, k, l, "greedy_pair_word");
  const int frame = scheme == PairScheme::a ? k - 1 : l - 2;
  GenWord w;
  w.degree = n;
  for (int t = 0; t < frame; ++t) w.tokens.push_back(Generator::L);
  detail::append_pair_swap(w.tokens, k, l, scheme);

  Permutation swapped = pi;
  {
    std::array<int, kMaxDegree> buf{};
    for (int p = 1; p <= n; ++p) buf[p - 1] = pi.at(p);
    std::swap(buf[k - 1], buf[l - 1]);
    swapped = Permutation::from_word(std::span<const int>(buf.data(), static_cast<std::size_t>(n)));
  }
  if (apply_word(pi, w) != rotate(swapped, frame))
    throw construction_error("greedy_pair_word: self-validation failed");
  return w;
}

}  // namespace lrx
