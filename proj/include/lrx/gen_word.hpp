#pragma once

// Generator words: finite sequences over {X, L, R}, i.e. paths in the Cayley
// graph.  Words apply left to right by right multiplication.  Text form is
// space-separated tokens; parsers additionally accept run-length tokens like
// "L^3" (k >= 0), printers always emit single tokens.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lrx/error.hpp"
#include "lrx/permutation.hpp"

namespace lrx {

struct GenWord {
  int degree = 1;
  std::vector<Generator> tokens;

  std::size_t length() const { return tokens.size(); }

  friend bool operator==(const GenWord&, const GenWord&) = default;
};

inline std::string word_to_text(const GenWord& w) {
  std::string out;
  out.reserve(w.tokens.size() * 2);
  for (std::size_t i = 0; i < w.tokens.size(); ++i) {
    if (i) out += ' ';
    out += generator_char(w.tokens[i]);
  }
  return out;
}

inline GenWord parse_word(std::string_view text, int n) {
  if (n < 1) throw invalid_argument("parse_word: degree must be >= 1");
  GenWord w;
  w.degree = n;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n') ++j;
    const std::string_view tok = text.substr(i, j - i);
    i = j;

    Generator g = generator_from_char(tok[0]);  // throws on unknown letters
    long long run = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() == 2)
        throw invalid_argument("bad word token '" + std::string(tok) + "'");
      if (!detail::parse_int(tok.substr(2), run) || run < 0)
        throw invalid_argument("bad run length in token '" + std::string(tok) + "'");
    }
    for (long long t = 0; t < run; ++t) w.tokens.push_back(g);
  }
  return w;
}

inline Permutation apply_word(const Permutation& pi, const GenWord& w) {
  if (pi.degree() != w.degree)
    throw invalid_argument("apply_word: degree mismatch " + std::to_string(pi.degree()) +
                           " vs " + std::to_string(w.degree));
  Permutation cur = pi;
  for (Generator g : w.tokens) cur = apply_generator(cur, g);
  return cur;
}

// Free reduction under X X = (), L R = (), R L = ().  The result has no
// adjacent cancelling pair and the same image on every permutation.
inline GenWord reduce_word(const GenWord& w) {
  GenWord out;
  out.degree = w.degree;
  out.tokens.reserve(w.tokens.size());
  for (Generator g : w.tokens) {
    if (!out.tokens.empty() && out.tokens.back() == generator_inverse(g))
      out.tokens.pop_back();
    else
      out.tokens.push_back(g);
  }
  return out;
}

}  // namespace lrx
