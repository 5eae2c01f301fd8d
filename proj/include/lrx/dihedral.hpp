#pragma once

// The dihedral subgroup H_n = <r, s | r^n = (), s^2 = (), srs = r^-1> of S_n,
// kept in normal form s^e r^k.  Used as rotation-frame bookkeeping by the
// two-phase reversal construction.

#include <optional>
#include <string>

#include "lrx/error.hpp"
#include "lrx/permutation.hpp"

namespace lrx {

struct DihedralElement {
  int degree = 1;
  bool reflect = false;  // e in s^e r^k
  int shift = 0;         // k, normalized to 0..degree-1

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

inline DihedralElement dihedral_identity(int n) {
  if (n < 1 || n > kMaxDegree) throw invalid_argument("dihedral degree out of range");
  return DihedralElement{n, false, 0};
}

inline DihedralElement dihedral_element(int n, bool reflect, int shift) {
  if (n < 1 || n > kMaxDegree) throw invalid_argument("dihedral degree out of range");
  int k = shift % n;
  if (k < 0) k += n;
  return DihedralElement{n, reflect, k};
}

// (s^e1 r^k1)(s^e2 r^k2): pushing r^k1 through s flips its sign, so the
// product is s^(e1 xor e2) r^(k2 - k1) when e2 is set and s^e1 r^(k1 + k2)
// otherwise.
inline DihedralElement dihedral_multiply(const DihedralElement& a, const DihedralElement& b) {
  if (a.degree != b.degree)
    throw invalid_argument("dihedral_multiply: degree mismatch");
  const int n = a.degree;
  int k = b.reflect ? (b.shift - a.shift) : (a.shift + b.shift);
  return dihedral_element(n, a.reflect != b.reflect, k % n);
}

inline DihedralElement dihedral_inverse(const DihedralElement& a) {
  // (s^e r^k)^-1 = r^-k s^e = s^e r^(e ? k : -k)
  return dihedral_element(a.degree, a.reflect, a.reflect ? a.shift : -a.shift);
}

inline Permutation dihedral_to_permutation(const DihedralElement& a) {
  const Permutation base = a.reflect ? reversed_identity(a.degree) : identity(a.degree);
  return rotate(base, a.shift);
}

// Recognizes a permutation of the form s^e r^k; nullopt for anything outside H_n.
inline std::optional<DihedralElement> dihedral_from_permutation(const Permutation& pi) {
  const int n = pi.degree();
  if (auto k = rotation_offset(identity(n), pi))
    return DihedralElement{n, false, *k};
  if (auto k = rotation_offset(reversed_identity(n), pi))
    return DihedralElement{n, true, *k};
  return std::nullopt;
}

}  // namespace lrx
