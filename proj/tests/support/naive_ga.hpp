#pragma once

// Independent reference algebra for cross-checking: blades live as ascending
// index lists and products are simplified by adjacent transposition, with no
// bitmask machinery shared with the library.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gaproj/multivector.hpp"

namespace naive {

using Blade = std::vector<int>;
using MV = std::map<Blade, gaproj::Rational>;

// Bubble-sorts the factor list counting transpositions, then contracts
// adjacent duplicates through the metric. Distinct input indices appear at
// most twice, and sorting makes duplicates adjacent.
inline std::pair<int, Blade> simplify(Blade factors,
                                      const gaproj::Signature& sig) {
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      if (factors[i] > factors[i + 1]) {
        std::swap(factors[i], factors[i + 1]);
        sign = -sign;
        moved = true;
      }
    }
  }
  Blade out;
  for (std::size_t i = 0; i < factors.size();) {
    if (i + 1 < factors.size() && factors[i] == factors[i + 1]) {
      sign *= sig.metric(factors[i]);
      if (sign == 0) return {0, {}};
      i += 2;
    } else {
      out.push_back(factors[i]);
      ++i;
    }
  }
  return {sign, out};
}

inline void strip_zeros(MV& x) {
  for (auto it = x.begin(); it != x.end();)
    it = it->second.is_zero() ? x.erase(it) : std::next(it);
}

inline MV mul(const MV& x, const MV& y, const gaproj::Signature& sig) {
  MV out;
  for (const auto& [ba, ca] : x)
    for (const auto& [bb, cb] : y) {
      Blade cat = ba;
      cat.insert(cat.end(), bb.begin(), bb.end());
      auto [sign, blade] = simplify(std::move(cat), sig);
      if (sign == 0) continue;
      out[blade] += gaproj::Rational(sign) * ca * cb;
    }
  strip_zeros(out);
  return out;
}

// Grade filters applied per blade pair; blade products are single terms, so
// this matches the grade-part definitions.
inline MV outer(const MV& x, const MV& y, const gaproj::Signature& sig) {
  MV out;
  for (const auto& [ba, ca] : x)
    for (const auto& [bb, cb] : y) {
      Blade cat = ba;
      cat.insert(cat.end(), bb.begin(), bb.end());
      auto [sign, blade] = simplify(std::move(cat), sig);
      if (sign == 0 || blade.size() != ba.size() + bb.size()) continue;
      out[blade] += gaproj::Rational(sign) * ca * cb;
    }
  strip_zeros(out);
  return out;
}

inline MV contraction(const MV& x, const MV& y, const gaproj::Signature& sig) {
  MV out;
  for (const auto& [ba, ca] : x)
    for (const auto& [bb, cb] : y) {
      if (ba.size() > bb.size()) continue;
      Blade cat = ba;
      cat.insert(cat.end(), bb.begin(), bb.end());
      auto [sign, blade] = simplify(std::move(cat), sig);
      if (sign == 0 || blade.size() != bb.size() - ba.size()) continue;
      out[blade] += gaproj::Rational(sign) * ca * cb;
    }
  strip_zeros(out);
  return out;
}

inline MV add(const MV& x, const MV& y) {
  MV out = x;
  for (const auto& [b, c] : y) out[b] += c;
  strip_zeros(out);
  return out;
}

inline MV scale(const MV& x, const gaproj::Rational& c) {
  MV out;
  for (const auto& [b, v] : x) out[b] = c * v;
  strip_zeros(out);
  return out;
}

inline MV grade_involution(const MV& x) {
  MV out;
  for (const auto& [b, v] : x)
    out[b] = (b.size() % 2 == 1) ? -v : v;
  return out;
}

inline MV reverse(const MV& x) {
  MV out;
  for (const auto& [b, v] : x) {
    std::size_t k = b.size();
    out[b] = (k * (k - 1) / 2) % 2 == 1 ? -v : v;
  }
  return out;
}

inline MV from_library(const gaproj::Multivector& m) {
  MV out;
  for (std::uint32_t mask = 0; mask < m.size(); ++mask) {
    if (m[mask].is_zero()) continue;
    Blade b;
    for (int i = 0; i < 16; ++i)
      if (mask >> i & 1u) b.push_back(i + 1);
    out[b] = m[mask];
  }
  return out;
}

inline gaproj::Multivector to_library(const MV& x,
                                      const gaproj::Signature& sig) {
  gaproj::Multivector out(sig);
  for (const auto& [blade, coeff] : x) {
    std::uint32_t mask = 0;
    for (int i : blade) mask |= std::uint32_t{1} << (i - 1);
    out[mask] = coeff;
  }
  return out;
}

inline bool same(const MV& a, const gaproj::Multivector& b) {
  return to_library(a, b.sig()) == b;
}

}  // namespace naive
