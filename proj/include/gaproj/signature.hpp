#pragma once

#include <cstdint>
#include <string>

namespace gaproj {

// Metric signature (p,q,r): counts of orthogonal basis vectors squaring to
// +1, -1 and 0. Basis vectors are 1-indexed: index i squares to +1 for
// i <= p, to -1 for p < i <= p+q, and to 0 above that.
class Signature {
 public:
  // Dense 2^n coefficient storage caps the dimension.
  static constexpr int kMaxDim = 16;

  Signature(int p, int q, int r, int max_dim = kMaxDim);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }
  int dim() const { return p_ + q_ + r_; }
  std::uint32_t blade_count() const { return std::uint32_t{1} << dim(); }
  bool degenerate() const { return r_ > 0; }

  // Square of the 1-indexed basis vector: +1, -1 or 0.
  int metric(int index) const;

  bool operator==(const Signature&) const = default;

  std::string str() const;  // "p,q,r"

  // Parses the CLI form "p,q,r".
  static Signature parse(const std::string& text, int max_dim = kMaxDim);

 private:
  int p_, q_, r_;
};

}  // namespace gaproj
