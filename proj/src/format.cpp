#include "gaproj/format.hpp"

#include <algorithm>
#include <bit>

namespace gaproj {
namespace {

std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> indices;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) indices.push_back(i + 1);
  }
  return indices;
}

}  // namespace

std::string blade_name(std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string name;
  for (int idx : mask_indices(mask)) {
    if (!name.empty()) name += '^';
    name += 'e';
    name += std::to_string(idx);
  }
  return name;
}

std::vector<std::uint32_t> canonical_mask_order(int dim) {
  std::vector<std::uint32_t> masks(std::size_t{1} << dim);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(),
            [](std::uint32_t a, std::uint32_t b) {
              int ga = std::popcount(a);
              int gb = std::popcount(b);
              if (ga != gb) return ga < gb;
              return mask_indices(a) < mask_indices(b);
            });
  return masks;
}

std::string format(const Multivector& x) {
  std::string out;
  for (std::uint32_t mask : canonical_mask_order(x.sig().dim())) {
    const Rational& c = x[mask];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mask == 0) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += blade_name(mask);
    } else {
      out += mag.str();
      out += '*';
      out += blade_name(mask);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gaproj
