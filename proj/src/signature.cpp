#include "gaproj/signature.hpp"

#include <charconv>
#include <stdexcept>

#include "gaproj/errors.hpp"

namespace gaproj {

Signature::Signature(int p, int q, int r, int max_dim) : p_(p), q_(q), r_(r) {
  if (p < 0 || q < 0 || r < 0)
    throw DomainError("Signature: counts must be nonnegative");
  if (max_dim < 0 || max_dim > kMaxDim)
    throw DomainError("Signature: dimension ceiling must be in [0, 16]");
  if (p + q + r > max_dim)
    throw DomainError("Signature: p+q+r exceeds the dimension ceiling " +
                      std::to_string(max_dim));
}

int Signature::metric(int index) const {
  if (index < 1 || index > dim())
    throw DomainError("Signature: basis index out of range");
  if (index <= p_) return 1;
  if (index <= p_ + q_) return -1;
  return 0;
}

std::string Signature::str() const {
  return std::to_string(p_) + "," + std::to_string(q_) + "," +
         std::to_string(r_);
}

Signature Signature::parse(const std::string& text, int max_dim) {
  int parts[3];
  const char* cur = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(cur, end, parts[i]);
    if (ec != std::errc{})
      throw DomainError("Signature: expected \"p,q,r\", got \"" + text + "\"");
    cur = next;
    if (i < 2) {
      if (cur == end || *cur != ',')
        throw DomainError("Signature: expected \"p,q,r\", got \"" + text +
                          "\"");
      ++cur;
    }
  }
  if (cur != end)
    throw DomainError("Signature: trailing characters in \"" + text + "\"");
  return Signature(parts[0], parts[1], parts[2], max_dim);
}

}  // namespace gaproj
