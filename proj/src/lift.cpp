#include "gaproj/lift.hpp"

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "gaproj/errors.hpp"

namespace gaproj {
namespace {

// Rank of the images viewed as rows of a k x 2^n rational matrix.
bool images_linearly_independent(const std::vector<Multivector>& images) {
  if (images.empty()) return true;
  const std::uint32_t cols = images.front().size();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(images.size());
  for (const Multivector& img : images) {
    std::vector<Rational> row(cols);
    for (std::uint32_t m = 0; m < cols; ++m) row[m] = img[m];
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::uint32_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::uint32_t j = col; j < cols; ++j)
        rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank == rows.size();
}

}  // namespace

Outermorphism::Outermorphism(const Signature& source, const Signature& target,
                             std::vector<Multivector> vector_images)
    : source_(source), target_(target), vector_images_(std::move(vector_images)) {
  if (static_cast<int>(vector_images_.size()) != source_.dim())
    throw DomainError("Outermorphism: one image per source basis vector");
  for (const Multivector& img : vector_images_) {
    if (!(img.sig() == target_))
      throw MismatchError("Outermorphism: image outside the target algebra");
    if (homogeneous_grade(img) != 1 || img.is_zero())
      throw DomainError("Outermorphism: images must be nonzero vectors");
  }
  if (!images_linearly_independent(vector_images_))
    throw DomainError("Outermorphism: images must be linearly independent");
}

const Multivector& Outermorphism::vector_image(int index) const {
  if (index < 1 || index > source_.dim())
    throw DomainError("Outermorphism: basis index out of range");
  return vector_images_[static_cast<std::size_t>(index) - 1];
}

Multivector Outermorphism::apply(const Multivector& x) const {
  if (!(x.sig() == source_))
    throw MismatchError("Outermorphism: argument outside the source algebra");
  Multivector out(target_);
  for (std::uint32_t mask = 0; mask < x.size(); ++mask) {
    if (x[mask].is_zero()) continue;
    Multivector img = Multivector::scalar(target_, x[mask]);
    std::uint32_t rest = mask;
    while (rest != 0) {
      int index = std::countr_zero(rest) + 1;
      img = outer_product(img, vector_images_[index - 1]);
      rest &= rest - 1;
    }
    out = out + img;
  }
  return out;
}

Outermorphism lift_map(const Signature& source) {
  const int p = source.p(), q = source.q(), r = source.r();
  if (source.dim() == 0) {
    return Outermorphism(source, Signature(1, 0, 0), {});
  }
  if (r == 0) {
    std::vector<Multivector> images;
    images.reserve(source.dim());
    for (int i = 1; i <= source.dim(); ++i)
      images.push_back(Multivector::basis_vector(source, i));
    return Outermorphism(source, source, images);
  }
  const Signature target(p + r, q + r, 0);
  std::vector<Multivector> images;
  images.reserve(source.dim());
  for (int i = 1; i <= p; ++i)
    images.push_back(Multivector::basis_vector(target, i));
  for (int j = 1; j <= q; ++j)
    images.push_back(Multivector::basis_vector(target, p + r + j));
  for (int k = 1; k <= r; ++k) {
    Multivector plus = Multivector::basis_vector(target, p + k);
    Multivector minus = Multivector::basis_vector(target, p + r + q + k);
    images.push_back(plus + minus);
  }
  return Outermorphism(source, target, images);
}

bool is_scalar_by_contraction(const Multivector& a) {
  const Multivector* probe = &a;
  Multivector lifted(a.sig());
  if (a.sig().degenerate()) {
    lifted = lift_map(a.sig()).apply(a);
    probe = &lifted;
  }
  const Signature& sig = probe->sig();
  for (int i = 1; i <= sig.dim(); ++i) {
    Multivector e = Multivector::basis_vector(sig, i);
    if (!left_contraction(e, *probe).is_zero()) return false;
  }
  return true;
}

}  // namespace gaproj
