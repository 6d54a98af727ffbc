#include "gaproj/classify.hpp"

#include "gaproj/inverse.hpp"
#include "gaproj/lift.hpp"

namespace gaproj {

bool is_versor(const Multivector& x) {
  const Multivector* w = &x;
  Multivector lifted(x.sig());
  if (x.sig().degenerate() || x.sig().dim() == 0) {
    lifted = lift_map(x.sig()).apply(x);
    w = &lifted;
  }
  auto w_inv = inverse(*w);
  if (!w_inv) return false;
  const Signature& sig = w->sig();
  const Multivector w_bar = grade_involution(*w);
  for (int i = 1; i <= sig.dim(); ++i) {
    Multivector v = Multivector::basis_vector(sig, i);
    Multivector conj =
        geometric_product(geometric_product(w_bar, v), *w_inv);
    if (!(conj == grade_part(conj, 1))) return false;
  }
  return true;
}

bool is_blade(const Multivector& x) {
  return homogeneous_grade(x).has_value() && is_versor(x);
}

}  // namespace gaproj
