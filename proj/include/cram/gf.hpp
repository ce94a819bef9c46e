#pragma once

#include <vector>

#include "cram/common.hpp"

namespace cram {

// Finite field of order q for q in {2,3,4,5,7,8,9}, elements 0..q-1.
// Prime orders use modular arithmetic; prime powers encode polynomials over
// the prime subfield base-p, reduced by a fixed irreducible.
class GF {
 public:
  static const GF& of(int q);  // throws UnsupportedOrder

  int q() const { return q_; }
  int p() const { return p_; }  // characteristic
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[check(a)]; }

 private:
  GF(int q, int p, std::vector<int> reduction);
  int idx(int a, int b) const { return check(a) * q_ + check(b); }
  int check(int a) const {
    if (a < 0 || a >= q_) throw BadArgs("field element out of range");
    return a;
  }

  int q_, p_;
  std::vector<int> add_, mul_, neg_;
};

}  // namespace cram
