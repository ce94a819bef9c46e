#include "cram/gf.hpp"

#include <map>

namespace cram {

namespace {

std::vector<int> to_digits(int x, int p, int len) {
  std::vector<int> d(len, 0);
  for (int i = 0; i < len; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int x = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
  return x;
}

}  // namespace

GF::GF(int q, int p, std::vector<int> reduction) : q_(q), p_(p) {
  int e = 0;
  for (int t = q; t > 1; t /= p) ++e;
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = to_digits(a, p, e);
    std::vector<int> na(e);
    for (int i = 0; i < e; ++i) na[i] = (p - da[i]) % p;
    neg_[a] = from_digits(na, p);
    for (int b = 0; b < q; ++b) {
      auto db = to_digits(b, p, e);
      std::vector<int> sum(e);
      for (int i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = from_digits(sum, p);

      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      // Reduce modulo the irreducible (monic, degree e, coefficients low-first).
      for (int d = 2 * e - 2; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i) prod[d - e + i] = ((prod[d - e + i] - c * reduction[i]) % p + p * p) % p;
      }
      prod.resize(e);
      mul_[a * q + b] = from_digits(prod, p);
    }
  }
}

const GF& GF::of(int q) {
  static const std::map<int, GF> fields = [] {
    std::map<int, GF> m;
    m.emplace(2, GF(2, 2, {}));
    m.emplace(3, GF(3, 3, {}));
    m.emplace(5, GF(5, 5, {}));
    m.emplace(7, GF(7, 7, {}));
    m.emplace(4, GF(4, 2, {1, 1}));  // x^2 + x + 1
    m.emplace(8, GF(8, 2, {1, 1, 0}));  // x^3 + x + 1
    m.emplace(9, GF(9, 3, {1, 0}));  // x^2 + 1
    return m;
  }();
  auto it = fields.find(q);
  if (it == fields.end())
    throw UnsupportedOrder("no field of order " + std::to_string(q) + " is supported");
  return it->second;
}

}  // namespace cram
