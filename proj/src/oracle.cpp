#include "zzschur/oracle.hpp"

namespace zzschur {

Tensor tensor_multiply(const std::vector<CalBasisElement>& ubasis,
                       const Tensor& u,
                       const std::vector<CalBasisElement>& wbasis,
                       const Tensor& w,
                       const std::function<const Expansion&(int, int)>& mul) {
  Tensor out;
  for (const auto& [ut, uc] : u)
    for (const auto& [wt, wc] : w) {
      int sign = angle2(ubasis, ut, wbasis, wt);
      std::vector<int> tuple(ut.size());
      auto walk = [&](auto&& self, size_t k, const Rat& coeff) -> void {
        if (k == ut.size()) {
          auto it = out.find(tuple);
          if (it == out.end()) {
            if (coeff != 0) out.emplace(tuple, coeff);
          } else {
            it->second += coeff;
            if (it->second == 0) out.erase(it);
          }
          return;
        }
        for (const auto& [b, c] : mul(ut[k], wt[k])) {
          tuple[k] = b;
          self(self, k + 1, Rat(coeff * c));
        }
      };
      walk(walk, 0, (sign & 1) ? Rat(-uc * wc) : Rat(uc * wc));
    }
  return out;
}

namespace {

Expansion collect_integral(const std::vector<CalBasisElement>& basis,
                           const Tensor& t,
                           const std::function<int(const std::vector<int>&)>& ix) {
  Expansion out;
  for (const auto& [tuple, c] : to_y_basis(basis, t)) {
    if (c.get_den() != 1)
      throw std::logic_error("oracle: non-integral y coefficient");
    expansion_accumulate(out, ix(tuple), c.get_num());
  }
  return out;
}

}  // namespace

Expansion oracle_mult(const DividedPowerAlgebra& g, int a, int b) {
  const auto& basis = g.carrier().basis();
  Tensor ta = expand_y(basis, g.index(a).entries);
  Tensor tb = expand_y(basis, g.index(b).entries);
  Tensor prod = tensor_multiply(
      basis, ta, basis, tb,
      [&](int x, int y) -> const Expansion& { return g.carrier().mult(x, y); });
  return collect_integral(basis, prod,
                          [&](const std::vector<int>& t) { return g.index_of(t); });
}

Expansion oracle_action(const DividedPowerModule& m, int a, int v) {
  const auto& ab = m.algebra().carrier().basis();
  const auto& vb = m.carrier().basis();
  Tensor ta = expand_y(ab, m.algebra().index(a).entries);
  Tensor tv = expand_y(vb, m.index(v).entries);
  Tensor prod;
  if (m.side() == Side::left) {
    prod = tensor_multiply(ab, ta, vb, tv, [&](int x, int y) -> const Expansion& {
      return m.carrier().act(x, y);
    });
  } else {
    prod = tensor_multiply(vb, tv, ab, ta, [&](int x, int y) -> const Expansion& {
      return m.carrier().act(y, x);
    });
  }
  return collect_integral(vb, prod,
                          [&](const std::vector<int>& t) { return m.index_of(t); });
}

}  // namespace zzschur
