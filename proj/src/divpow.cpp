#include "zzschur/divpow.hpp"

#include <algorithm>
#include <sstream>

#include "zzschur/linalg.hpp"

namespace zzschur {

namespace {

std::string tuple_key(const std::vector<int>& t) {
  std::string k;
  k.reserve(t.size() * 4);
  for (int v : t)
    for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  return k;
}

void tensor_add(Tensor& t, const std::vector<int>& tuple, const Rat& c) {
  if (c == 0) return;
  auto it = t.find(tuple);
  if (it == t.end()) {
    t.emplace(tuple, c);
  } else {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

bool valid_seq_tuple(const std::vector<CalBasisElement>& basis,
                     const std::vector<int>& tuple) {
  for (size_t k = 0; k < tuple.size(); ++k)
    for (size_t l = k + 1; l < tuple.size(); ++l)
      if (tuple[k] == tuple[l] && basis[tuple[k]].parity == Parity::odd)
        return false;
  return true;
}

std::vector<MultisetIndex> seq_orbits(const std::vector<CalBasisElement>& basis,
                                      int d) {
  if (d < 0) throw std::invalid_argument("seq_orbits: negative degree");
  std::vector<MultisetIndex> out;
  std::vector<int> cur;
  const int n = static_cast<int>(basis.size());
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    for (int b = start; b < n; ++b) {
      cur.push_back(b);
      self(self, basis[b].parity == Parity::odd ? b + 1 : b, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, d);
  return out;
}

int sign_angle(const std::vector<CalBasisElement>& basis,
               const std::vector<int>& tuple) {
  int count = 0;
  for (size_t k = 0; k < tuple.size(); ++k)
    for (size_t l = k + 1; l < tuple.size(); ++l)
      if (basis[tuple[k]].parity == Parity::odd &&
          basis[tuple[l]].parity == Parity::odd && tuple[k] > tuple[l])
        ++count;
  return count;
}

int angle2(const std::vector<CalBasisElement>& ubasis, const std::vector<int>& u,
           const std::vector<CalBasisElement>& wbasis,
           const std::vector<int>& w) {
  int count = 0;
  for (size_t k = 0; k < u.size(); ++k) {
    if (ubasis[u[k]].parity != Parity::odd) continue;
    for (size_t l = 0; l < k && l < w.size(); ++l)
      if (wbasis[w[l]].parity == Parity::odd) ++count;
  }
  return count;
}

Int c_factorial(const std::vector<CalBasisElement>& basis,
                const std::vector<int>& tuple) {
  Int out(1);
  size_t k = 0;
  while (k < tuple.size()) {
    size_t l = k;
    while (l < tuple.size() && tuple[l] == tuple[k]) ++l;
    if (basis[tuple[k]].cal == CalClass::c_part)
      out *= factorial(static_cast<long>(l - k));
    k = l;
  }
  return out;
}

Parity tuple_parity(const std::vector<CalBasisElement>& basis,
                    const std::vector<int>& tuple) {
  int odd = 0;
  for (int b : tuple)
    if (basis[b].parity == Parity::odd) ++odd;
  return (odd & 1) ? Parity::odd : Parity::even;
}

Tensor expand_x(const std::vector<CalBasisElement>& basis,
                const std::vector<int>& tuple) {
  if (!valid_seq_tuple(basis, tuple))
    throw std::invalid_argument("expand_x: repeated odd entry");
  Tensor t;
  int base = sign_angle(basis, tuple);
  std::vector<int> perm(tuple);
  std::sort(perm.begin(), perm.end());
  do {
    int s = base + sign_angle(basis, perm);
    tensor_add(t, perm, (s & 1) ? Rat(-1) : Rat(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

Tensor expand_y(const std::vector<CalBasisElement>& basis,
                const std::vector<int>& tuple) {
  Tensor t = expand_x(basis, tuple);
  Rat cf(c_factorial(basis, tuple));
  for (auto& [k, v] : t) v *= cf;
  return t;
}

Tensor place_permute(const std::vector<CalBasisElement>& basis, const Tensor& t,
                     const std::vector<int>& sigma) {
  const size_t d = sigma.size();
  std::vector<int> landing(d);
  for (size_t k = 0; k < d; ++k) landing[sigma[k]] = static_cast<int>(k);
  Tensor out;
  for (const auto& [tuple, c] : t) {
    std::vector<int> nt(d);
    for (size_t k = 0; k < d; ++k) nt[k] = tuple[sigma[k]];
    int s = 0;
    for (size_t k = 0; k < d; ++k) {
      if (basis[tuple[k]].parity != Parity::odd) continue;
      for (size_t l = k + 1; l < d; ++l)
        if (basis[tuple[l]].parity == Parity::odd && landing[k] > landing[l])
          ++s;
    }
    tensor_add(out, nt, (s & 1) ? Rat(-c) : c);
  }
  return out;
}

bool tensor_equal(const Tensor& a, const Tensor& b) { return a == b; }

Tensor star(const std::vector<CalBasisElement>& basis, const Tensor& t1,
            const Tensor& t2) {
  Tensor out;
  for (const auto& [u, cu] : t1)
    for (const auto& [w, cw] : t2) {
      const int c = static_cast<int>(u.size());
      const int d = c + static_cast<int>(w.size());
      // choose landing positions for the first block
      std::vector<int> pick(c);
      for (int i = 0; i < c; ++i) pick[i] = i;
      while (true) {
        std::vector<int> r(d, -1);
        std::vector<int> comp;
        for (int i = 0; i < c; ++i) r[pick[i]] = u[i];
        for (int p = 0; p < d; ++p)
          if (r[p] < 0) comp.push_back(p);
        for (size_t j = 0; j < w.size(); ++j) r[comp[j]] = w[j];
        // Koszul sign: odd pairs (u_i, w_j) whose landings invert
        int s = 0;
        for (int i = 0; i < c; ++i) {
          if (basis[u[i]].parity != Parity::odd) continue;
          for (size_t j = 0; j < w.size(); ++j)
            if (basis[w[j]].parity == Parity::odd && pick[i] > comp[j]) ++s;
        }
        tensor_add(out, r, (s & 1) ? Rat(-cu * cw) : Rat(cu * cw));
        // next combination
        int i = c - 1;
        while (i >= 0 && pick[i] == d - c + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  return out;
}

std::vector<std::pair<std::vector<int>, Rat>> to_y_basis(
    const std::vector<CalBasisElement>& basis, const Tensor& t) {
  std::vector<std::pair<std::vector<int>, Rat>> out;
  Tensor rebuilt;
  for (const auto& [tuple, c] : t) {
    if (!std::is_sorted(tuple.begin(), tuple.end())) continue;
    if (!valid_seq_tuple(basis, tuple))
      throw std::logic_error("to_y_basis: nonzero coefficient on a repeated odd tuple");
    Rat yc = c / Rat(c_factorial(basis, tuple));
    out.push_back({tuple, yc});
    for (const auto& [tt, cc] : expand_y(basis, tuple))
      tensor_add(rebuilt, tt, yc * cc);
  }
  if (!tensor_equal(rebuilt, t))
    throw std::logic_error("to_y_basis: tensor is not an invariant of the expected form");
  return out;
}

Expansion gamma_pair_product(
    const std::vector<CalBasisElement>& ubasis, const std::vector<int>& u,
    const std::vector<CalBasisElement>& wbasis, const std::vector<int>& w,
    const std::vector<CalBasisElement>& target_basis,
    const std::function<const Expansion&(int, int)>& mul,
    const std::function<int(const std::vector<int>&)>& target_index) {
  const size_t d = u.size();
  if (w.size() != d)
    throw std::invalid_argument("gamma_pair_product: degree mismatch");
  std::map<std::vector<int>, Int> acc;

  std::vector<const Expansion*> terms(d);
  std::vector<int> tuple(d);

  // Collects the coefficient of every sorted target tuple in the product of
  // the componentwise expansions.
  auto walk = [&](auto&& self, size_t k, const Int& coeff) -> void {
    if (k == d) {
      acc[tuple] += coeff;
      return;
    }
    for (const auto& [b, c] : *terms[k]) {
      if (k > 0 && b < tuple[k - 1]) continue;
      tuple[k] = b;
      self(self, k + 1, Int(coeff * c));
    }
  };

  std::vector<int> uperm(u);
  do {
    int su = sign_angle(ubasis, uperm);
    std::vector<int> wperm(w);
    do {
      int s = su + sign_angle(wbasis, wperm) +
              angle2(ubasis, uperm, wbasis, wperm);
      bool dead = false;
      for (size_t k = 0; k < d; ++k) {
        terms[k] = &mul(uperm[k], wperm[k]);
        if (terms[k]->empty()) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      walk(walk, 0, Int((s & 1) ? -1 : 1));
    } while (std::next_permutation(wperm.begin(), wperm.end()));
  } while (std::next_permutation(uperm.begin(), uperm.end()));

  Int cf = c_factorial(ubasis, u) * c_factorial(wbasis, w);
  Expansion out;
  for (const auto& [t, c] : acc) {
    if (c == 0) continue;
    if (!valid_seq_tuple(target_basis, t))
      throw std::logic_error(
          "gamma_pair_product: nonzero coefficient on a repeated odd tuple");
    Int num = c * cf;
    Int den = c_factorial(target_basis, t);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
      throw std::logic_error(
          "gamma_pair_product: non-integral structure constant");
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    expansion_accumulate(out, target_index(t), q);
  }
  return out;
}

// ---------------------------------------------------------------------------

DividedPowerAlgebra::DividedPowerAlgebra(const SuperAlgebra* carrier, int d)
    : carrier_(carrier), d_(d) {
  if (d < 0) throw std::invalid_argument("DividedPowerAlgebra: negative degree");
  index_ = seq_orbits(carrier_->basis(), d);
  parities_.reserve(index_.size());
  for (size_t i = 0; i < index_.size(); ++i) {
    parities_.push_back(tuple_parity(carrier_->basis(), index_[i].entries));
    lookup_[tuple_key(index_[i].entries)] = static_cast<int>(i);
  }
}

int DividedPowerAlgebra::index_of(const std::vector<int>& t) const {
  auto it = lookup_.find(tuple_key(t));
  if (it == lookup_.end())
    throw std::invalid_argument("DividedPowerAlgebra: unknown index tuple");
  return it->second;
}

Expansion DividedPowerAlgebra::mult_uncached(int a, int b) const {
  const auto& basis = carrier_->basis();
  return gamma_pair_product(
      basis, index_[a].entries, basis, index_[b].entries, basis,
      [this](int x, int y) -> const Expansion& { return carrier_->mult(x, y); },
      [this](const std::vector<int>& t) { return index_of(t); });
}

const Expansion& DividedPowerAlgebra::mult(int a, int b) const {
  long long key = static_cast<long long>(a) * dim() + b;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Expansion e = mult_uncached(a, b);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(e)).first->second;
}

Expansion DividedPowerAlgebra::mult(const Expansion& a,
                                    const Expansion& b) const {
  Expansion out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b)
      out = expansion_add(out, expansion_scale(mult(i, j), ci * cj));
  return out;
}

Expansion DividedPowerAlgebra::tau(int a) const {
  if (!carrier_->has_tau())
    throw std::invalid_argument("tau requested but carrier has none");
  const auto& basis = carrier_->basis();
  // tau must preserve the a-part for tau_d to close on the modified power
  for (int b = 0; b < carrier_->dim(); ++b) {
    if (basis[b].cal != CalClass::a_part) continue;
    for (const auto& [t, c] : carrier_->tau(b)) {
      (void)c;
      if (basis[t].cal != CalClass::a_part)
        throw std::invalid_argument("tau does not preserve the a-part");
    }
  }
  // Entrywise application in tensor space, then re-expression in the y basis.
  Tensor image;
  for (const auto& [tuple, c] : expand_y(basis, index_[a].entries)) {
    std::vector<int> nt(tuple.size());
    auto walk = [&](auto&& self, size_t k, const Rat& coeff) -> void {
      if (k == tuple.size()) {
        tensor_add(image, nt, coeff);
        return;
      }
      for (const auto& [b, cb] : carrier_->tau(tuple[k])) {
        nt[k] = b;
        self(self, k + 1, Rat(coeff * cb));
      }
    };
    walk(walk, 0, c);
  }
  Expansion out;
  for (const auto& [tuple, c] : to_y_basis(basis, image)) {
    if (c.get_den() != 1)
      throw std::logic_error("tau_d: non-integral coefficient");
    expansion_accumulate(out, index_of(tuple), c.get_num());
  }
  return out;
}

std::vector<std::tuple<std::vector<int>, std::vector<int>, Int>>
DividedPowerAlgebra::coproduct_component(int a, int c) const {
  if (c < 0 || c > d_)
    throw std::invalid_argument("coproduct_component: bad bidegree");
  const auto& basis = carrier_->basis();
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> acc;
  for (const auto& [tuple, coeff] : expand_y(basis, index_[a].entries)) {
    std::vector<int> l(tuple.begin(), tuple.begin() + c);
    std::vector<int> r(tuple.begin() + c, tuple.end());
    auto& slot = acc[{l, r}];
    slot += coeff;
    if (slot == 0) acc.erase({l, r});
  }
  // coefficients on pairs of sorted tuples, checked against a full rebuild
  std::vector<std::tuple<std::vector<int>, std::vector<int>, Int>> out;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> rebuilt;
  for (const auto& [pair, coeff] : acc) {
    const auto& [l, r] = pair;
    if (!std::is_sorted(l.begin(), l.end()) ||
        !std::is_sorted(r.begin(), r.end()))
      continue;
    Rat yc = coeff / Rat(c_factorial(basis, l) * c_factorial(basis, r));
    if (yc.get_den() != 1)
      throw std::logic_error("coproduct: non-integral coefficient");
    out.push_back({l, r, yc.get_num()});
    for (const auto& [lt, lc] : expand_y(basis, l))
      for (const auto& [rt, rc] : expand_y(basis, r)) {
        auto& slot = rebuilt[{lt, rt}];
        slot += yc * lc * rc;
        if (slot == 0) rebuilt.erase({lt, rt});
      }
  }
  if (rebuilt != acc)
    throw std::logic_error("coproduct: component failed to re-express in eta x eta");
  return out;
}

SuperAlgebra DividedPowerAlgebra::materialize() const {
  const auto& cb = carrier_->basis();
  std::vector<CalBasisElement> basis;
  basis.reserve(index_.size());
  for (const auto& ix : index_) {
    std::ostringstream name;
    name << "y[";
    for (size_t k = 0; k < ix.entries.size(); ++k) {
      if (k) name << "|";
      name << cb[ix.entries[k]].name;
    }
    name << "]";
    Parity p = tuple_parity(cb, ix.entries);
    CalClass cal = CalClass::c_part;
    if (p == Parity::odd) {
      cal = CalClass::odd_part;
    } else {
      bool all_a = true;
      for (int b : ix.entries)
        if (cb[b].cal != CalClass::a_part) all_a = false;
      if (all_a) cal = CalClass::a_part;
    }
    basis.push_back({name.str(), p, cal});
  }
  std::vector<std::vector<Expansion>> table(dim(), std::vector<Expansion>(dim()));
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) table[a][b] = mult(a, b);

  // unit = 1^{(x)d} expressed in the y basis
  Tensor one{{{}, Rat(1)}};
  for (int k = 0; k < d_; ++k) {
    Tensor next;
    for (const auto& [tuple, c] : one)
      for (const auto& [b, cb2] : carrier_->unit()) {
        std::vector<int> nt(tuple);
        nt.push_back(b);
        tensor_add(next, nt, c * Rat(cb2));
      }
    one = std::move(next);
  }
  Expansion unit;
  for (const auto& [tuple, c] : to_y_basis(cb, one)) {
    if (c.get_den() != 1) throw std::logic_error("unit: non-integral coefficient");
    expansion_accumulate(unit, index_of(tuple), c.get_num());
  }

  std::optional<std::vector<Expansion>> tau_table;
  if (carrier_->has_tau()) {
    std::vector<Expansion> t(dim());
    for (int a = 0; a < dim(); ++a) t[a] = tau(a);
    tau_table = std::move(t);
  }
  return SuperAlgebra("Gamma~^" + std::to_string(d_) + "(" + carrier_->name() + ")",
                      std::move(basis), std::move(table), std::move(unit),
                      std::move(tau_table), std::nullopt);
}

// ---------------------------------------------------------------------------

DividedPowerModule::DividedPowerModule(const DividedPowerAlgebra* algebra,
                                       const CalModule* carrier)
    : algebra_(algebra), carrier_(carrier) {
  if (&carrier_->algebra() != &algebra_->carrier())
    throw std::invalid_argument("DividedPowerModule: carrier algebra mismatch");
  if (!carrier_->calibrated())
    throw std::invalid_argument(
        "DividedPowerModule: carrier module is not calibrated");
  index_ = seq_orbits(carrier_->basis(), algebra_->degree());
  parities_.reserve(index_.size());
  for (size_t i = 0; i < index_.size(); ++i) {
    parities_.push_back(tuple_parity(carrier_->basis(), index_[i].entries));
    lookup_[tuple_key(index_[i].entries)] = static_cast<int>(i);
  }
}

int DividedPowerModule::index_of(const std::vector<int>& t) const {
  auto it = lookup_.find(tuple_key(t));
  if (it == lookup_.end())
    throw std::invalid_argument("DividedPowerModule: unknown index tuple");
  return it->second;
}

Expansion DividedPowerModule::act_uncached(int a, int v) const {
  const auto& ab = algebra_->carrier().basis();
  const auto& vb = carrier_->basis();
  if (carrier_->side() == Side::left) {
    return gamma_pair_product(
        ab, algebra_->index(a).entries, vb, index_[v].entries, vb,
        [this](int x, int y) -> const Expansion& { return carrier_->act(x, y); },
        [this](const std::vector<int>& t) { return index_of(t); });
  }
  // y_v . eta^a: the module tuple provides the left tensor factors
  return gamma_pair_product(
      vb, index_[v].entries, ab, algebra_->index(a).entries, vb,
      [this](int x, int y) -> const Expansion& { return carrier_->act(y, x); },
      [this](const std::vector<int>& t) { return index_of(t); });
}

const Expansion& DividedPowerModule::act(int a, int v) const {
  long long key = static_cast<long long>(a) * dim() + v;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Expansion e = act_uncached(a, v);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(e)).first->second;
}

Expansion DividedPowerModule::act(const Expansion& a, const Expansion& v) const {
  Expansion out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : v)
      out = expansion_add(out, expansion_scale(act(i, j), ci * cj));
  return out;
}

// ---------------------------------------------------------------------------
// Bilinear forms.

namespace {

Rat pair_tensor_tuple(const std::vector<CalBasisElement>& basis,
                      const Gram& gram, const std::vector<int>& u,
                      const std::vector<int>& w) {
  Rat prod(1);
  for (size_t k = 0; k < u.size(); ++k) {
    if (gram[u[k]][w[k]] == 0) return Rat(0);
    prod *= gram[u[k]][w[k]];
  }
  return (angle2(basis, u, basis, w) & 1) ? Rat(-prod) : prod;
}

Rat pair_tensors(const std::vector<CalBasisElement>& basis, const Gram& gram,
                 const Tensor& a, const Tensor& b) {
  Rat acc(0);
  for (const auto& [u, cu] : a)
    for (const auto& [w, cw] : b)
      acc += cu * cw * pair_tensor_tuple(basis, gram, u, w);
  return acc;
}

}  // namespace

LiftedForm lifted_form(const std::vector<CalBasisElement>& basis,
                       const Gram& gram, int d) {
  const int n = static_cast<int>(basis.size());
  if (static_cast<int>(gram.size()) != n)
    throw std::invalid_argument("lifted_form: Gram size mismatch");
  int symmetry = 0;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(gram[i].size()) != n)
      throw std::invalid_argument("lifted_form: Gram size mismatch");
    for (int j = 0; j < n; ++j) {
      const Rat& g = gram[i][j];
      if (g == 0) continue;
      if (g.get_den() != 1)
        throw std::invalid_argument("lifted_form: Gram must be integral");
      if (basis[i].parity != basis[j].parity)
        throw std::invalid_argument("lifted_form: form is not even");
      if (basis[i].cal == CalClass::a_part && basis[j].cal == CalClass::a_part)
        throw std::invalid_argument("lifted_form: (V_a, V_a) must vanish");
      bool both_odd =
          basis[i].parity == Parity::odd && basis[j].parity == Parity::odd;
      Rat mirrored = both_odd ? Rat(-gram[j][i]) : gram[j][i];
      int eps = 0;
      if (mirrored == g)
        eps = 1;
      else if (mirrored == -g)
        eps = -1;
      else
        throw std::invalid_argument("lifted_form: form is not (anti)symmetric");
      if (symmetry == 0) symmetry = eps;
      if (symmetry != eps)
        throw std::invalid_argument("lifted_form: inconsistent symmetry type");
    }
  }
  if (symmetry == 0) symmetry = 1;

  Field q = Field::rationals();
  ExactMatrix g(n, n, q);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram[i][j] != 0) g.set(i, j, gram[i][j]);
  if (g.det() == 0) throw std::invalid_argument("lifted_form: degenerate form");

  // perfect a/c pairing: the a x c block must be square and unimodular
  std::vector<int> arows, ccols;
  for (int i = 0; i < n; ++i) {
    if (basis[i].cal == CalClass::a_part) arows.push_back(i);
    if (basis[i].cal == CalClass::c_part) ccols.push_back(i);
  }
  if (arows.size() != ccols.size())
    throw std::invalid_argument("lifted_form: a/c parts of unequal rank");
  if (!arows.empty()) {
    ExactMatrix blk(static_cast<int>(arows.size()),
                    static_cast<int>(ccols.size()), q);
    for (size_t i = 0; i < arows.size(); ++i)
      for (size_t j = 0; j < ccols.size(); ++j)
        if (gram[arows[i]][ccols[j]] != 0)
          blk.set(static_cast<int>(i), static_cast<int>(j),
                  gram[arows[i]][ccols[j]]);
    Rat det = blk.det();
    if (det != 1 && det != -1)
      throw std::invalid_argument("lifted_form: a/c pairing is not perfect");
  }

  LiftedForm out;
  out.symmetry = symmetry;
  out.index = seq_orbits(basis, d);
  const int m = static_cast<int>(out.index.size());
  out.gram.assign(m, std::vector<Rat>(m, Rat(0)));
  Int dfac = factorial(d);
  for (int i = 0; i < m; ++i) {
    Tensor yi = expand_y(basis, out.index[i].entries);
    for (int j = 0; j < m; ++j) {
      Tensor yj = expand_y(basis, out.index[j].entries);
      Rat v = pair_tensors(basis, gram, yi, yj);
      Rat scaled = v / Rat(dfac);
      if (scaled.get_den() != 1)
        throw std::logic_error("lifted_form: pairing not divisible by d!");
      out.gram[i][j] = scaled;
    }
  }
  return out;
}

std::vector<std::vector<Rat>> dual_pairing_matrix(
    const std::vector<CalBasisElement>& basis, const Gram& gram, int d) {
  const int n = static_cast<int>(basis.size());
  Field q = Field::rationals();
  ExactMatrix g(n, n, q);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram[i][j] != 0) g.set(i, j, gram[i][j]);

  // dual basis vectors: columns of G^{-1}; (b_i, b*_j) = delta_ij
  std::vector<std::vector<Rat>> dual(n, std::vector<Rat>(n, Rat(0)));
  for (int j = 0; j < n; ++j) {
    SparseVec e{{j, Rat(1)}};
    auto x = g.solve(e);
    if (!x) throw std::invalid_argument("dual_pairing_matrix: degenerate form");
    for (const auto& [k, v] : *x) {
      dual[j][k] = v;
      if (basis[k].parity != basis[j].parity)
        throw std::logic_error("dual basis vector is not homogeneous");
    }
  }

  // starred basis: same order and parities, a and c calibration classes swap
  std::vector<CalBasisElement> starred(basis);
  for (auto& b : starred) {
    if (b.cal == CalClass::a_part)
      b.cal = CalClass::c_part;
    else if (b.cal == CalClass::c_part)
      b.cal = CalClass::a_part;
    b.name += "*";
  }

  auto orbits = seq_orbits(basis, d);
  const int m = static_cast<int>(orbits.size());
  std::vector<std::vector<Rat>> out(m, std::vector<Rat>(m, Rat(0)));
  // expand each y_{b*} as a tensor over the original basis
  std::vector<Tensor> ystar(m);
  for (int j = 0; j < m; ++j) {
    Tensor abstract = expand_y(starred, orbits[j].entries);
    Tensor concrete;
    for (const auto& [tuple, c] : abstract) {
      // substitute dual vectors for starred entries
      std::vector<std::pair<std::vector<int>, Rat>> partial{{{}, c}};
      for (int b : tuple) {
        std::vector<std::pair<std::vector<int>, Rat>> next;
        for (const auto& [pt, pc] : partial)
          for (int k = 0; k < n; ++k) {
            if (dual[b][k] == 0) continue;
            auto nt = pt;
            nt.push_back(k);
            next.push_back({std::move(nt), pc * dual[b][k]});
          }
        partial = std::move(next);
      }
      for (const auto& [pt, pc] : partial) tensor_add(concrete, pt, pc);
    }
    ystar[j] = std::move(concrete);
  }
  for (int i = 0; i < m; ++i) {
    Tensor yi = expand_y(basis, orbits[i].entries);
    for (int j = 0; j < m; ++j)
      out[i][j] = pair_tensors(basis, gram, yi, ystar[j]);
  }
  return out;
}

}  // namespace zzschur
