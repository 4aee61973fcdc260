#include "zzschur/superalg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "zzschur/linalg.hpp"

namespace zzschur {

using nlohmann::json;

Expansion expansion_add(const Expansion& a, const Expansion& b) {
  Expansion out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Int c = a[i].second + b[j].second;
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

Expansion expansion_scale(const Expansion& a, const Int& c) {
  if (c == 0) return {};
  Expansion out(a);
  for (auto& t : out) t.second *= c;
  return out;
}

void expansion_accumulate(Expansion& acc, int index, const Int& c) {
  if (c == 0) return;
  auto it = std::lower_bound(
      acc.begin(), acc.end(), index,
      [](const Term& t, int idx) { return t.first < idx; });
  if (it != acc.end() && it->first == index) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  } else {
    acc.insert(it, {index, c});
  }
}

bool expansion_equal(const Expansion& a, const Expansion& b) { return a == b; }

bool AuditReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AuditCheck& c) { return c.pass; });
}

void AuditReport::add(std::string name, bool pass, std::string witness) {
  checks.push_back({std::move(name), pass, std::move(witness)});
}

namespace {

Parity parity_of(const std::vector<CalBasisElement>& basis, const Expansion& x,
                 const char* what) {
  if (x.empty()) return Parity::even;
  Parity p = basis[x[0].first].parity;
  for (const auto& [i, c] : x) {
    (void)c;
    if (basis[i].parity != p)
      throw std::invalid_argument(std::string(what) +
                                  ": non-homogeneous expansion");
  }
  return p;
}

}  // namespace

SuperAlgebra::SuperAlgebra(std::string name, std::vector<CalBasisElement> basis,
                           std::vector<std::vector<Expansion>> mult,
                           Expansion unit,
                           std::optional<std::vector<Expansion>> tau,
                           std::optional<HeredityData> heredity)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      tau_(std::move(tau)),
      heredity_(std::move(heredity)) {
  for (const auto& b : basis_)
    if (b.parity == Parity::even) ++even_dim_;
  validate();
}

void SuperAlgebra::validate() const {
  const int n = dim();
  if (static_cast<int>(mult_.size()) != n)
    throw std::invalid_argument("structure constant table has wrong size");
  for (const auto& b : basis_) {
    bool odd_cal = b.cal == CalClass::odd_part;
    if (odd_cal != (b.parity == Parity::odd))
      throw std::invalid_argument("calibration class inconsistent with parity: " +
                                  b.name);
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mult_[a].size()) != n)
      throw std::invalid_argument("structure constant table has wrong size");
    for (int c = 0; c < n; ++c) {
      const Expansion& e = mult_[a][c];
      if (e.empty()) continue;
      Parity want = basis_[a].parity + basis_[c].parity;
      if (parity_of(basis_, e, "product") != want)
        throw std::invalid_argument("product breaks the parity grading");
    }
  }
  // Unit lives in the a-part and acts as identity.
  for (const auto& [i, c] : unit_) {
    (void)c;
    if (basis_[i].cal != CalClass::a_part)
      throw std::invalid_argument("unit not supported on the a-part");
  }
  for (int a = 0; a < n; ++a) {
    Expansion one_a, a_one;
    for (const auto& [u, cu] : unit_) {
      one_a = expansion_add(one_a, expansion_scale(mult_[u][a], cu));
      a_one = expansion_add(a_one, expansion_scale(mult_[a][u], cu));
    }
    Expansion want{{a, Int(1)}};
    if (one_a != want || a_one != want)
      throw std::invalid_argument("unit fails on basis element " +
                                  basis_[a].name);
  }
  // The a-part spans a subalgebra (conforming calibration).
  for (int a = 0; a < n; ++a) {
    if (basis_[a].cal != CalClass::a_part) continue;
    for (int c = 0; c < n; ++c) {
      if (basis_[c].cal != CalClass::a_part) continue;
      for (const auto& [b, coeff] : mult_[a][c]) {
        (void)coeff;
        if (basis_[b].cal != CalClass::a_part)
          throw std::invalid_argument(
              "a-part is not closed under multiplication");
      }
    }
  }
  // Associativity: exhaustive for small algebras, fixed-seed sample above.
  auto check_triple = [&](int a, int b, int c) {
    Expansion ab_c = mult(mult_[a][b], Expansion{{c, Int(1)}});
    Expansion a_bc = mult(Expansion{{a, Int(1)}}, mult_[b][c]);
    if (ab_c != a_bc)
      throw std::invalid_argument("associativity fails at (" + basis_[a].name +
                                  ", " + basis_[b].name + ", " + basis_[c].name +
                                  ")");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(20240901u);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 50000; ++k)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
  if (tau_) {
    if (static_cast<int>(tau_->size()) != n)
      throw std::invalid_argument("tau table has wrong size");
    for (int a = 0; a < n; ++a)
      if (!(*tau_)[a].empty() &&
          parity_of(basis_, (*tau_)[a], "tau") != basis_[a].parity)
        throw std::invalid_argument("tau is not even");
  }
}

int SuperAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].name == name) return i;
  throw std::invalid_argument("no basis element named '" + name + "' in " +
                              name_);
}

Expansion SuperAlgebra::mult(const Expansion& a, const Expansion& c) const {
  Expansion out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : c)
      out = expansion_add(out, expansion_scale(mult_[i][j], ci * cj));
  return out;
}

Expansion SuperAlgebra::tau(const Expansion& a) const {
  Expansion out;
  for (const auto& [i, c] : a)
    out = expansion_add(out, expansion_scale((*tau_)[i], c));
  return out;
}

void SuperAlgebra::set_tau(std::vector<Expansion> t) {
  tau_ = std::move(t);
  validate();
}

CalModule::CalModule(const SuperAlgebra* algebra, Side side, std::string name,
                     std::vector<CalBasisElement> basis,
                     std::vector<std::vector<Expansion>> action)
    : algebra_(algebra),
      side_(side),
      name_(std::move(name)),
      basis_(std::move(basis)),
      action_(std::move(action)),
      calibrated_(true) {
  const int na = algebra_->dim();
  const int nv = dim();
  if (static_cast<int>(action_.size()) != na)
    throw std::invalid_argument("action table has wrong size");
  for (int a = 0; a < na; ++a) {
    if (static_cast<int>(action_[a].size()) != nv)
      throw std::invalid_argument("action table has wrong size");
    for (int v = 0; v < nv; ++v) {
      const Expansion& e = action_[a][v];
      if (e.empty()) continue;
      Parity want = algebra_->element(a).parity + basis_[v].parity;
      if (parity_of(basis_, e, "action") != want)
        throw std::invalid_argument("action breaks the parity grading");
    }
  }
  // Unit acts as identity.
  for (int v = 0; v < nv; ++v) {
    Expansion uv;
    for (const auto& [u, cu] : algebra_->unit())
      uv = expansion_add(uv, expansion_scale(action_[u][v], cu));
    if (uv != Expansion{{v, Int(1)}})
      throw std::invalid_argument("unit fails on module element " +
                                  basis_[v].name);
  }
  // Compatibility with multiplication: a(bv) = (ab)v, resp. (vb)a = v(ba).
  auto check_triple = [&](int a, int b, int v) {
    if (side_ == Side::left) {
      Expansion lhs = act(Expansion{{a, Int(1)}}, action_[b][v]);
      Expansion rhs = act(algebra_->mult(a, b), Expansion{{v, Int(1)}});
      if (lhs != rhs)
        throw std::invalid_argument("left action incompatible at (" +
                                    algebra_->element(a).name + ", " +
                                    algebra_->element(b).name + ", " +
                                    basis_[v].name + ")");
    } else {
      // action_[a][v] holds v.a; check (v.b).a = v.(ba).
      Expansion lhs = act(Expansion{{a, Int(1)}}, action_[b][v]);
      Expansion rhs = act(algebra_->mult(b, a), Expansion{{v, Int(1)}});
      if (lhs != rhs)
        throw std::invalid_argument("right action incompatible at (" +
                                    algebra_->element(a).name + ", " +
                                    algebra_->element(b).name + ", " +
                                    basis_[v].name + ")");
    }
  };
  long long total = 1LL * na * na * nv;
  if (total <= 2'000'000) {
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < na; ++b)
        for (int v = 0; v < nv; ++v) check_triple(a, b, v);
  } else {
    std::mt19937 rng(20240902u);
    std::uniform_int_distribution<int> pa(0, na - 1), pv(0, nv - 1);
    for (int k = 0; k < 200000; ++k) check_triple(pa(rng), pa(rng), pv(rng));
  }
  // Calibration: a.V_a inside V_a.
  for (int a = 0; a < na && calibrated_; ++a) {
    if (algebra_->element(a).cal != CalClass::a_part) continue;
    for (int v = 0; v < nv && calibrated_; ++v) {
      if (basis_[v].cal != CalClass::a_part) continue;
      for (const auto& [w, c] : action_[a][v]) {
        (void)c;
        if (basis_[w].cal != CalClass::a_part) calibrated_ = false;
      }
    }
  }
}

int CalModule::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].name == name) return i;
  throw std::invalid_argument("no module element named '" + name + "' in " +
                              name_);
}

Expansion CalModule::act(const Expansion& a, const Expansion& v) const {
  Expansion out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : v)
      out = expansion_add(out, expansion_scale(action_[i][j], ci * cj));
  return out;
}

// ---------------------------------------------------------------------------
// The extended zigzag algebra.

namespace {

struct ZigzagShape {
  int ell;
  // basis layout: e_0..e_ell, c_0..c_{ell-1}, a pairs (a_{j,j+1}, a_{j+1,j})
  int e(int i) const { return i; }
  int c(int j) const { return ell + 1 + j; }
  int a(int i, int j) const {  // |i-j| = 1
    int lo = std::min(i, j);
    return 2 * ell + 1 + 2 * lo + (i < j ? 0 : 1);
  }
  int dim() const { return 4 * ell + 1; }

  // path data: source, target, length
  struct Path {
    int src, tgt, len;
  };
  Path path(int idx) const {
    if (idx <= ell) return {idx, idx, 0};
    if (idx <= 2 * ell) {
      int j = idx - ell - 1;
      return {j, j, 2};
    }
    int k = idx - 2 * ell - 1;
    int lo = k / 2;
    if (k % 2 == 0) return {lo + 1, lo, 1};  // a_{lo, lo+1}: src lo+1, tgt lo
    return {lo, lo + 1, 1};                  // a_{lo+1, lo}
  }
};

}  // namespace

SuperAlgebra zigzag(int ell) {
  if (ell < 1) throw std::invalid_argument("zigzag: ell must be >= 1");
  ZigzagShape s{ell};
  const int n = s.dim();
  std::vector<CalBasisElement> basis(n);
  for (int i = 0; i <= ell; ++i)
    basis[s.e(i)] = {"e" + std::to_string(i), Parity::even, CalClass::a_part};
  for (int j = 0; j < ell; ++j)
    basis[s.c(j)] = {"c" + std::to_string(j), Parity::even, CalClass::c_part};
  for (int j = 0; j < ell; ++j) {
    basis[s.a(j, j + 1)] = {"a" + std::to_string(j) + "_" + std::to_string(j + 1),
                            Parity::odd, CalClass::odd_part};
    basis[s.a(j + 1, j)] = {"a" + std::to_string(j + 1) + "_" + std::to_string(j),
                            Parity::odd, CalClass::odd_part};
  }

  // Composition x*y reads right to left: e_i x e_j = x for a path x: j -> i.
  std::vector<std::vector<Expansion>> mult(n, std::vector<Expansion>(n));
  for (int x = 0; x < n; ++x) {
    auto px = s.path(x);
    for (int y = 0; y < n; ++y) {
      auto py = s.path(y);
      if (px.src != py.tgt) continue;
      int len = px.len + py.len;
      if (len > 2) continue;
      if (px.len == 0) {
        mult[x][y] = {{y, Int(1)}};
      } else if (py.len == 0) {
        mult[x][y] = {{x, Int(1)}};
      } else {
        // two arrows; nonzero only for a cycle, which is based at px.tgt
        if (px.tgt != py.src) continue;
        int v = px.tgt;
        if (v < ell) mult[x][y] = {{s.c(v), Int(1)}};
        // the cycle at the end vertex ell is zero
      }
    }
  }

  Expansion unit;
  for (int i = 0; i <= ell; ++i) unit.push_back({s.e(i), Int(1)});

  std::vector<Expansion> tau(n);
  for (int i = 0; i <= ell; ++i) tau[s.e(i)] = {{s.e(i), Int(1)}};
  for (int j = 0; j < ell; ++j) {
    tau[s.c(j)] = {{s.c(j), Int(-1)}};
    tau[s.a(j, j + 1)] = {{s.a(j + 1, j), Int(1)}};
    tau[s.a(j + 1, j)] = {{s.a(j, j + 1), Int(1)}};
  }

  HeredityData her;
  her.X.resize(ell + 1);
  her.Y.resize(ell + 1);
  her.e.resize(ell + 1);
  for (int i = 0; i <= ell; ++i) {
    her.e[i] = s.e(i);
    her.X[i] = {s.e(i)};
    her.Y[i] = {s.e(i)};
    if (i > 0) {
      her.X[i].push_back(s.a(i - 1, i));
      her.Y[i].push_back(s.a(i, i - 1));
    }
  }

  return SuperAlgebra("Z(" + std::to_string(ell) + ")", std::move(basis),
                      std::move(mult), std::move(unit), std::move(tau),
                      std::move(her));
}

std::string matrix_element_name(const std::string& b, int r, int s) {
  return b + "@" + std::to_string(r) + "," + std::to_string(s);
}

SuperAlgebra matrix_superalgebra(const SuperAlgebra& a, int n) {
  if (n < 1) throw std::invalid_argument("matrix_superalgebra: n must be >= 1");
  const int da = a.dim();
  const int dm = da * n * n;
  auto idx = [n](int b, int r, int s) { return (b * n + r) * n + s; };
  std::vector<CalBasisElement> basis(dm);
  for (int b = 0; b < da; ++b)
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        basis[idx(b, r, s)] = {matrix_element_name(a.element(b).name, r + 1, s + 1),
                               a.element(b).parity, a.element(b).cal};
  std::vector<std::vector<Expansion>> mult(dm, std::vector<Expansion>(dm));
  for (int b = 0; b < da; ++b)
    for (int b2 = 0; b2 < da; ++b2) {
      const Expansion& prod = a.mult(b, b2);
      if (prod.empty()) continue;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          for (int s2 = 0; s2 < n; ++s2) {
            Expansion e;
            for (const auto& [bb, c] : prod) e.push_back({idx(bb, r, s2), c});
            std::sort(e.begin(), e.end());
            mult[idx(b, r, s)][idx(b2, s, s2)] = std::move(e);
          }
    }
  Expansion unit;
  for (const auto& [b, c] : a.unit())
    for (int r = 0; r < n; ++r) unit.push_back({idx(b, r, r), c});
  std::sort(unit.begin(), unit.end());

  std::optional<std::vector<Expansion>> tau;
  if (a.has_tau()) {
    std::vector<Expansion> t(dm);
    for (int b = 0; b < da; ++b)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          Expansion e;
          for (const auto& [bb, c] : a.tau(b)) e.push_back({idx(bb, s, r), c});
          std::sort(e.begin(), e.end());
          t[idx(b, r, s)] = std::move(e);
        }
    tau = std::move(t);
  }
  return SuperAlgebra("M" + std::to_string(n) + "(" + a.name() + ")",
                      std::move(basis), std::move(mult), std::move(unit),
                      std::move(tau), std::nullopt);
}

// ---------------------------------------------------------------------------
// Heredity audit.

namespace {

SparseVec to_vec(const Expansion& e) {
  SparseVec v;
  for (const auto& [i, c] : e) v[i] = Rat(c);
  return v;
}

std::string describe(const SuperAlgebra& a, const Expansion& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : e) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.get_str() << "*";
    os << a.element(i).name;
  }
  return os.str();
}

}  // namespace

AuditReport heredity_audit(const SuperAlgebra& a) {
  if (!a.heredity())
    throw std::invalid_argument("heredity_audit: algebra carries no heredity data");
  return heredity_audit(a, *a.heredity());
}

AuditReport heredity_audit(const SuperAlgebra& a, const HeredityData& data) {
  AuditReport report;
  Field q = Field::rationals();
  const int levels = data.levels();

  // Axiom (a): products {xy} form a basis.
  std::vector<std::tuple<int, int, int>> labels;  // (i, x, y)
  SpanTracker span(q);
  int count = 0;
  bool indep = true;
  std::string witness_a;
  for (int i = 0; i < levels; ++i)
    for (int x : data.X[i])
      for (int y : data.Y[i]) {
        ++count;
        Expansion p = a.mult(x, y);
        if (!span.insert(to_vec(p))) {
          indep = false;
          if (witness_a.empty())
            witness_a = "dependent product " + a.element(x).name + "*" +
                        a.element(y).name + " = " + describe(a, p) +
                        " at level " + std::to_string(i);
        }
        labels.emplace_back(i, x, y);
      }
  if (count != a.dim() && witness_a.empty())
    witness_a = "got " + std::to_string(count) + " products for dimension " +
                std::to_string(a.dim());
  report.add("(a) heredity products form a basis",
             indep && count == a.dim() && span.rank() == a.dim(), witness_a);

  // Spans of A^{>i} for each level.
  std::vector<SpanTracker> above(levels, SpanTracker(q));
  for (int i = 0; i < levels; ++i)
    for (int j = i + 1; j < levels; ++j)
      for (int x : data.X[j])
        for (int y : data.Y[j]) above[i].insert(to_vec(a.mult(x, y)));

  // Axiom (b): left/right stability modulo A^{>i}.
  bool pass_b = true;
  std::string witness_b;
  for (int i = 0; i < levels && pass_b; ++i) {
    SpanTracker left(above[i]);
    for (int x : data.X[i]) left.insert(SparseVec{{x, Rat(1)}});
    SpanTracker right(above[i]);
    for (int y : data.Y[i]) right.insert(SparseVec{{y, Rat(1)}});
    for (int g = 0; g < a.dim() && pass_b; ++g) {
      for (int x : data.X[i])
        if (!left.contains(to_vec(a.mult(g, x)))) {
          pass_b = false;
          witness_b = a.element(g).name + "*" + a.element(x).name +
                      " leaves span(X(" + std::to_string(i) + ")) + A^{>" +
                      std::to_string(i) + "}";
          break;
        }
      if (!pass_b) break;
      for (int y : data.Y[i])
        if (!right.contains(to_vec(a.mult(y, g)))) {
          pass_b = false;
          witness_b = a.element(y).name + "*" + a.element(g).name +
                      " leaves span(Y(" + std::to_string(i) + ")) + A^{>" +
                      std::to_string(i) + "}";
          break;
        }
    }
  }
  report.add("(b) stability modulo higher levels", pass_b, witness_b);

  // Axiom (c): idempotent relations.
  bool pass_c = true;
  std::string witness_c;
  auto is_elem = [](const Expansion& e, int b) {
    return e.size() == 1 && e[0].first == b && e[0].second == 1;
  };
  for (int i = 0; i < levels && pass_c; ++i) {
    int ei = data.e[i];
    for (int x : data.X[i]) {
      if (!is_elem(a.mult(x, ei), x) ||
          !(x == ei ? is_elem(a.mult(ei, x), x) : a.mult(ei, x).empty())) {
        pass_c = false;
        witness_c = "x = " + a.element(x).name + " at level " + std::to_string(i);
        break;
      }
    }
    for (int y : data.Y[i]) {
      if (!is_elem(a.mult(ei, y), y) ||
          !(y == ei ? is_elem(a.mult(y, ei), y) : a.mult(y, ei).empty())) {
        pass_c = false;
        witness_c = "y = " + a.element(y).name + " at level " + std::to_string(i);
        break;
      }
    }
    for (int j = 0; j < levels && pass_c; ++j) {
      int ej = data.e[j];
      for (int x : data.X[i]) {
        Expansion p = a.mult(ej, x);
        if (!(p.empty() || is_elem(p, x))) {
          pass_c = false;
          witness_c = "e" + std::to_string(j) + "*" + a.element(x).name +
                      " = " + describe(a, p);
          break;
        }
      }
      for (int y : data.Y[i]) {
        Expansion p = a.mult(y, ej);
        if (!(p.empty() || is_elem(p, y))) {
          pass_c = false;
          witness_c = a.element(y).name + "*e" + std::to_string(j) + " = " +
                      describe(a, p);
          break;
        }
      }
    }
  }
  report.add("(c) idempotent relations", pass_c, witness_c);

  // Conformity: B_a spans a unital subalgebra.
  bool conforming = true;
  std::string witness_d;
  SpanTracker ba(q);
  std::vector<Expansion> ba_elems;
  for (int i = 0; i < levels; ++i)
    for (int x : data.X[i])
      for (int y : data.Y[i])
        if (a.element(x).parity == Parity::even &&
            a.element(y).parity == Parity::even) {
          Expansion p = a.mult(x, y);
          ba_elems.push_back(p);
          ba.insert(to_vec(p));
        }
  if (!ba.contains(to_vec(a.unit()))) {
    conforming = false;
    witness_d = "unit not in span(B_a)";
  }
  for (size_t i = 0; i < ba_elems.size() && conforming; ++i)
    for (size_t j = 0; j < ba_elems.size() && conforming; ++j) {
      Expansion p = a.mult(ba_elems[i], ba_elems[j]);
      if (!ba.contains(to_vec(p))) {
        conforming = false;
        witness_d = "B_a product escapes span(B_a): " + describe(a, p);
      }
    }
  report.add("conformity of B_a", conforming, witness_d);
  return report;
}

bool anti_involution_audit(const SuperAlgebra& a) {
  if (!a.has_tau()) return false;
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    // even and involutive
    const Expansion& ti = a.tau(i);
    for (const auto& [j, c] : ti) {
      (void)c;
      if (a.element(j).parity != a.element(i).parity) return false;
    }
    if (a.tau(ti) != Expansion{{i, Int(1)}}) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Expansion lhs = a.tau(a.mult(x, y));
      Expansion rhs = a.mult(a.tau(y), a.tau(x));
      if (is_odd(a.element(x).parity) && is_odd(a.element(y).parity))
        rhs = expansion_scale(rhs, Int(-1));
      if (lhs != rhs) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Explicit zigzag modules.

ZigzagModules zigzag_modules(const SuperAlgebra& z, int i) {
  const int n = z.dim();
  int ell = (n - 1) / 4;
  if (i < 0 || i > ell)
    throw std::invalid_argument("zigzag_modules: index out of range");
  auto ix = [&](const std::string& name) { return z.index_of(name); };
  std::string si = std::to_string(i);

  auto make = [&](const std::string& name, std::vector<CalBasisElement> basis,
                  const std::vector<std::pair<std::pair<int, int>, Expansion>>&
                      rules) {
    std::vector<std::vector<Expansion>> action(
        n, std::vector<Expansion>(basis.size()));
    for (const auto& [av, e] : rules) action[av.first][av.second] = e;
    return CalModule(&z, Side::left, name, std::move(basis), std::move(action));
  };

  CalModule simple =
      make("L(" + si + ")", {{"v" + si, Parity::even, CalClass::a_part}},
           {{{ix("e" + si), 0}, {{0, Int(1)}}}});
  if (i == 0) {
    CalModule st = simple, co = simple;
    return {std::move(simple), std::move(st), std::move(co)};
  }
  std::string sm = std::to_string(i - 1);
  CalModule standard =
      make("Delta(" + si + ")",
           {{"v" + si, Parity::even, CalClass::a_part},
            {"w" + si, Parity::odd, CalClass::odd_part}},
           {{{ix("e" + si), 0}, {{0, Int(1)}}},
            {{ix("e" + sm), 1}, {{1, Int(1)}}},
            {{ix("a" + sm + "_" + si), 0}, {{1, Int(1)}}}});
  CalModule costandard =
      make("Nabla(" + si + ")",
           {{"v*" + si, Parity::even, CalClass::a_part},
            {"w*" + si, Parity::odd, CalClass::odd_part}},
           {{{ix("e" + si), 0}, {{0, Int(1)}}},
            {{ix("e" + sm), 1}, {{1, Int(1)}}},
            {{ix("a" + si + "_" + sm), 1}, {{0, Int(-1)}}}});
  return {std::move(simple), std::move(standard), std::move(costandard)};
}

namespace {

// Shared core of the Col/Row/M_n module constructions. Positions per basis
// element of V: `copies` matrix slots; the action couples slot index and the
// matrix indices of M_n(A).
CalModule build_matrix_shaped_module(const SuperAlgebra& mn_a,
                                     const CalModule& v, int n, bool rows,
                                     bool cols, const std::string& tag) {
  const SuperAlgebra& a = v.algebra();
  const int da = a.dim();
  const int dv = v.dim();
  if (mn_a.dim() != da * n * n)
    throw std::invalid_argument("matrix module: algebra is not M_n of the base");
  const int r_copies = rows ? n : 1;
  const int s_copies = cols ? n : 1;
  auto vix = [&](int t, int r, int s) { return (t * r_copies + r) * s_copies + s; };

  std::vector<CalBasisElement> basis(dv * r_copies * s_copies);
  for (int t = 0; t < dv; ++t)
    for (int r = 0; r < r_copies; ++r)
      for (int s = 0; s < s_copies; ++s) {
        std::string name = v.element(t).name + "@";
        if (rows) name += std::to_string(r + 1);
        if (rows && cols) name += ",";
        if (cols) name += std::to_string(s + 1);
        basis[vix(t, r, s)] = {name, v.element(t).parity, v.element(t).cal};
      }

  // index of xi^b_{r,s} in M_n(A) mirrors matrix_superalgebra's layout
  auto aix = [&](int b, int r, int s) { return (b * n + r) * n + s; };
  std::vector<std::vector<Expansion>> action(
      mn_a.dim(), std::vector<Expansion>(basis.size()));
  for (int b = 0; b < da; ++b)
    for (int t = 0; t < dv; ++t) {
      const Expansion& bt = v.act(b, t);  // b.t for left, t.b for right
      if (bt.empty()) continue;
      if (v.side() == Side::left) {
        // xi^b_{p,q} . v^t_{r,s} = delta_{q,r} (b t)^._{p,s}
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < r_copies; ++q)
            for (int s = 0; s < s_copies; ++s) {
              Expansion e;
              for (const auto& [u, c] : bt)
                e.push_back({vix(u, rows ? p : 0, s), c});
              std::sort(e.begin(), e.end());
              action[aix(b, p, q)][vix(t, q, s)] = std::move(e);
            }
      } else {
        // v^t_{r,s} . xi^b_{p,q} = delta_{s,p} (t b)^._{r,q}
        for (int q = 0; q < n; ++q)
          for (int p = 0; p < s_copies; ++p)
            for (int r = 0; r < r_copies; ++r) {
              Expansion e;
              for (const auto& [u, c] : bt)
                e.push_back({vix(u, r, cols ? q : 0), c});
              std::sort(e.begin(), e.end());
              action[aix(b, p, q)][vix(t, r, p)] = std::move(e);
            }
      }
    }
  return CalModule(&mn_a, v.side(), tag + "(" + v.name() + ")", std::move(basis),
                   std::move(action));
}

}  // namespace

CalModule column_module(const SuperAlgebra& mn_a, const CalModule& v, int n) {
  if (v.side() != Side::left)
    throw std::invalid_argument("column_module: expects a left module");
  return build_matrix_shaped_module(mn_a, v, n, true, false,
                                    "Col" + std::to_string(n));
}

CalModule row_module(const SuperAlgebra& mn_a, const CalModule& v, int n) {
  if (v.side() != Side::right)
    throw std::invalid_argument("row_module: expects a right module");
  return build_matrix_shaped_module(mn_a, v, n, false, true,
                                    "Row" + std::to_string(n));
}

CalModule matrix_module(const SuperAlgebra& mn_a, const CalModule& v, int n) {
  return build_matrix_shaped_module(mn_a, v, n, true, true,
                                    "M" + std::to_string(n));
}

std::pair<int, int> hom_dim(const CalModule& v, const CalModule& w) {
  if (&v.algebra() != &w.algebra() || v.side() != Side::left ||
      w.side() != Side::left)
    throw std::invalid_argument("hom_dim: expects left modules over one algebra");
  const SuperAlgebra& alg = v.algebra();
  Field q = Field::rationals();
  const int nv = v.dim(), nw = w.dim();
  int dims[2];
  for (Parity eps : {Parity::even, Parity::odd}) {
    // Unknowns F[wi, vi] with |wi| = |vi| + eps.
    std::vector<int> id(static_cast<size_t>(nw) * nv, -1);
    int nu = 0;
    for (int wi = 0; wi < nw; ++wi)
      for (int vi = 0; vi < nv; ++vi)
        if (w.element(wi).parity == v.element(vi).parity + eps)
          id[static_cast<size_t>(wi) * nv + vi] = nu++;
    KernelTracker tracker(nu, q);
    for (int a = 0; a < alg.dim() && tracker.dim() > 0; ++a) {
      bool flip = is_odd(eps) && is_odd(alg.element(a).parity);
      std::vector<SparseVec> rows;
      for (int wi = 0; wi < nw; ++wi)
        for (int vi = 0; vi < nv; ++vi) {
          SparseVec row;
          for (const auto& [u, c] : v.act(a, vi)) {
            int k = id[static_cast<size_t>(wi) * nv + u];
            if (k >= 0) row[k] += Rat(c);
          }
          for (int u = 0; u < nw; ++u) {
            int k = id[static_cast<size_t>(u) * nv + vi];
            if (k < 0) continue;
            for (const auto& [ww, c] : w.act(a, u))
              if (ww == wi) row[k] += flip ? Rat(c) : Rat(-c);
          }
          for (auto it = row.begin(); it != row.end();)
            it = (it->second == 0) ? row.erase(it) : std::next(it);
          if (!row.empty()) rows.push_back(std::move(row));
        }
      tracker.constrain(rows);
    }
    dims[static_cast<int>(eps)] = tracker.dim();
  }
  return {dims[0], dims[1]};
}

// ---------------------------------------------------------------------------
// JSON round trip.

namespace {

const char* cal_name(CalClass c) {
  switch (c) {
    case CalClass::a_part: return "a";
    case CalClass::c_part: return "c";
    default: return "odd";
  }
}

CalClass cal_from_name(const std::string& s) {
  if (s == "a") return CalClass::a_part;
  if (s == "c") return CalClass::c_part;
  if (s == "odd") return CalClass::odd_part;
  throw std::invalid_argument("bad calibration class '" + s + "'");
}

json basis_to_json(const std::vector<CalBasisElement>& basis) {
  json out = json::array();
  for (const auto& b : basis)
    out.push_back({{"name", b.name},
                   {"parity", b.parity == Parity::even ? "even" : "odd"},
                   {"cal", cal_name(b.cal)}});
  return out;
}

std::vector<CalBasisElement> basis_from_json(const json& j) {
  std::vector<CalBasisElement> out;
  for (const auto& e : j) {
    CalBasisElement b;
    b.name = e.at("name").get<std::string>();
    b.parity = e.at("parity").get<std::string>() == "odd" ? Parity::odd
                                                          : Parity::even;
    b.cal = cal_from_name(e.at("cal").get<std::string>());
    out.push_back(std::move(b));
  }
  return out;
}

json expansion_to_json(const Expansion& e) {
  json out = json::array();
  for (const auto& [i, c] : e) out.push_back({i, c.get_str()});
  return out;
}

Expansion expansion_from_json(const json& j) {
  Expansion out;
  for (const auto& t : j)
    out.push_back({t.at(0).get<int>(), Int(t.at(1).get<std::string>())});
  std::sort(out.begin(), out.end());
  return out;
}

json table_to_json(const std::vector<std::vector<Expansion>>& table) {
  json rows = json::array();
  for (size_t a = 0; a < table.size(); ++a)
    for (size_t c = 0; c < table[a].size(); ++c)
      if (!table[a][c].empty()) {
        for (const auto& [b, coeff] : table[a][c])
          rows.push_back({static_cast<int>(a), static_cast<int>(c), b,
                          coeff.get_str()});
      }
  return rows;
}

std::vector<std::vector<Expansion>> table_from_json(const json& j, int na,
                                                    int nc) {
  std::vector<std::vector<Expansion>> table(na, std::vector<Expansion>(nc));
  for (const auto& row : j) {
    int a = row.at(0).get<int>(), c = row.at(1).get<int>(),
        b = row.at(2).get<int>();
    expansion_accumulate(table[a][c], b, Int(row.at(3).get<std::string>()));
  }
  return table;
}

}  // namespace

json algebra_to_json(const SuperAlgebra& a) {
  json j;
  j["schema"] = 1;
  j["kind"] = "superalgebra";
  j["name"] = a.name();
  j["basis"] = basis_to_json(a.basis());
  std::vector<std::vector<Expansion>> table(a.dim());
  for (int x = 0; x < a.dim(); ++x) {
    table[x].resize(a.dim());
    for (int y = 0; y < a.dim(); ++y) table[x][y] = a.mult(x, y);
  }
  j["mult"] = table_to_json(table);
  j["unit"] = expansion_to_json(a.unit());
  if (a.has_tau()) {
    json t = json::array();
    for (int x = 0; x < a.dim(); ++x) t.push_back(expansion_to_json(a.tau(x)));
    j["tau"] = t;
  }
  if (a.heredity()) {
    const auto& h = *a.heredity();
    j["heredity"] = {{"X", h.X}, {"Y", h.Y}, {"e", h.e}};
  }
  return j;
}

SuperAlgebra algebra_from_json(const json& j) {
  auto basis = basis_from_json(j.at("basis"));
  int n = static_cast<int>(basis.size());
  auto mult = table_from_json(j.at("mult"), n, n);
  Expansion unit = expansion_from_json(j.at("unit"));
  std::optional<std::vector<Expansion>> tau;
  if (j.contains("tau")) {
    std::vector<Expansion> t;
    for (const auto& e : j.at("tau")) t.push_back(expansion_from_json(e));
    tau = std::move(t);
  }
  std::optional<HeredityData> her;
  if (j.contains("heredity")) {
    HeredityData h;
    h.X = j.at("heredity").at("X").get<std::vector<std::vector<int>>>();
    h.Y = j.at("heredity").at("Y").get<std::vector<std::vector<int>>>();
    h.e = j.at("heredity").at("e").get<std::vector<int>>();
    her = std::move(h);
  }
  return SuperAlgebra(j.at("name").get<std::string>(), std::move(basis),
                      std::move(mult), std::move(unit), std::move(tau),
                      std::move(her));
}

json module_to_json(const CalModule& m) {
  json j;
  j["schema"] = 1;
  j["kind"] = "calmodule";
  j["name"] = m.name();
  j["algebra"] = m.algebra().name();
  j["side"] = m.side() == Side::left ? "left" : "right";
  j["basis"] = basis_to_json(m.basis());
  std::vector<std::vector<Expansion>> table(m.algebra().dim());
  for (int a = 0; a < m.algebra().dim(); ++a) {
    table[a].resize(m.dim());
    for (int v = 0; v < m.dim(); ++v) table[a][v] = m.act(a, v);
  }
  j["action"] = table_to_json(table);
  return j;
}

CalModule module_from_json(const json& j, const SuperAlgebra& algebra) {
  if (j.at("algebra").get<std::string>() != algebra.name())
    throw std::invalid_argument("module_from_json: algebra name mismatch");
  auto basis = basis_from_json(j.at("basis"));
  auto action = table_from_json(j.at("action"), algebra.dim(),
                                static_cast<int>(basis.size()));
  Side side = j.at("side").get<std::string>() == "right" ? Side::right
                                                         : Side::left;
  return CalModule(&algebra, side, j.at("name").get<std::string>(),
                   std::move(basis), std::move(action));
}

}  // namespace zzschur
