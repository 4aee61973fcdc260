#include "zzschur/tilting.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zzschur/linalg.hpp"

namespace zzschur {

namespace {

struct ZigzagNames {
  int ell;
  std::string e(int i) const { return "e" + std::to_string(i); }
  std::string c(int j) const { return "c" + std::to_string(j); }
  std::string a(int i, int j) const {
    return "a" + std::to_string(i) + "_" + std::to_string(j);
  }
};

}  // namespace

TiltingBimodule::TiltingBimodule(const SuperAlgebra* z) : z_(z) {
  ell_ = (z_->dim() - 1) / 4;
  if (z_->dim() != 4 * ell_ + 1 || ell_ < 1)
    throw std::invalid_argument("TiltingBimodule: not a zigzag algebra");
  ZigzagNames nm{ell_};

  // Basis of T: v0, then Ze_0, ..., Ze_{ell-1} in the order of Z's basis.
  basis_.push_back({"v0", Parity::odd, CalClass::odd_part});
  lsum_.assign(ell_ + 1, {});
  lsum_.at(0).push_back(0);
  std::vector<int> zelem;  // Z-basis index of each T-basis element; -1 for v0
  zelem.push_back(-1);
  for (int i = 1; i <= ell_; ++i) {
    int src = i - 1;
    std::vector<std::string> names{nm.e(src), nm.c(src)};
    if (src > 0) names.push_back(nm.a(src - 1, src));
    names.push_back(nm.a(src + 1, src));
    std::vector<int> zidx;
    for (const auto& s : names) zidx.push_back(z_->index_of(s));
    std::sort(zidx.begin(), zidx.end());
    for (int b : zidx) {
      lsum_[i].push_back(static_cast<int>(basis_.size()));
      basis_.push_back(z_->element(b));
      zelem.push_back(b);
    }
  }
  const int dt = dim();
  lsum_of_.assign(dt, -1);
  for (int i = 0; i <= ell_; ++i)
    for (int t : lsum_[i]) lsum_of_[t] = i;

  // Left action: regular on the Ze_j summands; on PiL(0) only e_0 acts.
  std::vector<std::vector<Expansion>> laction(z_->dim(),
                                              std::vector<Expansion>(dt));
  std::vector<int> t_of_z(z_->dim(), -1);
  for (int t = 0; t < dt; ++t)
    if (zelem[t] >= 0) t_of_z[zelem[t]] = t;
  int e0 = z_->index_of(nm.e(0));
  laction[e0][0] = {{0, Int(1)}};
  for (int a = 0; a < z_->dim(); ++a)
    for (int t = 1; t < dt; ++t) {
      Expansion e;
      for (const auto& [b, c] : z_->mult(a, zelem[t])) {
        if (t_of_z[b] < 0)
          throw std::logic_error("tilting: left action leaves the summand");
        e.push_back({t_of_z[b], c});
      }
      std::sort(e.begin(), e.end());
      laction[a][t] = std::move(e);
    }
  left_ = std::make_unique<CalModule>(z_, Side::left, "T", basis_,
                                      std::move(laction));

  // Primed generators as endomorphism matrices m[out][in].
  auto zero_matrix = [dt] {
    return std::vector<std::vector<Int>>(dt, std::vector<Int>(dt, Int(0)));
  };
  auto right_mult = [&](int zb, int sign_by_parity) {
    // v -> (+-)^{|v|} v . zb, defined on the Ze_j summands
    auto m = zero_matrix();
    for (int t = 1; t < dt; ++t) {
      for (const auto& [b, c] : z_->mult(zelem[t], zb)) {
        if (t_of_z[b] < 0) throw std::logic_error("tilting: right mult escapes T");
        Int v = c;
        if (sign_by_parity && basis_[t].parity == Parity::odd) v = -v;
        m[t_of_z[b]][t] += v;
      }
    }
    return m;
  };
  auto project = [&](int i) {  // onto PiT(i)
    auto m = zero_matrix();
    for (int t : lsum_[i]) m[t][t] = 1;
    return m;
  };
  auto compose = [&](const std::vector<std::vector<Int>>& f,
                     const std::vector<std::vector<Int>>& g) {
    // f after g
    auto m = zero_matrix();
    for (int i = 0; i < dt; ++i)
      for (int k = 0; k < dt; ++k) {
        if (g[k][i] == 0) continue;
        for (int j = 0; j < dt; ++j)
          if (f[j][k] != 0) m[j][i] += f[j][k] * g[k][i];
      }
    return m;
  };

  // Z' basis layout mirrors Z: e'_0.., c'_0.., a'_{0,1}, a'_{1,0}, ...
  primed_.assign(z_->dim(), {});
  auto zix = [&](const std::string& s) { return z_->index_of(s); };
  for (int i = 0; i <= ell_; ++i) primed_[zix(nm.e(i))] = project(ell_ - i);
  for (int i = 0; i < ell_; ++i) {
    // c'_i = iota_{l-i} rho_{c_{l-i-1}} pi_{l-i}
    auto rc = right_mult(zix(nm.c(ell_ - i - 1)), 0);
    primed_[zix(nm.c(i))] = compose(rc, project(ell_ - i));
  }
  for (int i = 0; i + 1 < ell_; ++i) {
    // a'_{i+1,i} = iota_{l-i} rho_{a_{l-i-2, l-i-1}} pi_{l-i-1}
    auto ra = right_mult(zix(nm.a(ell_ - i - 2, ell_ - i - 1)), 1);
    primed_[zix(nm.a(i + 1, i))] = compose(ra, project(ell_ - i - 1));
    // a'_{i,i+1} = iota_{l-i-1} rho_{a_{l-i-1, l-i-2}} pi_{l-i}
    auto rb = right_mult(zix(nm.a(ell_ - i - 1, ell_ - i - 2)), 1);
    primed_[zix(nm.a(i, i + 1))] = compose(rb, project(ell_ - i));
  }
  {
    // a'_{l,l-1} = iota_1 f pi_0. The embedding is normalized as
    // f: v0 -> -c0 so that a'_{l-1,l} a'_{l,l-1} = +c'_{l-1} in the sop
    // product; with v0 -> +c0 the cycle relation picks up a global sign.
    auto m = zero_matrix();
    m[t_of_z[zix(nm.c(0))]][0] = -1;
    primed_[zix(nm.a(ell_, ell_ - 1))] = std::move(m);
    // a'_{l-1,l} = iota_0 g pi_1 with g: e0 -> v0, rest of Ze_0 -> 0
    auto g = zero_matrix();
    g[0][t_of_z[zix(nm.e(0))]] = 1;
    primed_[zix(nm.a(ell_ - 1, ell_))] = std::move(g);
  }

  // Structure constants of Z' from sop composition, expressed in the primed
  // basis via an exact solve.
  const int dz = z_->dim();
  Field q = Field::rationals();
  ExactMatrix coords(dt * dt, dz, q);
  for (int a = 0; a < dz; ++a)
    for (int i = 0; i < dt; ++i)
      for (int j = 0; j < dt; ++j)
        if (primed_[a][i][j] != 0)
          coords.set(i * dt + j, a, Rat(primed_[a][i][j]));
  std::vector<std::vector<Expansion>> dmult(dz, std::vector<Expansion>(dz));
  for (int a = 0; a < dz; ++a)
    for (int b = 0; b < dz; ++b) {
      bool both_odd = z_->element(a).parity == Parity::odd &&
                      z_->element(b).parity == Parity::odd;
      // a . b in Z' is (-1)^{|a||b|} (composition b after a)
      auto prod = compose(primed_[b], primed_[a]);
      SparseVec rhs;
      for (int i = 0; i < dt; ++i)
        for (int j = 0; j < dt; ++j)
          if (prod[i][j] != 0)
            rhs[i * dt + j] = both_odd ? Rat(-prod[i][j]) : Rat(prod[i][j]);
      auto sol = coords.solve(rhs);
      if (!sol)
        throw std::logic_error("tilting: sop product leaves the primed span");
      Expansion e;
      for (const auto& [k, v] : *sol) {
        if (v.get_den() != 1)
          throw std::logic_error("tilting: non-integral dual structure constant");
        expansion_accumulate(e, k, v.get_num());
      }
      dmult[a][b] = std::move(e);
    }

  std::vector<CalBasisElement> dbasis(z_->basis());
  for (auto& b : dbasis) b.name += "'";
  Expansion dunit;
  for (int i = 0; i <= ell_; ++i) dunit.push_back({zix(nm.e(i)), Int(1)});
  std::sort(dunit.begin(), dunit.end());
  std::vector<Expansion> dtau(dz);
  for (int a = 0; a < dz; ++a) dtau[a] = z_->tau(a);
  HeredityData dher = *z_->heredity();
  dual_ = std::make_unique<SuperAlgebra>("Z'(" + std::to_string(ell_) + ")",
                                         std::move(dbasis), std::move(dmult),
                                         std::move(dunit), std::move(dtau),
                                         std::move(dher));

  // Right action: t . phi = (-1)^{|t||phi|} phi(t).
  std::vector<std::vector<Expansion>> raction(dz, std::vector<Expansion>(dt));
  for (int a = 0; a < dz; ++a) {
    bool aodd = z_->element(a).parity == Parity::odd;
    for (int t = 0; t < dt; ++t) {
      bool flip = aodd && basis_[t].parity == Parity::odd;
      Expansion e;
      for (int out = 0; out < dt; ++out) {
        Int c = primed_[a][out][t];
        if (c != 0) e.push_back({out, flip ? Int(-c) : c});
      }
      raction[a][t] = std::move(e);
    }
  }
  right_ = std::make_unique<CalModule>(dual_.get(), Side::right, "T", basis_,
                                       std::move(raction));

  // PiT'(i) spans from the explicit lists.
  rsum_.assign(ell_ + 1, {});
  auto tix = [&](const std::string& s) {
    for (int t = 0; t < dt; ++t)
      if (basis_[t].name == s) return t;
    throw std::logic_error("tilting: missing element " + s);
  };
  rsum_[0].push_back(tix(nm.a(ell_, ell_ - 1)));
  {
    std::vector<std::string> top{"v0", nm.e(0), nm.c(0)};
    if (ell_ > 1) top.push_back(nm.a(0, 1));
    for (const auto& s : top) rsum_[ell_].push_back(tix(s));
  }
  for (int i = 1; i < ell_; ++i) {
    std::vector<std::string> names{nm.e(ell_ - i), nm.a(ell_ - i, ell_ - i - 1),
                                   nm.c(ell_ - i)};
    if (i != 1) names.push_back(nm.a(ell_ - i, ell_ - i + 1));
    for (const auto& s : names) rsum_[i].push_back(tix(s));
  }
  rsum_of_.assign(dt, -1);
  for (int i = 0; i <= ell_; ++i)
    for (int t : rsum_[i]) {
      if (rsum_of_[t] >= 0)
        throw std::logic_error("tilting: right summands overlap");
      rsum_of_[t] = i;
    }
  for (int t = 0; t < dt; ++t)
    if (rsum_of_[t] < 0)
      throw std::logic_error("tilting: right summands miss a basis element");
}

CalModule TiltingBimodule::pit_module(int i) const {
  if (i < 0 || i > ell_)
    throw std::invalid_argument("pit_module: index out of range");
  const auto& members = lsum_[i];
  std::vector<CalBasisElement> basis;
  for (int t : members) basis.push_back(basis_[t]);
  std::vector<int> local(dim(), -1);
  for (size_t k = 0; k < members.size(); ++k) local[members[k]] = static_cast<int>(k);
  std::vector<std::vector<Expansion>> action(
      z_->dim(), std::vector<Expansion>(members.size()));
  for (int a = 0; a < z_->dim(); ++a)
    for (size_t k = 0; k < members.size(); ++k) {
      Expansion e;
      for (const auto& [t, c] : left_->act(a, members[k])) {
        if (local[t] < 0) throw std::logic_error("pit_module: not a submodule");
        e.push_back({local[t], c});
      }
      std::sort(e.begin(), e.end());
      action[a][k] = std::move(e);
    }
  return CalModule(z_, Side::left, "PiT(" + std::to_string(i) + ")",
                   std::move(basis), std::move(action));
}

AuditReport ringel_dual_audit(const TiltingBimodule& t) {
  AuditReport report;
  const SuperAlgebra& z = t.zigzag_algebra();
  const SuperAlgebra& zd = t.dual_algebra();
  const int dz = z.dim();
  const int dt = t.dim();
  ZigzagNames nm{t.ell()};

  // (i) the primed elements are linearly independent, 4l + 1 of them
  {
    Field q = Field::rationals();
    ExactMatrix coords(dt * dt, dz, q);
    for (int a = 0; a < dz; ++a)
      for (int i = 0; i < dt; ++i)
        for (int j = 0; j < dt; ++j)
          if (t.primed_matrix(a)[i][j] != 0)
            coords.set(i * dt + j, a, Rat(t.primed_matrix(a)[i][j]));
    int r = coords.rank();
    report.add("primed elements are a basis of size 4l+1", r == dz,
               r == dz ? "" : "rank " + std::to_string(r) + " of " +
                                  std::to_string(dz));
    // parities as expected: each primed matrix is homogeneous of the parity
    // of its unprimed counterpart
    bool hom = true;
    std::string witness;
    for (int a = 0; a < dz && hom; ++a) {
      Parity pa = z.element(a).parity;
      for (int i = 0; i < dt && hom; ++i)
        for (int j = 0; j < dt; ++j)
          if (t.primed_matrix(a)[i][j] != 0 &&
              t.basis()[i].parity != t.basis()[j].parity + pa) {
            hom = false;
            witness = zd.element(a).name;
            break;
          }
    }
    report.add("primed generators are homogeneous", hom, witness);
  }

  // e'_i are orthogonal idempotents summing to the identity
  {
    bool pass = true;
    std::string witness;
    for (int i = 0; i <= t.ell() && pass; ++i) {
      int ei = z.index_of(nm.e(i));
      for (int j = 0; j <= t.ell() && pass; ++j) {
        int ej = z.index_of(nm.e(j));
        Expansion p = zd.mult(ei, ej);
        Expansion want = i == j ? Expansion{{ei, Int(1)}} : Expansion{};
        if (p != want) {
          pass = false;
          witness = "e'" + std::to_string(i) + " e'" + std::to_string(j);
        }
      }
    }
    if (pass) {
      Expansion sum;
      for (int i = 0; i <= t.ell(); ++i)
        sum = expansion_add(sum, {{z.index_of(nm.e(i)), Int(1)}});
      if (sum != zd.unit()) {
        pass = false;
        witness = "sum of e'_i is not the unit";
      }
    }
    report.add("e'_i are orthogonal idempotents summing to id", pass, witness);
  }

  // (ii) the defining zigzag relations hold in the sop product
  {
    bool pass = true;
    std::string witness;
    auto expect = [&](const std::string& x, const std::string& y,
                      const Expansion& want) {
      Expansion got = zd.mult(z.index_of(x), z.index_of(y));
      if (got != want && pass) {
        pass = false;
        witness = x + "' * " + y + "'";
      }
    };
    for (int i = 0; i < t.ell(); ++i) {
      Expansion ci{{z.index_of(nm.c(i)), Int(1)}};
      expect(nm.a(i, i + 1), nm.a(i + 1, i), ci);
      if (i + 1 < t.ell())
        expect(nm.a(i + 1, i), nm.a(i, i + 1),
               Expansion{{z.index_of(nm.c(i + 1)), Int(1)}});
    }
    expect(nm.a(t.ell(), t.ell() - 1), nm.a(t.ell() - 1, t.ell()), {});
    // c' annihilates the arrows
    expect(nm.c(0), nm.a(0, 1), {});
    report.add("zigzag relations hold for the primed elements", pass, witness);
  }

  // (iii) the primed map transports all structure constants exactly
  {
    bool pass = true;
    std::string witness;
    for (int a = 0; a < dz && pass; ++a)
      for (int b = 0; b < dz; ++b)
        if (zd.mult(a, b) != z.mult(a, b)) {
          pass = false;
          witness = zd.element(a).name + " * " + zd.element(b).name;
          break;
        }
    report.add("structure constants transport along the primed map", pass,
               witness);
  }

  // bimodule: (z t) z' = z (t z') over all basis triples
  {
    bool pass = true;
    std::string witness;
    const CalModule& L = t.left_module();
    const CalModule& R = t.right_module();
    for (int a = 0; a < dz && pass; ++a)
      for (int b = 0; b < dz && pass; ++b)
        for (int v = 0; v < dt; ++v) {
          Expansion lhs = R.act(Expansion{{b, Int(1)}}, L.act(a, v));
          Expansion rhs = L.act(Expansion{{a, Int(1)}}, R.act(b, v));
          if (lhs != rhs) {
            pass = false;
            witness = "(" + z.element(a).name + ", " + t.basis()[v].name +
                      ", " + zd.element(b).name + ")";
            break;
          }
        }
    report.add("left and right actions commute", pass, witness);
  }

  // a T_a a' stays in T_a
  {
    bool pass = true;
    std::string witness;
    const CalModule& L = t.left_module();
    const CalModule& R = t.right_module();
    for (int i = 0; i <= t.ell() && pass; ++i)
      for (int j = 0; j <= t.ell() && pass; ++j)
        for (int v = 0; v < dt; ++v) {
          if (t.basis()[v].cal != CalClass::a_part) continue;
          Expansion w = R.act(Expansion{{z.index_of(nm.e(j)), Int(1)}},
                              L.act(z.index_of(nm.e(i)), v));
          for (const auto& [u, c] : w) {
            (void)c;
            if (t.basis()[u].cal != CalClass::a_part) {
              pass = false;
              witness = t.basis()[v].name;
              break;
            }
          }
          if (!pass) break;
        }
    report.add("e T_a e' containment", pass, witness);
  }

  // right summands are right-stable and partition the basis
  {
    bool pass = true;
    std::string witness;
    const CalModule& R = t.right_module();
    for (int i = 0; i <= t.ell() && pass; ++i)
      for (int v : t.right_summands()[i]) {
        for (int a = 0; a < dz; ++a)
          for (const auto& [u, c] : R.act(a, v)) {
            (void)c;
            if (t.right_summand(u) != i) {
              pass = false;
              witness = t.basis()[v].name + " . " + zd.element(a).name;
              break;
            }
          }
        if (!pass) break;
      }
    report.add("PiT'(i) spans are right submodules", pass, witness);
    // expected dimensions: 1, then 4 with documented drops
    bool dims = static_cast<int>(t.right_summands()[0].size()) == 1;
    for (int i = 1; i <= t.ell(); ++i) {
      int expect = 4;
      if (i == 1 && t.ell() == 1) expect = 3;       // drop a_{0,1}
      else if (i == 1) expect = 3;                  // drop a_{l-1,l}
      else if (i == t.ell()) expect = 4;            // v0, e0, c0, a_{0,1}
      if (static_cast<int>(t.right_summands()[i].size()) != expect) dims = false;
    }
    report.add("PiT'(i) dimensions match", dims, "");
  }

  return report;
}

Gram pit_form(const TiltingBimodule& t, int i) {
  if (i < 1 || i > t.ell())
    throw std::invalid_argument("pit_form: defined for 1 <= i <= ell");
  CalModule m = t.pit_module(i);
  const int n = m.dim();
  Gram g(n, std::vector<Rat>(n, Rat(0)));
  int e = m.index_of("e" + std::to_string(i - 1));
  int c = m.index_of("c" + std::to_string(i - 1));
  g[e][c] = 1;
  g[c][e] = -1;
  for (int k = 0; k < n; ++k)
    if (m.element(k).parity == Parity::odd) g[k][k] = 1;
  return g;
}

nlohmann::json tilting_to_json(const TiltingBimodule& t) {
  using nlohmann::json;
  json j;
  j["schema"] = 1;
  j["ell"] = t.ell();
  json basis = json::array();
  for (int k = 0; k < t.dim(); ++k) {
    const auto& b = t.basis()[k];
    basis.push_back({{"name", b.name},
                     {"parity", b.parity == Parity::even ? "even" : "odd"},
                     {"cal", b.cal == CalClass::a_part   ? "a"
                             : b.cal == CalClass::c_part ? "c"
                                                         : "odd"},
                     {"left_summand", t.left_summand(k)},
                     {"right_summand", t.right_summand(k)}});
  }
  j["basis"] = basis;
  auto table = [&](const CalModule& m) {
    json rows = json::array();
    for (int a = 0; a < m.algebra().dim(); ++a)
      for (int v = 0; v < m.dim(); ++v)
        for (const auto& [w, c] : m.act(a, v))
          rows.push_back({m.algebra().element(a).name, v, w, c.get_str()});
    return rows;
  };
  j["left_action"] = table(t.left_module());
  j["right_action"] = table(t.right_module());
  j["dual_algebra"] = algebra_to_json(t.dual_algebra());
  return j;
}

bool contravariance_audit(const CalModule& v, const Gram& gram) {
  const SuperAlgebra& a = v.algebra();
  if (!a.has_tau()) return false;
  for (int x = 0; x < a.dim(); ++x) {
    bool xodd = a.element(x).parity == Parity::odd;
    for (int p = 0; p < v.dim(); ++p)
      for (int q = 0; q < v.dim(); ++q) {
        Rat lhs(0);
        for (const auto& [u, cu] : v.act(x, p)) lhs += Rat(cu) * gram[u][q];
        Rat rhs(0);
        for (const auto& [y, cy] : a.tau(x))
          for (const auto& [u, cu] : v.act(y, q))
            rhs += Rat(cy * cu) * gram[p][u];
        bool flip = xodd && v.element(p).parity == Parity::odd;
        if (lhs != (flip ? Rat(-rhs) : rhs)) return false;
      }
  }
  return true;
}

}  // namespace zzschur
