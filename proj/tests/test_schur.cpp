#include "doctest.h"
#include "zzschur/schur.hpp"

#include "zzschur/linalg.hpp"
#include "zzschur/tilting.hpp"
#include "zzschur/oracle.hpp"
#include <random>

using namespace zzschur;

TEST_CASE("schur algebra dimensions") {
  auto z1 = zigzag(1);
  CHECK(SchurAlgebra(&z1, 2, 1).dim() == 20);
  CHECK(SchurAlgebra(&z1, 2, 2).dim() == 202);
  CHECK(SchurAlgebra(&z1, 1, 2).dim() == 13);
  CHECK(SchurAlgebra(&z1, 2, 0).dim() == 1);
  auto z2 = zigzag(2);
  CHECK(SchurAlgebra(&z2, 2, 2).dim() == 650);
}

TEST_CASE("eta idempotents") {
  auto z = zigzag(1);
  SchurAlgebra s(&z, 2, 2);
  auto weights = all_weights(2, 2, 1);
  REQUIRE(weights.size() == 10);
  Expansion sum;
  for (const auto& la : weights) {
    int i = s.eta_idempotent(la);
    // idempotent
    CHECK(s.mult(i, i) == Expansion{{i, Int(1)}});
    CHECK(s.left_weight(i) == la);
    CHECK(s.right_weight(i) == la);
    sum = expansion_add(sum, {{i, Int(1)}});
    // orthogonality
    for (const auto& mu : weights) {
      if (mu == la) continue;
      CHECK(s.mult(i, s.eta_idempotent(mu)).empty());
    }
  }
  // completeness: sum of eta_la is the unit (multiplying fixes everything)
  for (int x = 0; x < s.dim(); ++x) {
    Expansion ex{{x, Int(1)}};
    CHECK(s.mult(sum, ex) == ex);
    CHECK(s.mult(ex, sum) == ex);
  }
}

TEST_CASE("eta idempotent at degree one is a matrix unit") {
  auto z = zigzag(1);
  SchurAlgebra s(&z, 2, 1);
  Weight la = iota_weight(1, epsilon(2, 2), 2, 1);
  int i = s.eta_idempotent(la);
  // should be the basis element xi^{e1}_{2,2}
  CHECK(s.gamma().index(i).entries ==
        std::vector<int>{s.matrix_index(z.index_of("e1"), 1, 1)});
}

TEST_CASE("weights decompose basis elements") {
  auto z = zigzag(1);
  SchurAlgebra s(&z, 2, 2);
  // eta_la x eta_mu picks the (la, mu) bi-weight component of x
  for (int x = 0; x < s.dim(); ++x) {
    int el = s.eta_idempotent(s.left_weight(x));
    int er = s.eta_idempotent(s.right_weight(x));
    Expansion ex{{x, Int(1)}};
    CHECK(s.mult(Expansion{{el, Int(1)}}, ex) == ex);
    CHECK(s.mult(ex, Expansion{{er, Int(1)}}) == ex);
  }
}

TEST_CASE("regular character of T^Z(1,1)") {
  auto z = zigzag(1);
  SchurAlgebra s(&z, 1, 1);
  REQUIRE(s.dim() == 5);
  Character ch;
  for (int i = 0; i < s.dim(); ++i) ch[s.left_weight(i)] += 1;
  Weight w0 = iota_weight(0, epsilon(1, 1), 1, 1);
  Weight w1 = iota_weight(1, epsilon(1, 1), 1, 1);
  CHECK(ch[w0] == 3);
  CHECK(ch[w1] == 2);
}

TEST_CASE("tau_nd") {
  auto z = zigzag(1);
  SchurAlgebra s1(&z, 2, 1);
  // d = 1: tau(xi^{a01}_{1,2}) = xi^{a10}_{2,1}
  int x = s1.gamma().index_of({s1.matrix_index(z.index_of("a0_1"), 0, 1)});
  int y = s1.gamma().index_of({s1.matrix_index(z.index_of("a1_0"), 1, 0)});
  CHECK(s1.tau_nd(x) == Expansion{{y, Int(1)}});

  SchurAlgebra s(&z, 2, 2);
  // tau fixes every eta_la
  for (const auto& la : all_weights(2, 2, 1)) {
    int i = s.eta_idempotent(la);
    CHECK(s.tau_nd(i) == Expansion{{i, Int(1)}});
  }
  // involution on the full basis
  for (int i = 0; i < s.dim(); ++i) {
    Expansion ti = s.tau_nd(i);
    Expansion back;
    for (const auto& [j, c] : ti)
      back = expansion_add(back, expansion_scale(s.tau_nd(j), c));
    CHECK(back == Expansion{{i, Int(1)}});
  }
}

TEST_CASE("column module of an idempotent summand") {
  auto z = zigzag(1);
  TiltingBimodule t(&z);
  SchurAlgebra s(&z, 2, 2);
  // Gamma~^2 Col_2(Z e_0): 4 even + 2 odd carrier, dimension 19
  CalModule pit1 = t.pit_module(1);
  GammaVectorModule m(s, pit1);
  CHECK(m.dim() == 19);
  // d = 0 gives the trivial module
  SchurAlgebra s0(&z, 2, 0);
  GammaVectorModule m0(s0, pit1);
  CHECK(m0.dim() == 1);
  // matches the eta-idempotent corner dimension: T^Z(2,2) eta_{iota_0(2)}
  Weight la = iota_weight(0, Composition{2, 0}, 2, 1);
  int eta = s.eta_idempotent(la);
  int corner = 0;
  for (int x = 0; x < s.dim(); ++x)
    if (!s.mult(x, eta).empty() && s.right_weight(x) == la) ++corner;
  CHECK(corner == 19);
}

TEST_CASE("weight character by counting equals projector ranks") {
  auto z = zigzag(1);
  TiltingBimodule t(&z);
  SchurAlgebra s(&z, 2, 2);
  for (int i : {0, 1}) {
    CalModule pit = t.pit_module(i);
    GammaVectorModule m(s, pit);
    CHECK(m.weight_character() == weight_character_by_rank(s, m.dp()));
  }
}

TEST_CASE("character of a tensor-style pair multiplies") {
  // ch is multiplicative across the two column factors of a split carrier:
  // counting weights of Gamma~^d Col over V + W against the convolution
  auto z = zigzag(1);
  TiltingBimodule t(&z);
  SchurAlgebra s2(&z, 2, 2);
  SchurAlgebra s1(&z, 2, 1);
  CalModule p0 = t.pit_module(0);
  CalModule p1 = t.pit_module(1);
  // direct sum carrier
  std::vector<CalBasisElement> basis;
  for (const auto& b : p0.basis()) basis.push_back(b);
  for (const auto& b : p1.basis()) basis.push_back(b);
  std::vector<std::vector<Expansion>> action(z.dim(),
                                             std::vector<Expansion>(basis.size()));
  for (int a = 0; a < z.dim(); ++a) {
    for (int v = 0; v < p0.dim(); ++v) action[a][v] = p0.act(a, v);
    for (int v = 0; v < p1.dim(); ++v) {
      Expansion e = p1.act(a, v);
      for (auto& tm : e) tm.first += p0.dim();
      action[a][p0.dim() + v] = std::move(e);
    }
  }
  CalModule sum(&z, Side::left, "T0+T1", basis, action);
  GammaVectorModule big(s2, sum);
  SchurAlgebra s0(&z, 2, 0);
  Character lhs = big.weight_character();
  // the star decomposition splits the character into bidegree products
  Character rhs;
  std::vector<const SchurAlgebra*> at{&s0, &s1, &s2};
  for (int d1 = 0; d1 <= 2; ++d1) {
    GammaVectorModule g0(*at[d1], p0);
    GammaVectorModule g1(*at[2 - d1], p1);
    for (const auto& [w, c] :
         char_product(g0.weight_character(), g1.weight_character(), 2, 1))
      rhs[w] += c;
  }
  CHECK(lhs == rhs);
}

TEST_CASE("row module over the dual algebra matches its oracle") {
  auto z = zigzag(1);
  TiltingBimodule t(&z);
  const SuperAlgebra& zd = t.dual_algebra();
  SchurAlgebra sd(&zd, 2, 2);
  // T as a right Z'-module, lifted to Gamma~^2 Row_2
  GammaVectorModule m(sd, t.right_module());
  CHECK(m.side() == Side::right);
  CHECK(m.dim() == 32);  // Row_2(T): 4 even + 4 odd, C(8,2) + 4
  // spot-check the right action against the tensor oracle
  for (int a = 0; a < sd.dim(); a += 17)
    for (int v = 0; v < m.dim(); ++v)
      CHECK(m.act(a, v) == oracle_action(m.dp(), a, v));
  // weights decompose the basis
  long total = 0;
  for (const auto& [w, c] : m.weight_character()) total += c;
  CHECK(total == m.dim());
}

TEST_CASE("tau_nd is signed anti-multiplicative") {
  auto z = zigzag(1);
  // exhaustive at d = 1 through materialization
  SchurAlgebra s1(&z, 2, 1);
  CHECK(anti_involution_audit(s1.gamma().materialize()));
  // seeded samples at (2,2)
  SchurAlgebra s(&z, 2, 2);
  std::mt19937 rng(77001u);
  std::uniform_int_distribution<int> pick(0, s.dim() - 1);
  for (int k = 0; k < 500; ++k) {
    int x = pick(rng), y = pick(rng);
    Expansion lhs;
    for (const auto& [i, c] : s.mult(x, y))
      lhs = expansion_add(lhs, expansion_scale(s.tau_nd(i), c));
    Expansion rhs = s.mult(s.tau_nd(y), s.tau_nd(x));
    if (is_odd(s.parity(x)) && is_odd(s.parity(y)))
      rhs = expansion_scale(rhs, Int(-1));
    CHECK(lhs == rhs);
  }
}
