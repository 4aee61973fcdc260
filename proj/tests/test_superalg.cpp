#include "doctest.h"
#include "zzschur/superalg.hpp"

#include <nlohmann/json.hpp>

using namespace zzschur;

TEST_CASE("zigzag dimensions and parity split") {
  auto z1 = zigzag(1);
  CHECK(z1.dim() == 5);
  CHECK(z1.even_dim() == 3);  // e0, e1, c0
  CHECK(z1.odd_dim() == 2);
  auto z2 = zigzag(2);
  CHECK(z2.dim() == 9);
  CHECK_THROWS_AS(zigzag(0), std::invalid_argument);
}

TEST_CASE("zigzag relations") {
  auto z = zigzag(1);
  int a01 = z.index_of("a0_1"), a10 = z.index_of("a1_0"), c0 = z.index_of("c0");
  // a_{0,1} a_{1,0} = c_0 and a_{1,0} a_{0,1} = 0 at the end vertex
  CHECK(z.mult(a01, a10) == Expansion{{c0, Int(1)}});
  CHECK(z.mult(a10, a01).empty());

  auto z3 = zigzag(3);
  // interior two-cycles agree: a_{1,0} a_{0,1} = c_1 = a_{1,2} a_{2,1}
  Expansion c1{{z3.index_of("c1"), Int(1)}};
  CHECK(z3.mult(z3.index_of("a1_0"), z3.index_of("a0_1")) == c1);
  CHECK(z3.mult(z3.index_of("a1_2"), z3.index_of("a2_1")) == c1);
  // the only vanishing two-cycle sits at the end vertex
  CHECK(z3.mult(z3.index_of("a3_2"), z3.index_of("a2_3")).empty());
  CHECK_FALSE(z3.mult(z3.index_of("a2_3"), z3.index_of("a3_2")).empty());
  // c annihilates everything except its idempotent
  CHECK(z3.mult(z3.index_of("c1"), z3.index_of("c1")).empty());
  CHECK(z3.mult(z3.index_of("c1"), z3.index_of("a1_0")).empty());
  CHECK(z3.mult(z3.index_of("e1"), z3.index_of("c1")) == c1);
}

TEST_CASE("zigzag path grading") {
  auto z = zigzag(2);
  auto grade = [&](int i) {
    const auto& n = z.element(i).name;
    if (n[0] == 'e') return 0;
    if (n[0] == 'a') return 1;
    return 2;
  };
  for (int x = 0; x < z.dim(); ++x)
    for (int y = 0; y < z.dim(); ++y) {
      int g = grade(x) + grade(y);
      for (const auto& [b, c] : z.mult(x, y)) {
        (void)c;
        CHECK(grade(b) == g);
        CHECK(g <= 2);
      }
    }
}

TEST_CASE("zigzag idempotents sum to one") {
  auto z = zigzag(3);
  Expansion sum;
  for (int i = 0; i <= 3; ++i)
    sum = expansion_add(sum, {{z.index_of("e" + std::to_string(i)), Int(1)}});
  CHECK(sum == z.unit());
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      int ei = z.index_of("e" + std::to_string(i));
      int ej = z.index_of("e" + std::to_string(j));
      Expansion p = z.mult(ei, ej);
      if (i == j)
        CHECK(p == Expansion{{ei, Int(1)}});
      else
        CHECK(p.empty());
    }
}

TEST_CASE("anti-involution audit") {
  CHECK(anti_involution_audit(zigzag(1)));
  CHECK(anti_involution_audit(zigzag(3)));

  // flipping the sign of tau on c breaks anti-multiplicativity
  auto z = zigzag(1);
  std::vector<Expansion> bad;
  for (int i = 0; i < z.dim(); ++i) bad.push_back(z.tau(i));
  bad[z.index_of("c0")] = {{z.index_of("c0"), Int(1)}};
  z.set_tau(std::move(bad));
  CHECK_FALSE(anti_involution_audit(z));
}

TEST_CASE("heredity audit passes for the zigzag algebra") {
  for (int ell : {1, 2, 3}) {
    auto report = heredity_audit(zigzag(ell));
    for (const auto& c : report.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("heredity audit detects stripped data") {
  auto z = zigzag(1);
  HeredityData broken = *z.heredity();
  broken.X[1] = {z.index_of("e1")};
  broken.Y[1] = {z.index_of("e1")};
  auto report = heredity_audit(z, broken);
  CHECK_FALSE(report.all_pass());
  CHECK_FALSE(report.checks[0].pass);  // products span too little
}

TEST_CASE("matrix superalgebra") {
  auto z = zigzag(1);
  auto m2 = matrix_superalgebra(z, 2);
  CHECK(m2.dim() == 20);
  CHECK(m2.even_dim() == 12);
  CHECK(m2.odd_dim() == 8);

  int x = m2.index_of("e0@1,2");
  int y = m2.index_of("e0@2,1");
  int d = m2.index_of("e0@1,1");
  CHECK(m2.mult(x, y) == Expansion{{d, Int(1)}});
  CHECK(m2.mult(x, x).empty());
  CHECK(anti_involution_audit(m2));
}

TEST_CASE("zigzag modules") {
  auto z = zigzag(2);
  auto m0 = zigzag_modules(z, 0);
  CHECK(m0.standard.dim() == 1);
  CHECK(m0.costandard.dim() == 1);

  auto m2 = zigzag_modules(z, 2);
  CHECK(m2.standard.dim() == 2);
  // e1 w2 = w2, a_{1,2} v2 = w2, c acts as zero
  int w = 1, v = 0;
  CHECK(m2.standard.act(z.index_of("e1"), w) == Expansion{{w, Int(1)}});
  CHECK(m2.standard.act(z.index_of("a1_2"), v) == Expansion{{w, Int(1)}});
  CHECK(m2.standard.act(z.index_of("c0"), v).empty());
  CHECK(m2.standard.act(z.index_of("c1"), w).empty());
  // nabla: a_{2,1} w* = -v*
  CHECK(m2.costandard.act(z.index_of("a2_1"), w) == Expansion{{v, Int(-1)}});

  CHECK_THROWS_AS(zigzag_modules(z, 3), std::invalid_argument);
}

TEST_CASE("hom orthogonality of standard and costandard modules") {
  for (int ell : {1, 2, 3}) {
    auto z = zigzag(ell);
    for (int i = 0; i <= ell; ++i) {
      auto mi = zigzag_modules(z, i);
      for (int j = 0; j <= ell; ++j) {
        auto mj = zigzag_modules(z, j);
        auto [ev, od] = hom_dim(mi.standard, mj.costandard);
        INFO("ell=" << ell << " i=" << i << " j=" << j);
        CHECK(ev + od == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("algebra json round trip") {
  auto z = zigzag(2);
  auto j = algebra_to_json(z);
  auto z2 = algebra_from_json(j);
  CHECK(z2.dim() == z.dim());
  for (int a = 0; a < z.dim(); ++a) {
    CHECK(z2.element(a).name == z.element(a).name);
    for (int b = 0; b < z.dim(); ++b) CHECK(z2.mult(a, b) == z.mult(a, b));
  }
  CHECK(anti_involution_audit(z2));
  CHECK(heredity_audit(z2).all_pass());
}

TEST_CASE("module json round trip") {
  auto z = zigzag(1);
  auto mods = zigzag_modules(z, 1);
  auto j = module_to_json(mods.standard);
  auto m = module_from_json(j, z);
  CHECK(m.dim() == 2);
  for (int a = 0; a < z.dim(); ++a)
    for (int v = 0; v < m.dim(); ++v)
      CHECK(m.act(a, v) == mods.standard.act(a, v));
}
