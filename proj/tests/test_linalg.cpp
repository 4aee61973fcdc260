#include "doctest.h"
#include "zzschur/linalg.hpp"

#include <random>

using namespace zzschur;

TEST_CASE("field parsing and arithmetic") {
  Field q = Field::parse("Q");
  CHECK(q.is_rational());
  Field f2 = Field::parse("F2");
  CHECK(f2.characteristic() == 2);
  CHECK(f2.from_int(Int(-1)) == Rat(1));  // -1 = 1 in F_2
  CHECK_THROWS_AS(Field::parse("F4"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("nonsense"), std::invalid_argument);

  Field f7 = Field::prime_field(7);
  Rat x = f7.from_int(Int(10));
  CHECK(x == Rat(3));
  CHECK(f7.mul(x, f7.inv(x)) == Rat(1));
  CHECK(f7.canon(Rat(1, 2)) == Rat(4));  // 1/2 = 4 mod 7
}

TEST_CASE("rank and kernel over Q") {
  Field q = Field::rationals();
  ExactMatrix id2(2, 2, q);
  id2.set(0, 0, 1);
  id2.set(1, 1, 1);
  CHECK(id2.rank() == 2);
  CHECK(id2.kernel_basis().empty());

  ExactMatrix z(3, 5, q);
  CHECK(z.rank() == 0);
  CHECK(z.kernel_basis().size() == 5);

  // [[2,4],[1,2]] has rank 1
  ExactMatrix m(2, 2, q);
  m.set(0, 0, 2);
  m.set(0, 1, 4);
  m.set(1, 0, 1);
  m.set(1, 1, 2);
  CHECK(m.rank() == 1);
  auto ker = m.kernel_basis();
  REQUIRE(ker.size() == 1);
  for (const auto& v : ker) {
    SparseVec img = m.apply(v);
    CHECK(img.empty());
  }

  // 1 x 2 matrix [1, -1] has kernel spanned by (1, 1)
  ExactMatrix s(1, 2, q);
  s.set(0, 0, 1);
  s.set(0, 1, -1);
  auto k = s.kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(k[0].at(0) == k[0].at(1));
}

TEST_CASE("kernel over F_5") {
  Field f5 = Field::prime_field(5);
  ExactMatrix m(1, 3, f5);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(0, 2, 3);
  CHECK(m.rank() == 1);
  auto ker = m.kernel_basis();
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(m.apply(v).empty());
}

TEST_CASE("rank + kernel dimension = columns (random)") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 1 + trial % 6, cols = 1 + (trial * 7) % 8;
    std::vector<std::tuple<int, int, Int>> entries;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        int v = entry(rng);
        if (v != 0) entries.emplace_back(r, c, Int(v));
      }
    for (Field f : {Field::rationals(), Field::prime_field(2),
                    Field::prime_field(3)}) {
      auto m = ExactMatrix::from_integer_entries(rows, cols, f, entries);
      CHECK(m.rank() + static_cast<int>(m.kernel_basis().size()) == cols);
    }
    // base change never increases rank
    auto mq = ExactMatrix::from_integer_entries(rows, cols, Field::rationals(),
                                                entries);
    auto mp =
        ExactMatrix::from_integer_entries(rows, cols, Field::prime_field(2),
                                          entries);
    CHECK(mp.rank() <= mq.rank());
  }
}

TEST_CASE("solve") {
  Field q = Field::rationals();
  ExactMatrix m(2, 2, q);
  m.set(0, 0, 2);
  m.set(0, 1, 1);
  m.set(1, 1, 3);
  SparseVec b{{0, Rat(5)}, {1, Rat(9)}};
  auto x = m.solve(b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);

  ExactMatrix bad(2, 1, q);
  bad.set(0, 0, 1);
  bad.set(1, 0, 1);
  SparseVec b2{{0, Rat(1)}, {1, Rat(2)}};
  CHECK_FALSE(bad.solve(b2).has_value());
}

TEST_CASE("determinant") {
  Field q = Field::rationals();
  ExactMatrix m(3, 3, q);
  m.set(0, 0, 1);
  m.set(0, 2, 2);
  m.set(1, 1, 3);
  m.set(2, 0, 4);
  m.set(2, 2, 1);
  // det = 3*(1*1 - 2*4) = -21
  CHECK(m.det() == Rat(-21));
}

TEST_CASE("super commutant basic cases") {
  Field q = Field::rationals();
  // operators = {identity} on an all-even module of dim 3 -> (9, 0)
  ExactMatrix id3(3, 3, q);
  for (int i = 0; i < 3; ++i) id3.set(i, i, 1);
  auto r = super_commutant({{id3, Parity::even}},
                           {Parity::even, Parity::even, Parity::even});
  CHECK(r.dim_even == 9);
  CHECK(r.dim_odd == 0);

  // no operators, parities (even, odd) -> (2, 2)
  auto r2 = super_commutant({}, {Parity::even, Parity::odd});
  CHECK(r2.dim_even == 2);
  CHECK(r2.dim_odd == 2);
}

TEST_CASE("super commutant of the full matrix algebra is scalars") {
  Field q = Field::rationals();
  // all 2x2 matrix units acting on the column module
  std::vector<std::pair<ExactMatrix, Parity>> ops;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      ExactMatrix e(2, 2, q);
      e.set(r, c, 1);
      ops.push_back({e, Parity::even});
    }
  auto res = super_commutant(ops, {Parity::even, Parity::even});
  CHECK(res.dim_even == 1);
  CHECK(res.dim_odd == 0);
}

TEST_CASE("kernel tracker") {
  Field q = Field::rationals();
  KernelTracker t(3, q);
  CHECK(t.dim() == 3);
  t.constrain({SparseVec{{0, Rat(1)}, {1, Rat(-1)}}});
  CHECK(t.dim() == 2);
  CHECK(t.satisfied(SparseVec{{0, Rat(1)}, {1, Rat(-1)}}));
  CHECK_FALSE(t.satisfied(SparseVec{{0, Rat(1)}}));
  t.constrain({SparseVec{{0, Rat(1)}}, SparseVec{{2, Rat(1)}}});
  CHECK(t.dim() == 0);
}

TEST_CASE("super commutant with a block partition") {
  Field q = Field::rationals();
  // no operators on a 4-dim all-even module: full matrix algebra, but a
  // partition into two classes restricts to block-diagonal maps
  std::vector<Parity> par(4, Parity::even);
  std::vector<int> blocks{0, 0, 1, 1};
  auto free = super_commutant({}, par);
  CHECK(free.dim_even == 16);
  auto blocked = super_commutant({}, par, &blocks);
  CHECK(blocked.dim_even == 8);  // two 2x2 diagonal blocks
  CHECK(blocked.dim_odd == 0);
  for (const auto& f : blocked.even_basis)
    for (const auto& [pos, c] : f) {
      (void)c;
      CHECK(blocks[pos / 4] == blocks[pos % 4]);
    }
}
