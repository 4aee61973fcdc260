#include "doctest.h"
#include "zzschur/tilting.hpp"

#include "zzschur/linalg.hpp"

using namespace zzschur;

TEST_CASE("tilting bimodule basis") {
  auto z = zigzag(1);
  TiltingBimodule t(&z);
  CHECK(t.dim() == 4);
  CHECK(t.basis()[0].name == "v0");
  CHECK(t.basis()[0].parity == Parity::odd);
  int odd = 0;
  for (const auto& b : t.basis())
    if (b.parity == Parity::odd) ++odd;
  CHECK(odd == 2);  // v0 and a_{1,0}
  CHECK(t.left_summands()[0].size() == 1);
  CHECK(t.left_summands()[1].size() == 3);

  auto z2 = zigzag(2);
  TiltingBimodule t2(&z2);
  CHECK(t2.dim() == 8);
  CHECK(t2.left_summands()[2].size() == 4);
}

TEST_CASE("standard filtration dimension bookkeeping") {
  for (int ell : {1, 2, 3}) {
    auto z = zigzag(ell);
    TiltingBimodule t(&z);
    for (int i = 1; i <= ell; ++i) {
      auto mi = zigzag_modules(z, i);
      auto mj = zigzag_modules(z, i - 1);
      CHECK(static_cast<int>(t.left_summands()[i].size()) ==
            mi.standard.dim() + mj.standard.dim());
    }
  }
}

TEST_CASE("ringel dual audit passes") {
  for (int ell : {1, 2, 3}) {
    auto z = zigzag(ell);
    TiltingBimodule t(&z);
    auto report = ringel_dual_audit(t);
    for (const auto& c : report.checks) {
      INFO("ell=" << ell << " " << c.name << ": " << c.witness);
      CHECK(c.pass);
    }
    CHECK(t.dual_algebra().dim() == 4 * ell + 1);
    CHECK(anti_involution_audit(t.dual_algebra()));
    CHECK(heredity_audit(t.dual_algebra()).all_pass());
  }
}

TEST_CASE("pit modules are calibrated submodules") {
  auto z = zigzag(2);
  TiltingBimodule t(&z);
  for (int i = 0; i <= 2; ++i) {
    CalModule m = t.pit_module(i);
    CHECK(m.calibrated());
    CHECK(m.dim() == static_cast<int>(t.left_summands()[i].size()));
  }
}

TEST_CASE("pit form") {
  for (int ell : {1, 2, 3}) {
    auto z = zigzag(ell);
    TiltingBimodule t(&z);
    for (int i = 1; i <= ell; ++i) {
      CalModule m = t.pit_module(i);
      Gram g = pit_form(t, i);
      // non-degenerate
      Field q = Field::rationals();
      ExactMatrix gm(m.dim(), m.dim(), q);
      for (int a = 0; a < m.dim(); ++a)
        for (int b = 0; b < m.dim(); ++b)
          if (g[a][b] != 0) gm.set(a, b, g[a][b]);
      CHECK(gm.det() != 0);
      // tau-contravariant
      CHECK(contravariance_audit(m, g));
      // even and superantisymmetric; (V_a, V_a) = 0
      for (int a = 0; a < m.dim(); ++a)
        for (int b = 0; b < m.dim(); ++b) {
          if (g[a][b] == 0) continue;
          CHECK(m.element(a).parity == m.element(b).parity);
          bool both_odd = m.element(a).parity == Parity::odd;
          CHECK(g[b][a] == (both_odd ? g[a][b] : -g[a][b]));
        }
    }
  }
}

TEST_CASE("pit form explicit entries at i = 1") {
  auto z = zigzag(1);
  TiltingBimodule t(&z);
  CalModule m = t.pit_module(1);
  Gram g = pit_form(t, 1);
  int e = m.index_of("e0"), c = m.index_of("c0"), a = m.index_of("a1_0");
  CHECK(g[e][c] == 1);
  CHECK(g[c][e] == -1);
  CHECK(g[a][a] == 1);
  CHECK(g[e][e] == 0);
  CHECK(g[c][c] == 0);
}

TEST_CASE("lifted pit form is nondegenerate and tau_d-contravariant") {
  auto z = zigzag(2);
  TiltingBimodule t(&z);
  for (int i : {1, 2}) {
    CalModule m = t.pit_module(i);
    Gram g = pit_form(t, i);
    for (int d : {2, 3}) {
      auto lf = lifted_form(m.basis(), g, d);
      CHECK(lf.symmetry == -1);
      const int md = static_cast<int>(lf.index.size());
      Field q = Field::rationals();
      ExactMatrix gm(md, md, q);
      for (int a = 0; a < md; ++a)
        for (int b = 0; b < md; ++b)
          if (lf.gram[a][b] != 0) gm.set(a, b, lf.gram[a][b]);
      Rat det = gm.det();
      CHECK(det != 0);
      CHECK((det == 1 || det == -1));  // nondegenerate over every field

      // contravariance of the lifted form against tau_d on Gamma~^d Z:
      // (x v, w) = (-1)^{|x||v|} (v, tau_d(x) w) on all basis triples
      DividedPowerAlgebra ga(&z, d);
      DividedPowerModule dm(&ga, &m);
      REQUIRE(dm.dim() == md);
      for (int x = 0; x < ga.dim(); ++x) {
        Expansion tx = ga.tau(x);
        bool xodd = is_odd(ga.parity(x));
        for (int p = 0; p < md; ++p)
          for (int qq = 0; qq < md; ++qq) {
            Rat lhs(0);
            for (const auto& [u, cu] : dm.act(x, p))
              lhs += Rat(cu) * lf.gram[u][qq];
            Rat rhs(0);
            for (const auto& [y, cy] : tx)
              for (const auto& [u, cu] : dm.act(y, qq))
                rhs += Rat(cy * cu) * lf.gram[p][u];
            bool flip = xodd && is_odd(dm.parity(p));
            CHECK(lhs == (flip ? -rhs : rhs));
          }
      }
    }
  }
}

TEST_CASE("dual pairing on pit carriers") {
  auto z = zigzag(2);
  TiltingBimodule t(&z);
  for (int i : {1, 2}) {
    CalModule m = t.pit_module(i);
    Gram g = pit_form(t, i);
    for (int d : {1, 2, 3}) {
      auto mtx = dual_pairing_matrix(m.basis(), g, d);
      Int dfac = factorial(d);
      for (size_t a = 0; a < mtx.size(); ++a)
        for (size_t b = 0; b < mtx.size(); ++b) {
          if (a == b)
            CHECK((mtx[a][b] == Rat(dfac) || mtx[a][b] == Rat(-dfac)));
          else
            CHECK(mtx[a][b] == 0);
        }
    }
  }
}
