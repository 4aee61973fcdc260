#include "zzschur/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zzschur {

int Weight::total() const {
  int t = 0;
  for (const auto& c : comp) t += std::accumulate(c.begin(), c.end(), 0);
  return t;
}

std::string Weight::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < comp.size(); ++i) {
    if (i) os << "/";
    for (size_t l = 0; l < comp[i].size(); ++l) {
      if (l) os << ",";
      os << comp[i][l];
    }
  }
  return os.str();
}

int Multipartition::total() const {
  int t = 0;
  for (const auto& p : parts) t += std::accumulate(p.begin(), p.end(), 0);
  return t;
}

std::string Multipartition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "/";
    if (parts[i].empty()) os << "-";
    for (size_t l = 0; l < parts[i].size(); ++l) {
      if (l) os << ",";
      os << parts[i][l];
    }
  }
  return os.str();
}

int partition_entry(const Partition& p, int k) {
  return k < static_cast<int>(p.size()) ? p[k] : 0;
}

bool is_partition(const Composition& c) {
  for (size_t k = 0; k + 1 < c.size(); ++k)
    if (c[k] < c[k + 1]) return false;
  return c.empty() || c.back() >= 0;
}

Partition trim(Composition c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

namespace {

void compositions_rec(int n, int d, Composition& cur,
                      std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= d; ++k) {
    cur.push_back(k);
    compositions_rec(n, d - k, cur, out);
    cur.pop_back();
  }
}

std::vector<Composition> compositions(int n, int d) {
  std::vector<Composition> out;
  Composition cur;
  compositions_rec(n, d, cur, out);
  return out;
}

}  // namespace

std::vector<Weight> all_weights(int n, int d, int ell) {
  std::vector<Weight> out;
  std::vector<Weight> acc{{std::vector<Composition>{}}};
  for (int i = 0; i <= ell; ++i) {
    std::vector<Weight> next;
    for (const auto& w : acc) {
      int used = w.total();
      int remaining_levels = ell - i;
      for (int k = 0; k <= d - used; ++k) {
        if (remaining_levels == 0 && k != d - used) continue;
        for (auto& c : compositions(n, k)) {
          Weight nw = w;
          nw.comp.push_back(c);
          next.push_back(std::move(nw));
        }
      }
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

std::vector<Partition> partitions_of(int d, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

std::vector<Multipartition> dominant_weights(int n, int d, int ell) {
  std::vector<Multipartition> out{{std::vector<Partition>(ell + 1)}};
  for (int i = 0; i <= ell; ++i) {
    std::vector<Multipartition> next;
    for (const auto& mp : out) {
      int used = mp.total();
      int remaining_levels = ell - i;
      for (int k = 0; k <= d - used; ++k) {
        if (remaining_levels == 0 && k != d - used) continue;
        for (auto& p : partitions_of(k, n)) {
          Multipartition nm = mp;
          nm.parts[i] = p;
          next.push_back(std::move(nm));
        }
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight weight_of(const Multipartition& mp, int n, int ell) {
  Weight w;
  w.comp.assign(ell + 1, Composition(n, 0));
  for (int i = 0; i <= ell; ++i)
    for (size_t k = 0; k < mp.parts[i].size(); ++k) w.comp[i][k] = mp.parts[i][k];
  return w;
}

Weight iota_weight(int i, const Composition& c, int n, int ell) {
  Weight w;
  w.comp.assign(ell + 1, Composition(n, 0));
  for (size_t k = 0; k < c.size(); ++k) w.comp[i][k] = c[k];
  return w;
}

Composition epsilon(int l, int n) {
  Composition c(n, 0);
  c[l - 1] = 1;
  return c;
}

Multipartition conjugate(const Multipartition& mp) {
  Multipartition out;
  out.parts.reserve(mp.parts.size());
  for (const auto& p : mp.parts) {
    Partition c;
    int cols = p.empty() ? 0 : p[0];
    for (int j = 0; j < cols; ++j) {
      int count = 0;
      for (int row : p)
        if (row > j) ++count;
      c.push_back(count);
    }
    out.parts.push_back(std::move(c));
  }
  return out;
}

Multipartition reversed(const Multipartition& mp) {
  Multipartition out = mp;
  std::reverse(out.parts.begin(), out.parts.end());
  return out;
}

Weight reversed(const Weight& w) {
  Weight out = w;
  std::reverse(out.comp.begin(), out.comp.end());
  return out;
}

bool dominance_leq(const Composition& a, const Composition& b) {
  int sa = 0, sb = 0;
  size_t m = std::max(a.size(), b.size());
  for (size_t k = 0; k < m; ++k) {
    sa += k < a.size() ? a[k] : 0;
    sb += k < b.size() ? b[k] : 0;
    if (sa > sb) return false;
  }
  return sa == sb;
}

bool leq_I(const Weight& a, const Weight& b) {
  // stage one: ||a|| vs ||b|| under the suffix-sum order on Z^I
  const int ell = static_cast<int>(a.comp.size()) - 1;
  std::vector<int> na(ell + 1), nb(ell + 1);
  for (int i = 0; i <= ell; ++i) {
    na[i] = std::accumulate(a.comp[i].begin(), a.comp[i].end(), 0);
    nb[i] = std::accumulate(b.comp[i].begin(), b.comp[i].end(), 0);
  }
  bool norms_equal = na == nb;
  if (!norms_equal) {
    int sa = 0, sb = 0;
    for (int i = ell; i >= 0; --i) {
      sa += na[i];
      sb += nb[i];
      if (sa > sb) return false;
    }
    return true;  // strictly below in the suffix-sum order
  }
  for (int i = 0; i <= ell; ++i)
    if (!dominance_leq(a.comp[i], b.comp[i])) return false;
  return true;
}

bool leq_I(const Multipartition& a, const Multipartition& b, int n, int ell) {
  return leq_I(weight_of(a, n, ell), weight_of(b, n, ell));
}

long lr_coeff(const Partition& la, const Partition& mu, const Partition& nu) {
  int total = std::accumulate(la.begin(), la.end(), 0) +
              std::accumulate(mu.begin(), mu.end(), 0);
  if (total != std::accumulate(nu.begin(), nu.end(), 0)) return 0;
  for (size_t k = 0; k < la.size(); ++k)
    if (partition_entry(nu, static_cast<int>(k)) < la[k]) return 0;
  const int rows = static_cast<int>(nu.size());
  const int m = static_cast<int>(mu.size());
  if (m == 0) return 1;  // la == nu here

  // skew cells of nu/la in reverse reading order: top to bottom, each row
  // right to left, so lattice prefixes can be enforced incrementally
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = nu[r] - 1; c >= partition_entry(la, r); --c)
      cells.push_back({r, c});

  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(nu[r], 0);
  std::vector<int> counts(m + 1, 0);
  long total_count = 0;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == cells.size()) {
      for (int e = 1; e <= m; ++e)
        if (counts[e] != mu[e - 1]) return;
      ++total_count;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1, hi = m;
    if (c + 1 < nu[r] && fill[r][c + 1] != 0) hi = fill[r][c + 1];  // row weak
    if (r > 0 && c < nu[r - 1] && c >= partition_entry(la, r - 1))
      lo = std::max(lo, fill[r - 1][c] + 1);  // column strict
    else if (r > 0 && c < partition_entry(la, r - 1))
      lo = 1;  // cell above belongs to la
    for (int e = lo; e <= hi; ++e) {
      if (counts[e] >= mu[e - 1]) continue;               // content bound
      if (e > 1 && counts[e] >= counts[e - 1]) continue;  // lattice word
      ++counts[e];
      fill[r][c] = e;
      self(self, k + 1);
      fill[r][c] = 0;
      --counts[e];
    }
  };
  rec(rec, 0);
  return total_count;
}

long multi_lr(const Multipartition& la, const Multipartition& mu,
              const Multipartition& nu) {
  long prod = 1;
  for (size_t j = 0; j < nu.parts.size(); ++j) {
    prod *= lr_coeff(la.parts[j], mu.parts[j], nu.parts[j]);
    if (prod == 0) return 0;
  }
  return prod;
}

// ---------------------------------------------------------------------------
// Colored tableaux.

ColoredAlphabets colored_alphabets(const SuperAlgebra& a) {
  if (!a.heredity())
    throw std::invalid_argument("colored_alphabets: no heredity data");
  const auto& h = *a.heredity();
  ColoredAlphabets out;
  out.colors.resize(h.levels());
  for (int i = 0; i < h.levels(); ++i) {
    for (int x : h.X[i]) {
      // resolve the unique left color: e_j x = x
      int left = -1;
      for (int j = 0; j < h.levels(); ++j) {
        Expansion p = a.mult(h.e[j], x);
        if (p == Expansion{{x, Int(1)}}) {
          if (left >= 0)
            throw std::logic_error("colored_alphabets: left color not unique");
          left = j;
        } else if (!p.empty()) {
          throw std::logic_error("colored_alphabets: e_j x is neither x nor 0");
        }
      }
      if (left < 0)
        throw std::logic_error("colored_alphabets: no left color for " +
                               a.element(x).name);
      out.colors[i].push_back({x, a.element(x).parity, left, a.element(x).name});
    }
  }
  return out;
}

std::vector<ColoredTableau> colored_tableaux(const ColoredAlphabets& alph,
                                             const Multipartition& la, int n) {
  const int ell = alph.levels() - 1;
  if (static_cast<int>(la.parts.size()) != ell + 1)
    throw std::invalid_argument("colored_tableaux: level count mismatch");
  for (const auto& p : la.parts)
    if (!is_partition(p) || static_cast<int>(p.size()) > n)
      throw std::invalid_argument("colored_tableaux: not dominant for this n");

  // one flat list of cells over all components, row-major per component
  struct Cell {
    int comp, row, col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i <= ell; ++i)
    for (size_t r = 0; r < la.parts[i].size(); ++r)
      for (int c = 0; c < la.parts[i][r]; ++c)
        cells.push_back({i, static_cast<int>(r), c});

  // an entry is (letter, color rank); the total order is color-major:
  // 1^{x_1} < ... < n^{x_1} < 1^{x_2} < ...
  auto entry_leq = [n](std::pair<int, int> a, std::pair<int, int> b) {
    return a.second * n + (a.first - 1) <= b.second * n + (b.first - 1);
  };

  std::vector<std::vector<std::vector<std::pair<int, int>>>> grid(ell + 1);
  for (int i = 0; i <= ell; ++i) {
    grid[i].resize(la.parts[i].size());
    for (size_t r = 0; r < la.parts[i].size(); ++r)
      grid[i][r].assign(la.parts[i][r], {0, 0});
  }

  std::vector<ColoredTableau> out;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == cells.size()) {
      ColoredTableau t;
      t.entries.resize(ell + 1);
      t.left_weight.comp.assign(ell + 1, Composition(n, 0));
      for (int i = 0; i <= ell; ++i)
        for (const auto& row : grid[i])
          for (const auto& e : row) {
            t.entries[i].push_back(e);
            const TableauColor& col = alph.colors[i][e.second];
            t.left_weight.comp[col.left_color][e.first - 1] += 1;
          }
      out.push_back(std::move(t));
      return;
    }
    auto [i, r, c] = cells[k];
    for (int rank = 0; rank < static_cast<int>(alph.colors[i].size()); ++rank) {
      const TableauColor& col = alph.colors[i][rank];
      for (int l = 1; l <= n; ++l) {
        std::pair<int, int> e{l, rank};
        if (c > 0) {
          auto left = grid[i][r][c - 1];
          if (!entry_leq(left, e)) continue;
          if (left == e && col.parity != Parity::even) continue;
        }
        if (r > 0 && c < static_cast<int>(grid[i][r - 1].size())) {
          auto up = grid[i][r - 1][c];
          if (!entry_leq(up, e)) continue;
          if (up == e && col.parity != Parity::odd) continue;
        }
        grid[i][r][c] = e;
        self(self, k + 1);
        grid[i][r][c] = {0, 0};
      }
    }
  };
  rec(rec, 0);
  return out;
}

Character kostka_character(const ColoredAlphabets& alph,
                           const Multipartition& la, int n) {
  Character ch;
  for (const auto& t : colored_tableaux(alph, la, n)) ch[t.left_weight] += 1;
  return ch;
}

long kostka(const ColoredAlphabets& alph, const Multipartition& la,
            const Weight& mu, int n) {
  Character ch = kostka_character(alph, la, n);
  auto it = ch.find(mu);
  return it == ch.end() ? 0 : it->second;
}

Character delta_character(const ColoredAlphabets& alph, const Multipartition& la,
                          int n) {
  if (la.total() > n)
    throw std::invalid_argument("delta_character: requires d <= n");
  return kostka_character(alph, la, n);
}

Character char_product(const Character& a, const Character& b, int n, int ell) {
  Character out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Weight w;
      w.comp.assign(ell + 1, Composition(n, 0));
      for (int i = 0; i <= ell; ++i)
        for (int l = 0; l < n; ++l)
          w.comp[i][l] = wa.comp[i][l] + wb.comp[i][l];
      out[w] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// ---------------------------------------------------------------------------

Multipartition beta_mp(int d, int s, int i, int ell) {
  Multipartition out;
  out.parts.assign(ell + 1, {});
  if (i == 0) {
    if (s != 0) throw std::invalid_argument("beta_mp: i = 0 requires s = 0");
    out.parts[0] = Partition(d, 1);
    return out;
  }
  if (s > 0) out.parts[i - 1] = {s};
  if (d - s > 0) out.parts[i] = Partition(d - s, 1);
  return out;
}

std::vector<Multipartition> xi_set(int d, int i, int n, int ell) {
  (void)n;
  if (i < 0 || i > ell) throw std::invalid_argument("xi_set: bad color");
  std::vector<Multipartition> out;
  if (i == 0) {
    out.push_back(beta_mp(d, 0, 0, ell));
  } else {
    for (int s = 0; s <= d; ++s) out.push_back(beta_mp(d, s, i, ell));
  }
  return out;
}

namespace {

// all sub-partitions obtained by removing `count` boxes, at most one per
// column (horizontal strip la/al)
std::vector<Partition> remove_horizontal(const Partition& la, int count) {
  std::vector<Partition> out;
  const int rows = static_cast<int>(la.size());
  Partition cur(rows, 0);
  auto rec = [&](auto&& self, int r, int left) -> void {
    if (r == rows) {
      if (left == 0) out.push_back(trim(cur));
      return;
    }
    // al_r ranges with la_r >= al_r >= la_{r+1} (horizontal strip condition)
    int lo = partition_entry(la, r + 1);
    for (int v = la[r]; v >= lo && la[r] - v <= left; --v) {
      cur[r] = v;
      self(self, r + 1, left - (la[r] - v));
    }
  };
  if (rows == 0) {
    if (count == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, count);
  return out;
}

// remove `count` boxes, at most one per row (vertical strip)
std::vector<Partition> remove_vertical(const Partition& la, int count) {
  std::vector<Partition> out;
  const int rows = static_cast<int>(la.size());
  Partition cur(rows, 0);
  auto rec = [&](auto&& self, int r, int left) -> void {
    if (r == rows) {
      if (left == 0 && is_partition(cur)) out.push_back(trim(cur));
      return;
    }
    for (int drop = 0; drop <= 1 && drop <= left && la[r] - drop >= 0; ++drop) {
      cur[r] = la[r] - drop;
      if (r > 0 && cur[r] > cur[r - 1]) continue;
      self(self, r + 1, left - drop);
    }
  };
  if (rows == 0) {
    if (count == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, count);
  return out;
}

}  // namespace

std::vector<Multipartition> omega_set(const Multipartition& la, int i, int r,
                                      int s, int n, int ell) {
  (void)n;
  (void)ell;
  std::vector<Multipartition> out;
  if (i == 0) {
    if (s != 0) throw std::invalid_argument("omega_set: i = 0 requires s = 0");
    for (auto& p : remove_vertical(la.parts[0], r)) {
      Multipartition mp = la;
      mp.parts[0] = p;
      out.push_back(std::move(mp));
    }
    return out;
  }
  for (auto& ph : remove_horizontal(la.parts[i - 1], s))
    for (auto& pv : remove_vertical(la.parts[i], r - s)) {
      Multipartition mp = la;
      mp.parts[i - 1] = ph;
      mp.parts[i] = pv;
      out.push_back(std::move(mp));
    }
  return out;
}

}  // namespace zzschur
