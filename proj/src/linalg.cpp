#include "zzschur/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace zzschur {

void ExactMatrix::set(int r, int c, const Rat& v) {
  Rat cv = field_.canon(v);
  if (cv == 0)
    data_[r].erase(c);
  else
    data_[r][c] = cv;
}

void ExactMatrix::add(int r, int c, const Rat& v) {
  auto it = data_[r].find(c);
  Rat cv = field_.canon(it == data_[r].end() ? v : field_.add(it->second, v));
  if (cv == 0) {
    if (it != data_[r].end()) data_[r].erase(it);
  } else {
    data_[r][c] = cv;
  }
}

Rat ExactMatrix::get(int r, int c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rat(0) : it->second;
}

ExactMatrix ExactMatrix::from_integer_entries(
    int rows, int cols, Field field,
    const std::vector<std::tuple<int, int, Int>>& entries) {
  ExactMatrix m(rows, cols, field);
  for (const auto& [r, c, v] : entries) m.add(r, c, field.from_int(v));
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
  return t;
}

SparseVec ExactMatrix::apply(const SparseVec& x) const {
  SparseVec y;
  for (int r = 0; r < rows_; ++r) {
    Rat acc(0);
    for (const auto& [c, v] : data_[r]) {
      auto it = x.find(c);
      if (it != x.end()) acc = field_.add(acc, field_.mul(v, it->second));
    }
    if (acc != 0) y[r] = acc;
  }
  return y;
}

SparseVec SpanTracker::reduce(SparseVec r) const {
  for (auto it = r.begin(); it != r.end();) {
    auto pr = rows_.find(it->first);
    if (pr == rows_.end()) {
      ++it;
      continue;
    }
    Rat coeff = it->second;
    for (const auto& [c, v] : pr->second) {
      auto jt = r.find(c);
      Rat nv = field_.sub(jt == r.end() ? Rat(0) : jt->second,
                          field_.mul(coeff, v));
      if (nv == 0) {
        if (jt != r.end()) r.erase(jt);
      } else {
        r[c] = nv;
      }
    }
    it = r.upper_bound(pr->first);
  }
  return r;
}

bool SpanTracker::insert(SparseVec r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  // Pivot by smallest bit size to limit coefficient growth.
  int pivot = r.begin()->first;
  size_t best = rat_bits(r.begin()->second);
  for (const auto& [c, v] : r) {
    size_t b = rat_bits(v);
    if (b < best) {
      best = b;
      pivot = c;
    }
  }
  Rat inv = field_.inv(r[pivot]);
  SparseVec norm;
  for (const auto& [c, v] : r) norm[c] = field_.mul(v, inv);
  // Keep earlier rows reduced at the new pivot column.
  for (auto& [p, row] : rows_) {
    auto it = row.find(pivot);
    if (it == row.end()) continue;
    Rat coeff = it->second;
    for (const auto& [c, v] : norm) {
      auto jt = row.find(c);
      Rat nv = field_.sub(jt == row.end() ? Rat(0) : jt->second,
                          field_.mul(coeff, v));
      if (nv == 0) {
        if (jt != row.end()) row.erase(jt);
      } else {
        row[c] = nv;
      }
    }
  }
  rows_[pivot] = std::move(norm);
  return true;
}

int ExactMatrix::rank() const {
  SpanTracker rref(field_);
  for (const auto& r : data_) rref.insert(r);
  return rref.rank();
}

std::vector<SparseVec> ExactMatrix::kernel_basis() const {
  SpanTracker rref(field_);
  for (const auto& r : data_) rref.insert(r);
  std::vector<SparseVec> out;
  const auto& rows = rref.rows();
  for (int c = 0; c < cols_; ++c) {
    if (rows.count(c)) continue;
    SparseVec x;
    x[c] = Rat(1);
    for (const auto& [p, row] : rows) {
      auto it = row.find(c);
      if (it != row.end()) x[p] = field_.neg(it->second);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<SparseVec> ExactMatrix::solve(const SparseVec& b) const {
  const int bc = cols_;  // sentinel column for the right-hand side
  SpanTracker rref(field_);
  for (int r = 0; r < rows_; ++r) {
    SparseVec row = data_[r];
    auto it = b.find(r);
    if (it != b.end() && it->second != 0) row[bc] = it->second;
    rref.insert(std::move(row));
  }
  if (rref.rows().count(bc)) return std::nullopt;
  SparseVec x;
  for (const auto& [p, row] : rref.rows()) {
    auto it = row.find(bc);
    if (it != row.end()) x[p] = it->second;
  }
  return x;
}

Rat ExactMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  std::vector<SparseVec> work(data_);
  Rat d(1);
  for (int col = 0; col < cols_; ++col) {
    int best = -1;
    size_t best_bits = 0;
    for (int r = col; r < rows_; ++r) {
      auto it = work[r].find(col);
      if (it == work[r].end()) continue;
      size_t bits = rat_bits(it->second);
      if (best < 0 || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best < 0) return Rat(0);
    if (best != col) {
      std::swap(work[best], work[col]);
      d = field_.neg(d);
    }
    Rat pv = work[col][col];
    d = field_.mul(d, pv);
    Rat pinv = field_.inv(pv);
    for (int r = col + 1; r < rows_; ++r) {
      auto it = work[r].find(col);
      if (it == work[r].end()) continue;
      Rat f = field_.mul(it->second, pinv);
      for (const auto& [c, v] : work[col]) {
        if (c < col) continue;
        auto jt = work[r].find(c);
        Rat nv = field_.sub(jt == work[r].end() ? Rat(0) : jt->second,
                            field_.mul(f, v));
        if (nv == 0) {
          if (jt != work[r].end()) work[r].erase(jt);
        } else {
          work[r][c] = nv;
        }
      }
    }
  }
  return d;
}

size_t kernel_dim_of_rows(const std::vector<SparseVec>& rows, int ncols,
                          const Field& field) {
  SpanTracker rref(field);
  for (const auto& r : rows) rref.insert(r);
  return static_cast<size_t>(ncols) - static_cast<size_t>(rref.rank());
}

KernelTracker::KernelTracker(int n, Field field) : field_(field), n_(n) {
  basis_.reserve(n);
  for (int i = 0; i < n; ++i) {
    SparseVec e;
    e[i] = Rat(1);
    basis_.push_back(std::move(e));
  }
}

void KernelTracker::constrain(const std::vector<SparseVec>& rows) {
  if (basis_.empty() || rows.empty()) return;
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(basis_.size()),
                field_);
  bool any = false;
  for (size_t k = 0; k < rows.size(); ++k) {
    for (size_t j = 0; j < basis_.size(); ++j) {
      Rat acc(0);
      const SparseVec *a = &rows[k], *b = &basis_[j];
      if (a->size() > b->size()) std::swap(a, b);
      for (const auto& [u, v] : *a) {
        auto it = b->find(u);
        if (it != b->end()) acc = field_.add(acc, field_.mul(v, it->second));
      }
      if (acc != 0) {
        m.set(static_cast<int>(k), static_cast<int>(j), acc);
        any = true;
      }
    }
  }
  if (!any) return;
  auto ker = m.kernel_basis();
  std::vector<SparseVec> next;
  next.reserve(ker.size());
  for (const auto& combo : ker) {
    SparseVec v;
    for (const auto& [j, c] : combo) {
      for (const auto& [u, bv] : basis_[j]) {
        Rat nv = field_.add(v.count(u) ? v[u] : Rat(0), field_.mul(c, bv));
        if (nv == 0)
          v.erase(u);
        else
          v[u] = nv;
      }
    }
    next.push_back(std::move(v));
  }
  basis_ = std::move(next);
}

bool KernelTracker::satisfied(const SparseVec& row) const {
  for (const auto& b : basis_) {
    Rat acc(0);
    const SparseVec *a = &row, *bb = &b;
    if (a->size() > bb->size()) std::swap(a, bb);
    for (const auto& [u, v] : *a) {
      auto it = bb->find(u);
      if (it != bb->end()) acc = field_.add(acc, field_.mul(v, it->second));
    }
    if (acc != 0) return false;
  }
  return true;
}

SuperCommutantResult super_commutant(
    const std::vector<std::pair<ExactMatrix, Parity>>& operators,
    const std::vector<Parity>& module_parities,
    const std::vector<int>* block_partition) {
  const int n = static_cast<int>(module_parities.size());
  Field field = operators.empty() ? Field::rationals() : operators[0].first.field();
  for (const auto& [op, p] : operators) {
    (void)p;
    if (op.rows() != n || op.cols() != n)
      throw std::invalid_argument("super_commutant: operator size mismatch");
    if (op.field() != field)
      throw std::invalid_argument("super_commutant: mixed fields");
  }
  if (block_partition && static_cast<int>(block_partition->size()) != n)
    throw std::invalid_argument("super_commutant: block partition size mismatch");

  SuperCommutantResult result;
  for (Parity eps : {Parity::even, Parity::odd}) {
    // Unknowns: allowed matrix positions (w, v), flattened as w * n + v.
    std::vector<int> unknown_of(static_cast<size_t>(n) * n, -1);
    std::vector<int> pos_of;
    for (int w = 0; w < n; ++w)
      for (int v = 0; v < n; ++v) {
        if (module_parities[w] != module_parities[v] + eps) continue;
        if (block_partition && (*block_partition)[w] != (*block_partition)[v])
          continue;
        unknown_of[static_cast<size_t>(w) * n + v] =
            static_cast<int>(pos_of.size());
        pos_of.push_back(w * n + v);
      }

    KernelTracker tracker(static_cast<int>(pos_of.size()), field);
    for (const auto& [op, pa] : operators) {
      bool flip = is_odd(eps) && is_odd(pa);
      std::vector<SparseVec> rows;
      for (int w = 0; w < n; ++w) {
        for (int v = 0; v < n; ++v) {
          SparseVec row;
          // sum_u F[w,u] A[u,v] : walk column v of A
          for (int u = 0; u < n; ++u) {
            int id = unknown_of[static_cast<size_t>(w) * n + u];
            if (id < 0) continue;
            Rat a = op.get(u, v);
            if (a == 0) continue;
            row[id] = field.add(row.count(id) ? row[id] : Rat(0), a);
          }
          // -(-1)^{eps.pa} sum_u A[w,u] F[u,v]
          for (const auto& [u, a] : op.row(w)) {
            int id = unknown_of[static_cast<size_t>(u) * n + v];
            if (id < 0) continue;
            Rat c = flip ? a : field.neg(a);
            Rat nv = field.add(row.count(id) ? row[id] : Rat(0), c);
            if (nv == 0)
              row.erase(id);
            else
              row[id] = nv;
          }
          if (!row.empty()) rows.push_back(std::move(row));
        }
      }
      tracker.constrain(rows);
      if (tracker.dim() == 0) break;
    }

    std::vector<SparseVec> maps;
    for (const auto& b : tracker.basis()) {
      SparseVec flat;
      for (const auto& [id, v] : b) flat[pos_of[id]] = v;
      maps.push_back(std::move(flat));
    }
    // Re-check the signed commutation identity entrywise.
    for (const auto& f : maps) {
      for (const auto& [op, pa] : operators) {
        Rat sign = (is_odd(eps) && is_odd(pa)) ? Rat(-1) : Rat(1);
        for (int w = 0; w < n; ++w)
          for (int v = 0; v < n; ++v) {
            Rat lhs(0), rhs(0);
            for (int u = 0; u < n; ++u) {
              auto it = f.find(w * n + u);
              if (it != f.end())
                lhs = field.add(lhs, field.mul(it->second, op.get(u, v)));
            }
            for (const auto& [u, a] : op.row(w)) {
              auto it = f.find(u * n + v);
              if (it != f.end())
                rhs = field.add(rhs, field.mul(a, it->second));
            }
            if (lhs != field.mul(sign, rhs))
              throw std::logic_error(
                  "super_commutant: solution violates commutation identity");
          }
      }
    }
    if (eps == Parity::even) {
      result.dim_even = static_cast<int>(maps.size());
      result.even_basis = std::move(maps);
    } else {
      result.dim_odd = static_cast<int>(maps.size());
      result.odd_basis = std::move(maps);
    }
  }
  return result;
}

}  // namespace zzschur
