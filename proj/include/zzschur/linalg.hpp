#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zzschur/scalars.hpp"

namespace zzschur {

using SparseVec = std::map<int, Rat>;

/// Sparse matrix with exact entries over a single field. No stored zeros.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols, Field field)
      : rows_(rows), cols_(cols), field_(field), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  void set(int r, int c, const Rat& v);
  void add(int r, int c, const Rat& v);
  Rat get(int r, int c) const;
  const SparseVec& row(int r) const { return data_[r]; }

  static ExactMatrix from_integer_entries(
      int rows, int cols, Field field,
      const std::vector<std::tuple<int, int, Int>>& entries);

  int rank() const;
  /// Basis of the right null space; size = cols - rank.
  std::vector<SparseVec> kernel_basis() const;
  /// Any solution x of Ax = b, or nullopt if inconsistent.
  std::optional<SparseVec> solve(const SparseVec& b) const;
  Rat det() const;

  ExactMatrix transpose() const;
  SparseVec apply(const SparseVec& x) const;  // A * x

 private:
  int rows_, cols_;
  Field field_;
  std::vector<SparseVec> data_;
};

size_t kernel_dim_of_rows(const std::vector<SparseVec>& rows, int ncols,
                          const Field& field);

/// Fully reduced row echelon form maintained incrementally; rows are keyed by
/// their pivot column and normalized so the pivot entry is 1.
class SpanTracker {
 public:
  explicit SpanTracker(Field field) : field_(field) {}

  /// Reduces row against the span; returns the remainder.
  SparseVec reduce(SparseVec row) const;
  /// Adds a row; returns true if the rank grew.
  bool insert(SparseVec row);
  bool contains(const SparseVec& row) const { return reduce(row).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }
  const Field& field() const { return field_; }

 private:
  Field field_;
  std::map<int, SparseVec> rows_;
};

/// Tracks a subspace of R^n while linear constraints arrive in batches.
/// The space starts as all of R^n and shrinks to the joint kernel.
class KernelTracker {
 public:
  KernelTracker(int n, Field field);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec>& basis() const { return basis_; }

  /// Intersects the space with the kernel of the given rows.
  void constrain(const std::vector<SparseVec>& rows);
  /// True iff row . x = 0 for every x in the current space.
  bool satisfied(const SparseVec& row) const;

 private:
  Field field_;
  int n_;
  std::vector<SparseVec> basis_;
};

struct SuperCommutantResult {
  int dim_even = 0;
  int dim_odd = 0;
  // Each map is a flattened matrix over coordinates (row * n + col).
  std::vector<SparseVec> even_basis;
  std::vector<SparseVec> odd_basis;
};

/// Solves f(a v) = (-1)^{|f||a|} a f(v) for endomorphisms f of each parity
/// commuting with all given operators in the signed sense. Operators are
/// square matrices on a module whose coordinates carry the given parities.
/// An optional block partition restricts f to be block diagonal.
SuperCommutantResult super_commutant(
    const std::vector<std::pair<ExactMatrix, Parity>>& operators,
    const std::vector<Parity>& module_parities,
    const std::vector<int>* block_partition = nullptr);

}  // namespace zzschur
