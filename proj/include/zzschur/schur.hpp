#pragma once

#include <memory>

#include "zzschur/combinat.hpp"
#include "zzschur/divpow.hpp"

namespace zzschur {

/// The generalized Schur algebra T^A(n,d) over Z, realized as the modified
/// divided power of M_n(A) with its eta basis and weight combinatorics.
class SchurAlgebra {
 public:
  SchurAlgebra(const SuperAlgebra* base, int n, int d);

  const SuperAlgebra& base() const { return *base_; }
  const SuperAlgebra& matrix_algebra() const { return *mn_; }
  const DividedPowerAlgebra& gamma() const { return *gamma_; }
  int n() const { return n_; }
  int d() const { return d_; }
  int levels() const { return levels_; }  // |I|; 0 when A has no heredity data
  /// d <= n: the range where the quasi-hereditary theory applies.
  bool quasi_hereditary_scale() const { return d_ <= n_; }

  int dim() const { return gamma_->dim(); }
  Parity parity(int i) const { return gamma_->parity(i); }
  int matrix_index(int b, int r, int s) const { return (b * n_ + r) * n_ + s; }

  const Expansion& mult(int a, int b) const { return gamma_->mult(a, b); }
  Expansion mult(const Expansion& a, const Expansion& b) const {
    return gamma_->mult(a, b);
  }

  /// Weights of an eta-basis element: row side and column side.
  const Weight& left_weight(int i) const { return lweight_[i]; }
  const Weight& right_weight(int i) const { return rweight_[i]; }

  /// The idempotent eta_la is itself a basis element.
  int eta_idempotent(const Weight& la) const;
  /// All eta_la in the order of all_weights(n, d, levels-1).
  std::vector<int> eta_idempotents() const;

  Expansion tau_nd(int i) const { return gamma_->tau(i); }

  std::string index_name(int i) const;

 private:
  const SuperAlgebra* base_;
  int n_, d_, levels_;
  std::unique_ptr<SuperAlgebra> mn_;
  std::unique_ptr<DividedPowerAlgebra> gamma_;
  std::vector<int> left_color_, right_color_;  // per A-basis element
  std::vector<Weight> lweight_, rweight_;
};

/// The unique i with e_i b = b per basis element of A (and b e_i = b for the
/// right version); requires heredity data.
std::vector<int> left_colors(const SuperAlgebra& a);
std::vector<int> right_colors(const SuperAlgebra& a);
std::vector<int> module_left_colors(const CalModule& v);   // e_i . t = t
std::vector<int> module_right_colors(const CalModule& v);  // t . e_i = t

/// Modified divided power of Col_n(V) (left) or Row_n(V) (right) as a module
/// over T^A(n,d), with per-basis-vector weights.
class GammaVectorModule {
 public:
  GammaVectorModule(const SchurAlgebra& schur, const CalModule& v);

  const SchurAlgebra& schur() const { return *schur_; }
  const DividedPowerModule& dp() const { return *dp_; }
  const CalModule& carrier() const { return *carrier_; }
  int dim() const { return dp_->dim(); }
  Side side() const { return dp_->side(); }
  const Weight& weight(int i) const { return weights_[i]; }
  Parity parity(int i) const { return dp_->parity(i); }
  const Expansion& act(int a, int v) const { return dp_->act(a, v); }

  Character weight_character() const;

 private:
  const SchurAlgebra* schur_;
  std::unique_ptr<CalModule> carrier_;  // Col_n(V) / Row_n(V) over M_n(A)
  std::unique_ptr<DividedPowerModule> dp_;
  std::vector<Weight> weights_;
};

/// Character by counting weight vectors; equals the projector-rank character
/// because every y-basis vector is a weight vector.
Character weight_character_by_counting(const std::vector<Weight>& weights);

/// Exact projector-rank character of a divided-power module (reference path).
Character weight_character_by_rank(const SchurAlgebra& schur,
                                   const DividedPowerModule& m);

/// Weights of the eta basis of Gamma~^d of a matrix-shaped carrier whose
/// basis is laid out as (t * n + r) * n + s; colors per carrier element t.
std::vector<Weight> matrix_carrier_weights(const DividedPowerModule& m,
                                           const std::vector<int>& colors,
                                           int n, int levels, bool use_row);

}  // namespace zzschur
