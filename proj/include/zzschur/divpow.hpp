#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "zzschur/superalg.hpp"

namespace zzschur {

/// Canonical S_d-orbit representative on Seq(B, d): a sorted d-multiset of
/// basis indices with odd entries pairwise distinct.
struct MultisetIndex {
  std::vector<int> entries;

  bool operator==(const MultisetIndex& o) const { return entries == o.entries; }
  bool operator<(const MultisetIndex& o) const { return entries < o.entries; }
  int degree() const { return static_cast<int>(entries.size()); }
};

/// All of Seq(B, d)/S_d in lexicographic order.
std::vector<MultisetIndex> seq_orbits(const std::vector<CalBasisElement>& basis,
                                      int d);

bool valid_seq_tuple(const std::vector<CalBasisElement>& basis,
                     const std::vector<int>& tuple);

/// Number of pairs k < l with both entries odd and b_k > b_l.
int sign_angle(const std::vector<CalBasisElement>& basis,
               const std::vector<int>& tuple);

/// EAngle2 statistic: pairs k > l with u_k and w_l both odd.
int angle2(const std::vector<CalBasisElement>& ubasis,
           const std::vector<int>& u,
           const std::vector<CalBasisElement>& wbasis,
           const std::vector<int>& w);

/// Product of m! over c-part multiplicities m of the tuple.
Int c_factorial(const std::vector<CalBasisElement>& basis,
                const std::vector<int>& tuple);

Parity tuple_parity(const std::vector<CalBasisElement>& basis,
                    const std::vector<int>& tuple);

// ---------------------------------------------------------------------------
// Tensor-space elements. Used by the expansion of the y basis, the star
// product, coproducts and bilinear forms.

using Tensor = std::map<std::vector<int>, Rat>;

/// x_b: the signed orbit sum of the tuple in V^{(x)d}.
Tensor expand_x(const std::vector<CalBasisElement>& basis,
                const std::vector<int>& tuple);
/// y_b = [b]!_c x_b.
Tensor expand_y(const std::vector<CalBasisElement>& basis,
                const std::vector<int>& tuple);

/// Signed place permutation (v_1 (x) ... (x) v_d)^sigma; sigma[k] is the source
/// position landing at k.
Tensor place_permute(const std::vector<CalBasisElement>& basis,
                     const Tensor& t, const std::vector<int>& sigma);

bool tensor_equal(const Tensor& a, const Tensor& b);

/// Star product V^{(x)c} x V^{(x)(d-c)} -> V^{(x)d}: sum over shuffles with
/// Koszul signs.
Tensor star(const std::vector<CalBasisElement>& basis, const Tensor& t1,
            const Tensor& t2);

/// Expresses an invariant tensor in the y basis; throws if the tensor does
/// not lie in the modified divided power with the expected coefficients.
std::vector<std::pair<std::vector<int>, Rat>> to_y_basis(
    const std::vector<CalBasisElement>& basis, const Tensor& t);

// ---------------------------------------------------------------------------
// The eta-basis structure constants (closed orbit-sum formula).

/// Expands the product of two y-type basis vectors in the y basis of the
/// target carrier. `mul(u, w)` returns the expansion of u.w over the target
/// basis; the first tuple contributes the left tensor factors. Coefficients
/// are asserted integral.
Expansion gamma_pair_product(
    const std::vector<CalBasisElement>& ubasis, const std::vector<int>& u,
    const std::vector<CalBasisElement>& wbasis, const std::vector<int>& w,
    const std::vector<CalBasisElement>& target_basis,
    const std::function<const Expansion&(int, int)>& mul,
    const std::function<int(const std::vector<int>&)>& target_index);

/// Modified divided power of a calibrated superalgebra with its eta basis.
class DividedPowerAlgebra {
 public:
  DividedPowerAlgebra(const SuperAlgebra* carrier, int d);

  const SuperAlgebra& carrier() const { return *carrier_; }
  int degree() const { return d_; }
  int dim() const { return static_cast<int>(index_.size()); }
  const std::vector<MultisetIndex>& indices() const { return index_; }
  const MultisetIndex& index(int i) const { return index_[i]; }
  int index_of(const std::vector<int>& sorted_tuple) const;
  Parity parity(int i) const { return parities_[i]; }
  int unit_index() const { return unit_index_; }

  const Expansion& mult(int a, int b) const;
  Expansion mult(const Expansion& a, const Expansion& b) const;
  Expansion mult_uncached(int a, int b) const;

  /// Entrywise anti-involution tau_d on the eta basis.
  Expansion tau(int a) const;
  bool has_tau() const { return carrier_->has_tau(); }

  /// Eta-basis coproduct component splitting degree d into (c, d - c):
  /// list of (left tuple, right tuple, coefficient).
  std::vector<std::tuple<std::vector<int>, std::vector<int>, Int>>
  coproduct_component(int a, int c) const;

  /// Materializes the algebra as an explicit SuperAlgebra (small dims only).
  SuperAlgebra materialize() const;

 private:
  const SuperAlgebra* carrier_;
  int d_;
  std::vector<MultisetIndex> index_;
  std::vector<Parity> parities_;
  std::unordered_map<std::string, int> lookup_;
  int unit_index_ = -1;
  mutable std::mutex mu_;
  mutable std::unordered_map<long long, Expansion> cache_;
};

/// Modified divided power of a calibrated supermodule, as a module over the
/// divided power of the acting algebra (same side).
class DividedPowerModule {
 public:
  DividedPowerModule(const DividedPowerAlgebra* algebra, const CalModule* carrier);

  const DividedPowerAlgebra& algebra() const { return *algebra_; }
  const CalModule& carrier() const { return *carrier_; }
  Side side() const { return carrier_->side(); }
  int degree() const { return algebra_->degree(); }
  int dim() const { return static_cast<int>(index_.size()); }
  const std::vector<MultisetIndex>& indices() const { return index_; }
  const MultisetIndex& index(int i) const { return index_[i]; }
  int index_of(const std::vector<int>& sorted_tuple) const;
  Parity parity(int i) const { return parities_[i]; }

  /// eta^a . y_v (left) resp. y_v . eta^a (right).
  const Expansion& act(int a, int v) const;
  Expansion act(const Expansion& a, const Expansion& v) const;
  Expansion act_uncached(int a, int v) const;

 private:
  const DividedPowerAlgebra* algebra_;
  const CalModule* carrier_;
  std::vector<MultisetIndex> index_;
  std::vector<Parity> parities_;
  std::unordered_map<std::string, int> lookup_;
  mutable std::mutex mu_;
  mutable std::unordered_map<long long, Expansion> cache_;
};

// ---------------------------------------------------------------------------
// Bilinear forms on modified divided powers.

using Gram = std::vector<std::vector<Rat>>;

struct LiftedForm {
  Gram gram;          // of ( . , . )_~ on the y basis
  int symmetry;       // +1 supersymmetric, -1 superantisymmetric (of the input)
  std::vector<MultisetIndex> index;
};

/// Validates the form preconditions (even, non-degenerate, (V_a, V_a) = 0,
/// perfect a/c pairing) and lifts it to ( . , . )_~ on the y basis.
LiftedForm lifted_form(const std::vector<CalBasisElement>& basis,
                       const Gram& gram, int d);

/// Pairing (y_b', y_{b*})_d against the dual-basis divided powers; returns
/// the matrix indexed by (b', b).
std::vector<std::vector<Rat>> dual_pairing_matrix(
    const std::vector<CalBasisElement>& basis, const Gram& gram, int d);

}  // namespace zzschur
