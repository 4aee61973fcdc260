#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "zzschur/scalars.hpp"

namespace zzschur {

enum class CalClass : unsigned char { a_part, c_part, odd_part };
enum class Side : unsigned char { left, right };

struct CalBasisElement {
  std::string name;
  Parity parity = Parity::even;
  CalClass cal = CalClass::a_part;
};

/// Integer linear combination of basis elements, sorted by index, no zeros.
using Term = std::pair<int, Int>;
using Expansion = std::vector<Term>;

Expansion expansion_add(const Expansion& a, const Expansion& b);
Expansion expansion_scale(const Expansion& a, const Int& c);
void expansion_accumulate(Expansion& acc, int index, const Int& c);
bool expansion_equal(const Expansion& a, const Expansion& b);

/// Heredity data (I, X, Y) with I = {0,...,ell} in its natural order.
/// X[i], Y[i] hold basis indices; e[i] is the standard idempotent of level i.
struct HeredityData {
  std::vector<std::vector<int>> X, Y;
  std::vector<int> e;
  int levels() const { return static_cast<int>(e.size()); }
};

struct AuditCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool all_pass() const;
  void add(std::string name, bool pass, std::string witness = "");
};

/// Finite-dimensional calibrated superalgebra given by an ordered basis and
/// an integral structure-constant table.
class SuperAlgebra {
 public:
  SuperAlgebra(std::string name, std::vector<CalBasisElement> basis,
               std::vector<std::vector<Expansion>> mult, Expansion unit,
               std::optional<std::vector<Expansion>> tau = std::nullopt,
               std::optional<HeredityData> heredity = std::nullopt);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int even_dim() const { return even_dim_; }
  int odd_dim() const { return dim() - even_dim_; }
  const std::vector<CalBasisElement>& basis() const { return basis_; }
  const CalBasisElement& element(int i) const { return basis_[i]; }
  int index_of(const std::string& name) const;

  const Expansion& mult(int a, int c) const { return mult_[a][c]; }
  Expansion mult(const Expansion& a, const Expansion& c) const;
  const Expansion& unit() const { return unit_; }

  bool has_tau() const { return tau_.has_value(); }
  const Expansion& tau(int a) const { return (*tau_)[a]; }
  Expansion tau(const Expansion& a) const;

  const std::optional<HeredityData>& heredity() const { return heredity_; }
  void set_heredity(HeredityData h) { heredity_ = std::move(h); }
  void set_tau(std::vector<Expansion> t);

 private:
  void validate() const;

  std::string name_;
  std::vector<CalBasisElement> basis_;
  std::vector<std::vector<Expansion>> mult_;
  Expansion unit_;
  std::optional<std::vector<Expansion>> tau_;
  std::optional<HeredityData> heredity_;
  int even_dim_ = 0;
};

/// Supermodule with explicit integral action table. For side == left the
/// table holds a.v, for side == right it holds v.a.
class CalModule {
 public:
  CalModule(const SuperAlgebra* algebra, Side side, std::string name,
            std::vector<CalBasisElement> basis,
            std::vector<std::vector<Expansion>> action);

  const SuperAlgebra& algebra() const { return *algebra_; }
  Side side() const { return side_; }
  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<CalBasisElement>& basis() const { return basis_; }
  const CalBasisElement& element(int i) const { return basis_[i]; }
  int index_of(const std::string& name) const;

  const Expansion& act(int a, int v) const { return action_[a][v]; }
  Expansion act(const Expansion& a, const Expansion& v) const;

  /// a.V_a inside V_a (left) resp. V_a.a' inside V_a (right).
  bool calibrated() const { return calibrated_; }

 private:
  const SuperAlgebra* algebra_;
  Side side_;
  std::string name_;
  std::vector<CalBasisElement> basis_;
  std::vector<std::vector<Expansion>> action_;
  bool calibrated_;
};

/// The extended zigzag superalgebra on vertices {0,...,ell} with its
/// anti-involution and conforming heredity data.
SuperAlgebra zigzag(int ell);

/// Matrix superalgebra M_n(A); basis xi^b_{r,s} ordered lexicographically by
/// (index of b, r, s) with 1-based r, s.
SuperAlgebra matrix_superalgebra(const SuperAlgebra& a, int n);

std::string matrix_element_name(const std::string& b, int r, int s);

/// Checks axioms (a), (b), (c) of the heredity-data definition plus
/// conformity of the even a-part of the heredity basis.
AuditReport heredity_audit(const SuperAlgebra& a);
AuditReport heredity_audit(const SuperAlgebra& a, const HeredityData& data);

/// True iff tau is even, an involution, and signed anti-multiplicative.
bool anti_involution_audit(const SuperAlgebra& a);

struct ZigzagModules {
  CalModule simple;      // L(i)
  CalModule standard;    // Delta(i)
  CalModule costandard;  // Nabla(i)
};

ZigzagModules zigzag_modules(const SuperAlgebra& z, int i);

/// Col_n(V) as a left module over M_n(A), basis v^t_r at index t * n + r.
CalModule column_module(const SuperAlgebra& mn_a, const CalModule& v, int n);
/// Row_n(V) as a right module over M_n(A), basis v^t_s at index t * n + s.
CalModule row_module(const SuperAlgebra& mn_a, const CalModule& v, int n);
/// M_n(V) over M_n(A), basis xi^t_{r,s} at index (t * n + r) * n + s.
/// The side follows v: a left (right) v gives the left (right) structure.
CalModule matrix_module(const SuperAlgebra& mn_a, const CalModule& v, int n);

/// dim Hom_Z(Delta(i), Nabla(j)) split by parity, via an exact solve.
std::pair<int, int> hom_dim(const CalModule& v, const CalModule& w);

nlohmann::json algebra_to_json(const SuperAlgebra& a);
SuperAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json module_to_json(const CalModule& m);
CalModule module_from_json(const nlohmann::json& j, const SuperAlgebra& algebra);

}  // namespace zzschur
