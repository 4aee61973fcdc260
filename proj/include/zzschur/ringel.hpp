#pragma once

#include "zzschur/schur.hpp"
#include "zzschur/tilting.hpp"

namespace zzschur {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string title;
  std::vector<CheckResult> checks;
  std::map<std::string, std::string> stats;

  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = "");
  void merge(const VerifyReport& other);
};

/// The bimodule scrT = Gamma~^d M_n(T) over (T^Z(n,d), T^{Z'}(n,d)), with its
/// weights and left-content decomposition. Action tables stay integral;
/// fields enter only in the solves.
struct ScrT {
  const SchurAlgebra* schur = nullptr;  // left
  const SchurAlgebra* dual = nullptr;   // right
  const TiltingBimodule* tilt = nullptr;
  std::unique_ptr<CalModule> mn_left, mn_right;
  std::unique_ptr<DividedPowerModule> left, right;

  std::vector<Weight> lw, rw, content;
  std::vector<Parity> par;

  std::vector<Weight> contents;          // distinct contents, sorted
  std::vector<std::vector<int>> blocks;  // members per content, ascending
  std::vector<int> content_id, local_pos;

  // basis indices grouped by left weight (for the left-action skip) and by
  // right weight (for the right-action legs)
  std::map<Weight, std::vector<int>> by_lweight, by_rweight;

  int dim() const { return left ? left->dim() : 0; }
};

ScrT build_scrT(const SchurAlgebra& s, const SchurAlgebra& sd,
                const TiltingBimodule& t);

/// Integral left action of every eta, restricted to one content block:
/// per eta a sorted entry list (local col, local row, coeff).
using BlockEntries = std::vector<std::array<long, 3>>;
struct BlockOps {
  std::map<int, BlockEntries> by_eta;
};

/// The heavy precompute; verifies content preservation along the way.
std::vector<BlockOps> build_left_block_ops(const ScrT& st);

/// dim End_{T^Z(n,d)}(scrT) split by parity, solved blockwise by content and
/// weight. `jobs` parallelizes over block pairs.
struct EndDimensions {
  long even = 0, odd = 0;
  long total() const { return even + odd; }
  // per (content mu, content nu): hom dimension (both parities)
  std::map<std::pair<int, int>, long> hom_dims;
};
EndDimensions end_dimension(const ScrT& st, const std::vector<BlockOps>& ops,
                            const Field& field, int jobs = 1);

/// Rank of the right-action map T^{Z'}(n,d) -> End(scrT), blocked by
/// bi-weight; equals dim T^{Z'}(n,d) iff the right action is faithful.
long right_action_rank(const ScrT& st, const Field& field);

/// (eta . y) . eta' = eta . (y . eta') over Z; exhaustive when the triple
/// count fits the budget, sampled with a fixed seed otherwise.
CheckResult commutation_check(const ScrT& st, long long exhaustive_budget,
                              int samples);

/// Proposition-level audit of scrT^d_i: explicit isomorphism with the
/// eta-corner for i > 0, dimension C(n,d) at i = 0, and the unique maximal
/// weight with multiplicity one.
VerifyReport tilt_weight_audit(const SchurAlgebra& s, const TiltingBimodule& t);

/// Delta-filtration multiplicities of a character, solved against the
/// combinatorial Delta-characters (unique by their linear independence).
struct FiltrationResult {
  bool ok = false;
  std::string error;
  std::map<Multipartition, long> mult;
};
FiltrationResult filtration_multiplicities(const Character& ch, int n, int d,
                                           int ell,
                                           const ColoredAlphabets& alph);

/// Kostka / filtration identities over all contents (criterion: GenKostka and
/// the single-row case).
VerifyReport kostka_filtration_audit(const ScrT& st);

/// Everything needed to verify one (n, d, ell): the algebras, the bimodule,
/// and the integral block action tables, reusable across fields.
struct RingelContext {
  RingelContext(int n, int d, int ell);
  std::unique_ptr<SuperAlgebra> z;
  std::unique_ptr<TiltingBimodule> tilt;
  std::unique_ptr<SchurAlgebra> schur, dual;
  ScrT st;
  std::vector<BlockOps> ops;
};

VerifyReport verify_ringel_with(const RingelContext& ctx, const Field& field,
                                int jobs = 1, bool with_commutation = true);

/// The full Ringel self-duality report at one parameter set.
VerifyReport verify_ringel(int n, int d, int ell, const Field& field,
                           int jobs = 1);

}  // namespace zzschur
