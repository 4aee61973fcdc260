#pragma once

#include <map>
#include <vector>

#include "zzschur/superalg.hpp"

namespace zzschur {

using Partition = std::vector<int>;    // weakly decreasing, no trailing zeros
using Composition = std::vector<int>;  // fixed length, parts >= 0

/// Element of Lambda^I(n, d): one composition with n parts per color.
struct Weight {
  std::vector<Composition> comp;

  bool operator==(const Weight& o) const { return comp == o.comp; }
  bool operator<(const Weight& o) const { return comp < o.comp; }
  int total() const;
  std::string str() const;
};

/// Element of Lambda^I_+(n, d); components stored trimmed.
struct Multipartition {
  std::vector<Partition> parts;

  bool operator==(const Multipartition& o) const { return parts == o.parts; }
  bool operator<(const Multipartition& o) const { return parts < o.parts; }
  int total() const;
  std::string str() const;
};

using Character = std::map<Weight, long>;

int partition_entry(const Partition& p, int k);
bool is_partition(const Composition& c);
Partition trim(Composition c);

std::vector<Weight> all_weights(int n, int d, int ell);
std::vector<Multipartition> dominant_weights(int n, int d, int ell);
std::vector<Partition> partitions_of(int d, int max_parts);

Weight weight_of(const Multipartition& mp, int n, int ell);
Weight iota_weight(int i, const Composition& c, int n, int ell);
Composition epsilon(int l, int n);  // single 1 in slot l (1-based)

Multipartition conjugate(const Multipartition& mp);
Multipartition reversed(const Multipartition& mp);
Weight reversed(const Weight& w);

/// Dominance on compositions of equal size: prefix sums compare.
bool dominance_leq(const Composition& a, const Composition& b);
/// The two-stage order on Lambda^I(n, d).
bool leq_I(const Weight& a, const Weight& b);
bool leq_I(const Multipartition& a, const Multipartition& b, int n, int ell);

/// Littlewood-Richardson coefficient c^nu_{la, mu} by lattice-word
/// enumeration of skew tableaux.
long lr_coeff(const Partition& la, const Partition& mu, const Partition& nu);
long multi_lr(const Multipartition& la, const Multipartition& mu,
              const Multipartition& nu);

// ---------------------------------------------------------------------------
// X-colored standard tableaux over heredity data.

struct TableauColor {
  int element;     // basis index of the coloring element x
  Parity parity;
  int left_color;  // the unique i with e_i x = x
  std::string name;
};

/// Ordered colored alphabets per level, colors listed in heredity-data order.
struct ColoredAlphabets {
  std::vector<std::vector<TableauColor>> colors;  // per level i
  int levels() const { return static_cast<int>(colors.size()); }
};

/// Reads the alphabets off an algebra with heredity data; the left color of
/// each x in X(i) is resolved through the idempotent action and must be
/// unique.
ColoredAlphabets colored_alphabets(const SuperAlgebra& a);

struct ColoredTableau {
  // entries[i] holds the filling of component i in row-major order,
  // each entry a pair (letter in [1..n], color rank in that level)
  std::vector<std::vector<std::pair<int, int>>> entries;
  Weight left_weight;
};

std::vector<ColoredTableau> colored_tableaux(const ColoredAlphabets& alph,
                                             const Multipartition& la, int n);

/// k_{la, mu} = |Std^X(la, mu)| for all mu at once.
Character kostka_character(const ColoredAlphabets& alph,
                           const Multipartition& la, int n);
long kostka(const ColoredAlphabets& alph, const Multipartition& la,
            const Weight& mu, int n);

/// ch Delta(la) as a weight character; requires d <= n.
Character delta_character(const ColoredAlphabets& alph,
                          const Multipartition& la, int n);

Character char_product(const Character& a, const Character& b, int n, int ell);

// ---------------------------------------------------------------------------
// The Xi and Omega sets.

Multipartition beta_mp(int d, int s, int i, int ell);
std::vector<Multipartition> xi_set(int d, int i, int n, int ell);

/// Omega^la_beta for beta = beta_i(r, s): remove s boxes from distinct
/// columns of component i-1 and r-s boxes from distinct rows of component i.
std::vector<Multipartition> omega_set(const Multipartition& la, int i, int r,
                                      int s, int n, int ell);

}  // namespace zzschur
