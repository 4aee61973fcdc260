#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zzschur {

using Int = mpz_class;
using Rat = mpq_class;

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline bool is_odd(Parity p) { return p == Parity::odd; }

Int factorial(long n);
Int binomial(long n, long k);

/// Ground field handle: the rationals or F_p with p prime.
///
/// Elements are carried as `Rat` in canonical form: lowest terms with
/// positive denominator over Q, integer residues in [0,p) over F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime_field(unsigned long p);
  /// Parses "Q" or "F<p>"; rejects non-prime p.
  static Field parse(const std::string& spec);

  bool is_rational() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }
  std::string name() const;

  Rat from_int(const Int& z) const;
  Rat canon(const Rat& x) const;
  Rat add(const Rat& a, const Rat& b) const;
  Rat sub(const Rat& a, const Rat& b) const;
  Rat mul(const Rat& a, const Rat& b) const;
  Rat neg(const Rat& a) const;
  Rat inv(const Rat& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;  // 0 means Q
};

/// Approximate size of a rational for pivot selection: bit length of
/// numerator plus denominator.
size_t rat_bits(const Rat& x);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);

}  // namespace zzschur
