#include "zzschur/scalars.hpp"

namespace zzschur {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Field Field::prime_field(unsigned long p) {
  Int z(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("not a prime: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q") return rationals();
  if (spec.size() >= 2 && spec[0] == 'F') {
    errno = 0;
    char* end = nullptr;
    unsigned long p = std::strtoul(spec.c_str() + 1, &end, 10);
    if (errno == 0 && end && *end == '\0') return prime_field(p);
  }
  throw std::invalid_argument("bad field spec '" + spec + "' (want Q or F<p>)");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Rat Field::from_int(const Int& z) const {
  if (is_rational()) return Rat(z);
  Int r;
  mpz_mod_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
  return Rat(r);
}

Rat Field::canon(const Rat& x) const {
  if (is_rational()) {
    Rat y(x);
    y.canonicalize();
    return y;
  }
  // Residues may arrive as fractions after generic arithmetic; clear the
  // denominator with a modular inverse.
  Rat y(x);
  y.canonicalize();
  if (y.get_den() == 1) return from_int(y.get_num());
  Int den_inv;
  Int p(static_cast<unsigned long>(p_));
  if (mpz_invert(den_inv.get_mpz_t(), y.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("division by zero residue mod " + std::to_string(p_));
  return from_int(y.get_num() * den_inv);
}

Rat Field::add(const Rat& a, const Rat& b) const {
  return is_rational() ? Rat(a + b) : canon(a + b);
}
Rat Field::sub(const Rat& a, const Rat& b) const {
  return is_rational() ? Rat(a - b) : canon(a - b);
}
Rat Field::mul(const Rat& a, const Rat& b) const {
  return is_rational() ? Rat(a * b) : canon(a * b);
}
Rat Field::neg(const Rat& a) const {
  return is_rational() ? Rat(-a) : canon(-a);
}

Rat Field::inv(const Rat& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (is_rational()) return Rat(1 / a);
  Int ai = canon(a).get_num();
  Int r, p(static_cast<unsigned long>(p_));
  if (mpz_invert(r.get_mpz_t(), ai.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("non-invertible residue");
  return Rat(r);
}

size_t rat_bits(const Rat& x) {
  return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace zzschur
