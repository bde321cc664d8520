#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nonarch {

// Element of the finite field F_q, q = p^f, realised as F_p[x]/(m(x)) for a
// monic irreducible m of degree f. Only small fields are supported (f <= 5,
// q <= 32 with the built-in moduli); everything is plain value semantics so
// elements can be copied, ordered and stored in containers freely.
class Fq {
public:
  static constexpr int kMaxDeg = 5;

  Fq() = default;  // invalid sentinel (p == 0)

  // Zero element of F_{p^f} with modulus coefficients m[0..f] (monic).
  Fq(int p, int f, const std::array<std::uint8_t, kMaxDeg + 1>& modulus);

  static Fq zero(int p, int f, const std::array<std::uint8_t, kMaxDeg + 1>& modulus);
  static Fq from_int(int p, int f, const std::array<std::uint8_t, kMaxDeg + 1>& modulus, long value);
  // The residue-field generator x (only meaningful for f > 1).
  static Fq generator(int p, int f, const std::array<std::uint8_t, kMaxDeg + 1>& modulus);

  int p() const { return p_; }
  int f() const { return f_; }
  long q() const;
  int coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::array<std::uint8_t, kMaxDeg + 1>& modulus() const { return mod_; }

  bool valid() const { return p_ != 0; }
  bool is_zero() const;
  bool is_one() const;

  // Canonical integer rank sum c_i p^i in [0, q); doubles as a total order.
  long rank() const;
  static Fq from_rank(int p, int f, const std::array<std::uint8_t, kMaxDeg + 1>& modulus, long rank);

  Fq operator-() const;
  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq inverse() const;
  Fq pow(long e) const;

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }
  bool operator<(const Fq& o) const { return rank() < o.rank(); }

  // Multiplicative order; element must be nonzero.
  long mult_order() const;

  // True for exactly one of {x, -x} when x != 0 (and always in char 2);
  // used to canonicalise matrix representatives up to sign.
  bool is_positive() const;

  // Rendered in the document grammar: plain integer for f == 1, polynomial
  // in "g" otherwise, e.g. "2*g+1".
  std::string str() const;

private:
  void check_compatible(const Fq& o) const;

  std::uint16_t p_ = 0;
  std::uint8_t f_ = 0;
  std::array<std::uint8_t, kMaxDeg> c_{};
  std::array<std::uint8_t, kMaxDeg + 1> mod_{};
};

// Built-in monic irreducible modulus for q = p^f <= 32 (f > 1); for f == 1
// returns the trivial modulus {0, 1} (i.e. m(x) = x, unused).
std::array<std::uint8_t, Fq::kMaxDeg + 1> default_residue_modulus(int p, int f);

// Checks that m (monic, degree f) is irreducible over F_p.
bool is_irreducible_modulus(int p, int f, const std::array<std::uint8_t, Fq::kMaxDeg + 1>& m);

}  // namespace nonarch
