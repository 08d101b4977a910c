#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace circuitsplit {

// Exact rational extended by +inf and -inf. Undefined forms (inf - inf,
// 0 * inf, x / 0 outside of reciprocal()) throw DomainError.
class ExtRat {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  ExtRat() = default;
  ExtRat(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtRat(long num, long den);
  explicit ExtRat(mpq_class v);

  static ExtRat inf() { return ExtRat(Kind::PosInf); }
  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }

  // Accepts "p", "-p", "p/q", decimals like "1.25", and "inf" / "-inf".
  static ExtRat parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ != Kind::Finite; }
  bool is_zero() const { return is_finite() && sgn(value_) == 0; }
  int sign() const;

  // Only valid for finite values.
  const mpq_class& value() const;

  // 1/x with 1/0 = +inf and 1/(+-inf) = 0; used for conductance <-> resistance.
  ExtRat reciprocal() const;

  ExtRat operator-() const;
  ExtRat& operator+=(const ExtRat& rhs);
  ExtRat& operator-=(const ExtRat& rhs);
  ExtRat& operator*=(const ExtRat& rhs);
  ExtRat& operator/=(const ExtRat& rhs);

  friend ExtRat operator+(ExtRat a, const ExtRat& b) { return a += b; }
  friend ExtRat operator-(ExtRat a, const ExtRat& b) { return a -= b; }
  friend ExtRat operator*(ExtRat a, const ExtRat& b) { return a *= b; }
  friend ExtRat operator/(ExtRat a, const ExtRat& b) { return a /= b; }

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  // "p/q", "p", "inf" or "-inf".
  std::string to_string() const;

 private:
  explicit ExtRat(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  mpq_class value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& x);

}  // namespace circuitsplit
