#include "circuitsplit/ext_rational.hpp"

#include <cctype>
#include <ostream>

#include "circuitsplit/error.hpp"

namespace circuitsplit {

namespace {

ExtRat::Kind infinity_with_sign(int s) {
  return s > 0 ? ExtRat::Kind::PosInf : ExtRat::Kind::NegInf;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ExtRat::ExtRat(long num, long den) {
  if (den == 0) throw DomainError("ExtRat: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExtRat::ExtRat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

ExtRat ExtRat::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "inf" || s == "+inf") return inf();
  if (s == "-inf") return neg_inf();

  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw DomainError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac));
    q = mpq_class(w * scale + f, scale);
  } else {
    if (!all_digits(body)) throw DomainError("malformed number '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(body)));
  }
  q.canonicalize();
  if (negative) q = -q;
  return ExtRat(q);
}

int ExtRat::sign() const {
  switch (kind_) {
    case Kind::PosInf: return 1;
    case Kind::NegInf: return -1;
    case Kind::Finite: break;
  }
  return sgn(value_);
}

const mpq_class& ExtRat::value() const {
  if (!is_finite()) throw DomainError("ExtRat: value() of an infinite quantity");
  return value_;
}

ExtRat ExtRat::reciprocal() const {
  if (is_infinite()) return ExtRat(0);
  if (sgn(value_) == 0) return inf();
  return ExtRat(mpq_class(1) / value_);
}

ExtRat ExtRat::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return inf();
    case Kind::Finite: break;
  }
  return ExtRat(mpq_class(-value_));
}

ExtRat& ExtRat::operator+=(const ExtRat& rhs) {
  if (is_finite() && rhs.is_finite()) {
    value_ += rhs.value_;
    return *this;
  }
  if (is_infinite() && rhs.is_infinite() && kind_ != rhs.kind_) {
    throw DomainError("ExtRat: inf - inf is undefined");
  }
  if (rhs.is_infinite()) {
    kind_ = rhs.kind_;
    value_ = 0;
  }
  return *this;
}

ExtRat& ExtRat::operator-=(const ExtRat& rhs) { return *this += -rhs; }

ExtRat& ExtRat::operator*=(const ExtRat& rhs) {
  if (is_finite() && rhs.is_finite()) {
    value_ *= rhs.value_;
    return *this;
  }
  int s = sign() * rhs.sign();
  if (s == 0) throw DomainError("ExtRat: 0 * inf is undefined");
  kind_ = infinity_with_sign(s);
  value_ = 0;
  return *this;
}

ExtRat& ExtRat::operator/=(const ExtRat& rhs) {
  if (rhs.is_zero()) throw DomainError("ExtRat: division by zero");
  if (rhs.is_infinite()) {
    if (is_infinite()) throw DomainError("ExtRat: inf / inf is undefined");
    *this = ExtRat(0);
    return *this;
  }
  if (is_infinite()) {
    kind_ = infinity_with_sign(sign() * rhs.sign());
    return *this;
  }
  value_ /= rhs.value_;
  return *this;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  auto rank = [](const ExtRat& x) {
    switch (x.kind_) {
      case ExtRat::Kind::NegInf: return 0;
      case ExtRat::Kind::Finite: return 1;
      case ExtRat::Kind::PosInf: return 2;
    }
    return 1;
  };
  int ra = rank(a);
  int rb = rank(b);
  if (ra != rb || ra != 1) return ra <=> rb;
  int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

std::string ExtRat::to_string() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const ExtRat& x) { return os << x.to_string(); }

}  // namespace circuitsplit
