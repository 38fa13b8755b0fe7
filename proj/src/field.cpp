#include "degen/field.hpp"

#include "degen/error.hpp"

namespace degen {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) noexcept {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!degen::is_prime(p))
    fail(ErrorCode::InvalidArgument, "field characteristic " +
                                         std::to_string(p) + " is not prime");
  return FieldSpec(Kind::Prime, p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(FieldSpec field, long value) : field_(field), value_(value) {
  reduce();
}

Scalar::Scalar(FieldSpec field, const mpq_class& value)
    : field_(field), value_(value) {
  value_.canonicalize();
  reduce();
}

Scalar Scalar::parse(FieldSpec field, const std::string& text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty scalar literal");
  std::string body = text;
  std::size_t start = (body[0] == '-' || body[0] == '+') ? 1 : 0;
  const auto slash = body.find('/');
  auto all_digits = [](const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const bool ok = slash == std::string::npos
                      ? all_digits(body, start, body.size())
                      : all_digits(body, start, slash) &&
                            all_digits(body, slash + 1, body.size());
  if (!ok) fail(ErrorCode::Parse, "malformed scalar literal '" + text + "'");
  if (body[0] == '+') body.erase(0, 1);
  mpq_class q;
  q.set_str(body, 10);
  if (sgn(q.get_den()) == 0)
    fail(ErrorCode::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  if (field.is_prime()) {
    mpz_class p(static_cast<unsigned long>(field.characteristic()));
    if (mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t()))
      fail(ErrorCode::Parse, "denominator of '" + text + "' vanishes in " +
                                 field.to_string());
  }
  return Scalar(field, q);
}

void Scalar::reduce() {
  if (!field_.is_prime()) return;
  mpz_class p(static_cast<unsigned long>(field_.characteristic()));
  mpz_class num = value_.get_num();
  mpz_class den = value_.get_den();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      fail(ErrorCode::InvalidArgument, "value not representable in " +
                                           field_.to_string());
    num *= inv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  value_ = mpq_class(r);
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_))
    fail(ErrorCode::InvalidArgument, "mixed fields " + field_.to_string() +
                                         " and " + other.field_.to_string());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ += rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ -= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ *= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  out.value_ = -value_;
  out.reduce();
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  if (field_.is_rational()) return Scalar(field_, 1 / value_);
  mpz_class p(static_cast<unsigned long>(field_.characteristic()));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(field_, mpq_class(inv));
}

}  // namespace degen
