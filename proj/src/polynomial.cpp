#include "degen/polynomial.hpp"

#include "degen/error.hpp"

namespace degen {

Polynomial::Polynomial(FieldSpec field, std::vector<Scalar> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_))
      fail(ErrorCode::InvalidArgument, "polynomial coefficients must share the field");
  trim();
}

Polynomial Polynomial::linear_factor(const Scalar& root) {
  return Polynomial(root.field(), {-root, Scalar(root.field(), 1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Scalar(field_);
  return coeffs_[static_cast<std::size_t>(k)];
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial(field_);
  std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1,
                          Scalar(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::deflate(const Scalar& root) const {
  if (degree() < 1) fail(ErrorCode::InvalidArgument, "cannot deflate a constant");
  // synthetic division, highest coefficient first
  std::vector<Scalar> quotient(coeffs_.size() - 1, Scalar(field_));
  Scalar carry(field_);
  for (int k = degree(); k >= 1; --k) {
    carry = carry * root + coeffs_[static_cast<std::size_t>(k)];
    quotient[static_cast<std::size_t>(k - 1)] = carry;
  }
  const Scalar remainder = carry * root + coeffs_[0];
  if (!remainder.is_zero())
    fail(ErrorCode::Internal, "deflate: " + root.to_string() + " is not a root");
  return Polynomial(field_, std::move(quotient));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar c = coefficient(k);
    if (c.is_zero()) continue;
    std::string term;
    const bool unit = c.is_one() && k > 0;
    if (!unit) term = c.to_string();
    if (k > 0) {
      if (!unit) term += "*";
      term += "x";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace degen
