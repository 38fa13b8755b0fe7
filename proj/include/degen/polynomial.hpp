#ifndef DEGEN_POLYNOMIAL_HPP
#define DEGEN_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "degen/field.hpp"

namespace degen {

/// Univariate polynomial over a FieldSpec, coefficients stored lowest degree
/// first with no trailing zeros. The zero polynomial has no coefficients and
/// degree -1.
class Polynomial {
 public:
  explicit Polynomial(FieldSpec field) : field_(field) {}
  Polynomial(FieldSpec field, std::vector<Scalar> coefficients);

  /// (x - root)
  static Polynomial linear_factor(const Scalar& root);

  const FieldSpec& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(int k) const;
  Scalar leading() const { return coefficient(degree()); }
  bool is_monic() const { return !is_zero() && leading().is_one(); }

  Scalar evaluate(const Scalar& x) const;

  Polynomial operator*(const Polynomial& rhs) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Division by (x - root); the remainder must be zero.
  Polynomial deflate(const Scalar& root) const;

  std::string to_string() const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

}  // namespace degen

#endif
