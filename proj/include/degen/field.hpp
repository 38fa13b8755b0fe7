#ifndef DEGEN_FIELD_HPP
#define DEGEN_FIELD_HPP

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace degen {

/// The exact field a computation lives in: the rationals or F_p.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  static FieldSpec rational() noexcept { return FieldSpec(Kind::Rational, 0); }
  /// Throws InvalidArgument unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n) noexcept;

/// An element of a FieldSpec. Rationals are kept in lowest terms, residues in
/// [0, p). Mixing fields in one operation throws InvalidArgument.
class Scalar {
 public:
  explicit Scalar(FieldSpec field) : field_(field), value_(0) {}
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);

  /// Parses "a", "-a" or "a/b".
  static Scalar parse(FieldSpec field, const std::string& text);

  const FieldSpec& field() const noexcept { return field_; }
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  Scalar inverse() const;
  std::string to_string() const { return value_.get_str(); }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  /// Total order on representatives (value order for rationals, residue
  /// order for F_p); used only for canonical sorting.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return a.value_ < b.value_;
  }

 private:
  void reduce();
  void check_same_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class value_;
};

}  // namespace degen

#endif
