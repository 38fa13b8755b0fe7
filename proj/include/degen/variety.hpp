#ifndef DEGEN_VARIETY_HPP
#define DEGEN_VARIETY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "degen/jordan.hpp"

namespace degen {

/// One of the three matrix varieties of the sandwich:
///   X(delta)  all matrices with Jordan data delta,
///   U(gamma)  single eigenvalue, block sizes gamma,
///   S(gamma)  semisimple, eigenspace dimensions gamma.
class VarietyDescriptor {
 public:
  enum class Kind { X, U, S };

  static VarietyDescriptor x(JordanData delta);
  static VarietyDescriptor u(Partition gamma);
  static VarietyDescriptor s(Partition gamma);

  Kind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  /// Only valid for kind X.
  const JordanData& delta() const;
  /// Only valid for kinds U and S.
  const Partition& partition() const;

  /// Abstract Jordan data of every member of the variety.
  JordanData jordan_data() const;
  /// Number of distinct eigenvalues of any member.
  std::size_t eigenvalue_count() const { return jordan_data().m(); }

  std::string to_string() const;

  friend bool operator==(const VarietyDescriptor&, const VarietyDescriptor&) = default;

 private:
  VarietyDescriptor(Kind kind, std::variant<JordanData, Partition> payload, int n)
      : kind_(kind), payload_(std::move(payload)), n_(n) {}

  Kind kind_;
  std::variant<JordanData, Partition> payload_;
  int n_;
};

/// Deterministic member of a variety: X uses canonical_representative, U is
/// nilpotent (eigenvalue 0), S is diagonal with eigenvalue i+1 repeated
/// gamma_i times.
Matrix representative(const VarietyDescriptor& v, FieldSpec field);

bool membership(const Matrix& a, const VarietyDescriptor& v);

/// max over 0 <= e_i <= dims_i, sum e_i = e, of sum e_i (dims_i - e_i):
/// the dimension of the e-dimensional invariant subspaces of a semisimple
/// matrix with eigenspace dimensions dims.
std::int64_t fixed_dim_formula(std::span<const int> dims, int e);

struct SandwichReport {
  JordanData delta;
  Partition gamma;
  Partition gamma_t;
  std::int64_t centralizer_dim;
  std::vector<std::int64_t> fixed_dims;  // index e-1 for e = 1..n-1

  VarietyDescriptor semisimple() const { return VarietyDescriptor::s(gamma_t); }
  VarietyDescriptor middle() const { return VarietyDescriptor::x(delta.abstract()); }
  VarietyDescriptor equipotent() const { return VarietyDescriptor::u(gamma); }
};

SandwichReport sandwich(const JordanData& delta);

}  // namespace degen

#endif
