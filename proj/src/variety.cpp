#include "degen/variety.hpp"

#include <algorithm>

#include "degen/error.hpp"

namespace degen {

VarietyDescriptor VarietyDescriptor::x(JordanData delta) {
  const int n = delta.n();
  return VarietyDescriptor(Kind::X, delta.abstract(), n);
}

VarietyDescriptor VarietyDescriptor::u(Partition gamma) {
  if (gamma.empty()) fail(ErrorCode::InvalidArgument, "U needs a nonempty partition");
  const int n = gamma.size();
  return VarietyDescriptor(Kind::U, std::move(gamma), n);
}

VarietyDescriptor VarietyDescriptor::s(Partition gamma) {
  if (gamma.empty()) fail(ErrorCode::InvalidArgument, "S needs a nonempty partition");
  const int n = gamma.size();
  return VarietyDescriptor(Kind::S, std::move(gamma), n);
}

const JordanData& VarietyDescriptor::delta() const {
  if (kind_ != Kind::X) fail(ErrorCode::InvalidArgument, "descriptor is not of kind X");
  return std::get<JordanData>(payload_);
}

const Partition& VarietyDescriptor::partition() const {
  if (kind_ == Kind::X) fail(ErrorCode::InvalidArgument, "descriptor of kind X has no partition");
  return std::get<Partition>(payload_);
}

JordanData VarietyDescriptor::jordan_data() const {
  switch (kind_) {
    case Kind::X:
      return delta();
    case Kind::U:
      return JordanData({partition()});
    case Kind::S: {
      std::vector<Partition> blocks;
      for (int dim : partition().parts())
        blocks.emplace_back(std::vector<int>(static_cast<std::size_t>(dim), 1));
      return JordanData(std::move(blocks));
    }
  }
  fail(ErrorCode::Internal, "unknown descriptor kind");
}

std::string VarietyDescriptor::to_string() const {
  switch (kind_) {
    case Kind::X: return "X" + delta().to_string();
    case Kind::U: return "U" + partition().to_string();
    case Kind::S: return "S" + partition().to_string();
  }
  return "?";
}

Matrix representative(const VarietyDescriptor& v, FieldSpec field) {
  switch (v.kind()) {
    case VarietyDescriptor::Kind::X:
      return canonical_representative(v.delta(), field);
    case VarietyDescriptor::Kind::U:
      return jordan_matrix(Scalar(field, 0), v.partition());
    case VarietyDescriptor::Kind::S: {
      const auto& dims = v.partition();
      if (field.is_prime() && field.characteristic() <= dims.length())
        fail(ErrorCode::FieldTooSmall, field.to_string() + " cannot hold " +
                                           std::to_string(dims.length()) +
                                           " distinct nonzero eigenvalues");
      std::vector<Scalar> diag;
      for (std::size_t i = 0; i < dims.length(); ++i)
        for (int k = 0; k < dims[i]; ++k) diag.emplace_back(field, static_cast<long>(i + 1));
      return Matrix::diagonal(diag);
    }
  }
  fail(ErrorCode::Internal, "unknown descriptor kind");
}

bool membership(const Matrix& a, const VarietyDescriptor& v) {
  if (!a.is_square() || static_cast<int>(a.rows()) != v.n()) return false;
  const JordanData type = jordan_type_of(a);
  switch (v.kind()) {
    case VarietyDescriptor::Kind::X:
      return type == v.delta();
    case VarietyDescriptor::Kind::U:
      return type.m() == 1 && type.blocks().front() == v.partition();
    case VarietyDescriptor::Kind::S: {
      std::vector<int> dims;
      for (const auto& b : type.blocks()) {
        if (b.largest() != 1) return false;
        dims.push_back(static_cast<int>(b.length()));
      }
      std::sort(dims.begin(), dims.end(), std::greater<int>());
      return Partition(std::move(dims)) == v.partition();
    }
  }
  return false;
}

namespace {

void best_split(std::span<const int> dims, std::size_t index, int remaining,
                std::int64_t acc, std::int64_t& best) {
  if (index == dims.size()) {
    if (remaining == 0) best = std::max(best, acc);
    return;
  }
  int tail = 0;
  for (std::size_t i = index + 1; i < dims.size(); ++i) tail += dims[i];
  const int dim = dims[index];
  for (int e = 0; e <= std::min(dim, remaining); ++e) {
    if (remaining - e > tail) continue;
    best_split(dims, index + 1, remaining - e,
               acc + static_cast<std::int64_t>(e) * (dim - e), best);
  }
}

}  // namespace

std::int64_t fixed_dim_formula(std::span<const int> dims, int e) {
  int total = 0;
  for (int d : dims) {
    if (d <= 0) fail(ErrorCode::InvalidArgument, "eigenspace dimensions must be positive");
    total += d;
  }
  if (e < 0 || e > total)
    fail(ErrorCode::InfeasibleE, "e = " + std::to_string(e) + " outside [0, " +
                                     std::to_string(total) + "]");
  std::int64_t best = -1;
  best_split(dims, 0, e, 0, best);
  return best;
}

SandwichReport sandwich(const JordanData& delta) {
  SandwichReport report{delta.abstract(), gamma(delta), Partition{}, 0, {}};
  report.gamma_t = transpose(report.gamma);
  report.centralizer_dim = centralizer_dim(delta);
  const auto& dims = report.gamma_t.parts();
  for (int e = 1; e < delta.n(); ++e)
    report.fixed_dims.push_back(fixed_dim_formula(dims, e));
  return report;
}

}  // namespace degen
