#include "degen/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "degen/error.hpp"

namespace degen {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NonSplit: return "NonSplit";
    case ErrorCode::InfeasibleE: return "InfeasibleE";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::InadmissiblePrime: return "InadmissiblePrime";
    case ErrorCode::InsufficientPrimes: return "InsufficientPrimes";
    case ErrorCode::GuardrailExceeded: return "GuardrailExceeded";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      fail(ErrorCode::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(ErrorCode::InvalidArgument, "partition parts must be nonincreasing");
  }
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition transpose(const Partition& lambda) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(lambda.largest()));
  for (int k = 1; k <= lambda.largest(); ++k) {
    int count = 0;
    for (int part : lambda.parts()) {
      if (part < k) break;
      ++count;
    }
    out.push_back(count);
  }
  return Partition(std::move(out));
}

Partition add(std::span<const Partition> lambdas) {
  if (lambdas.empty())
    fail(ErrorCode::InvalidArgument, "add requires at least one partition");
  std::size_t width = 0;
  for (const auto& l : lambdas) width = std::max(width, l.length());
  std::vector<int> out(width, 0);
  for (const auto& l : lambdas)
    for (std::size_t i = 0; i < l.length(); ++i) out[i] += l[i];
  return Partition(std::move(out));
}

Partition add(const Partition& a, const Partition& b) {
  const Partition both[] = {a, b};
  return add(std::span<const Partition>(both));
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> out;
  out.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(out), std::greater<int>());
  return Partition(std::move(out));
}

std::int64_t centralizer_dimension_by_transpose(const Partition& lambda) {
  const Partition conjugate = transpose(lambda);
  std::int64_t total = 0;
  for (int d : conjugate.parts())
    total += static_cast<std::int64_t>(d) * d;
  return total;
}

std::int64_t centralizer_dimension_by_weights(const Partition& lambda) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    total += static_cast<std::int64_t>(2 * i + 1) * lambda[i];
  return total;
}

std::int64_t centralizer_dimension(const Partition& lambda) {
  const auto by_transpose = centralizer_dimension_by_transpose(lambda);
  const auto by_weights = centralizer_dimension_by_weights(lambda);
  if (by_transpose != by_weights)
    fail(ErrorCode::Internal,
         "centralizer formulas disagree on " + lambda.to_string());
  return by_transpose;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "enumerate_partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

}  // namespace degen
