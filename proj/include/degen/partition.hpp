#ifndef DEGEN_PARTITION_HPP
#define DEGEN_PARTITION_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace degen {

/// An integer partition: a nonincreasing sequence of positive parts.
///
/// The empty partition is representable (it is the additive identity used
/// while padding sums) but every public producer in the library returns a
/// partition of positive size.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept;  // n = sum of parts
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_.at(i); }
  // Part i, or 0 past the end.
  int part_or_zero(std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

Partition transpose(const Partition& lambda);

/// Componentwise sum, shorter partitions padded with zeros.
Partition add(std::span<const Partition> lambdas);
Partition add(const Partition& a, const Partition& b);

/// Multiset union of parts.
Partition union_of(const Partition& a, const Partition& b);

/// Dimension of the centralizer of a single-eigenvalue matrix of Jordan type
/// lambda. Computed both as sum of squared conjugate parts and as
/// sum (2i-1) lambda_i; throws Internal if the two disagree.
std::int64_t centralizer_dimension(const Partition& lambda);
std::int64_t centralizer_dimension_by_transpose(const Partition& lambda);
std::int64_t centralizer_dimension_by_weights(const Partition& lambda);

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int n);

}  // namespace degen

#endif
