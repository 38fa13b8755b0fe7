#ifndef DEGEN_JORDAN_HPP
#define DEGEN_JORDAN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degen/matrix.hpp"
#include "degen/partition.hpp"

namespace degen {

struct EigenBlocks {
  Scalar eigenvalue;
  Partition partition;
};

/// Jordan data: one partition per distinct eigenvalue.
///
/// The abstract form (a multiset of partitions, kept sorted) identifies the
/// class of all matrices with the same block structure up to relabeling of
/// the eigenvalues. The concrete form additionally pins each partition to an
/// eigenvalue. Equality compares the abstract form only.
class JordanData {
 public:
  explicit JordanData(std::vector<Partition> blocks);
  explicit JordanData(std::vector<EigenBlocks> concrete);

  const std::vector<Partition>& blocks() const noexcept { return blocks_; }
  const std::optional<std::vector<EigenBlocks>>& concrete() const noexcept {
    return concrete_;
  }
  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return blocks_.size(); }

  JordanData abstract() const { return JordanData(blocks_); }
  std::string to_string() const;

  friend bool operator==(const JordanData& a, const JordanData& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Partition> blocks_;
  std::optional<std::vector<EigenBlocks>> concrete_;
  int n_ = 0;
};

/// Canonical multiset order: larger partitions first, then lexicographically
/// decreasing.
bool canonical_before(const Partition& a, const Partition& b);

/// Jordan data of a square matrix whose characteristic polynomial splits.
/// For each eigenvalue the conjugate partition is read off the rank drops
/// rank((A - a)^(k-1)) - rank((A - a)^k), stopping once the rank is stationary.
JordanData jordan_type_of(const Matrix& a);

/// Partition of the blocks for one eigenvalue, from rank drops.
Partition blocks_for_eigenvalue(const Matrix& a, const Scalar& eigenvalue);

Partition gamma(const JordanData& delta);
int d_of(const JordanData& delta);
int min_poly_degree(const JordanData& delta);
inline bool has_quadratic_minpoly(const JordanData& delta) {
  return min_poly_degree(delta) == 2;
}
/// Sum over eigenvalues of the single-eigenvalue centralizer dimension;
/// checked against the sum of squared parts of transpose(gamma).
std::int64_t centralizer_dim(const JordanData& delta);

/// Every multiset of partitions with total size n, each exactly once.
std::vector<JordanData> enumerate_jordan_data(int n);

Matrix jordan_block(const Scalar& eigenvalue, int size);
/// Direct sum of Jordan blocks of the given sizes at one eigenvalue.
Matrix jordan_matrix(const Scalar& eigenvalue, const Partition& lambda);
/// Direct sum over the concrete blocks.
Matrix jordan_matrix(std::span<const EigenBlocks> concrete);

/// Canonical representative of X(delta): eigenvalue i+1 for the i-th
/// partition in canonical order. Over F_p requires p > m.
Matrix canonical_representative(const JordanData& delta, FieldSpec field);

}  // namespace degen

#endif
