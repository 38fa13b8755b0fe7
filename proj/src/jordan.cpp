#include "degen/jordan.hpp"

#include <algorithm>
#include <functional>

#include "degen/error.hpp"
#include "degen/linear.hpp"

namespace degen {

bool canonical_before(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

namespace {

void sort_canonical(std::vector<Partition>& blocks) {
  std::sort(blocks.begin(), blocks.end(), canonical_before);
}

}  // namespace

JordanData::JordanData(std::vector<Partition> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty())
    fail(ErrorCode::InvalidArgument, "Jordan data needs at least one partition");
  for (const auto& b : blocks_) {
    if (b.empty()) fail(ErrorCode::InvalidArgument, "empty partition in Jordan data");
    n_ += b.size();
  }
  sort_canonical(blocks_);
}

JordanData::JordanData(std::vector<EigenBlocks> concrete) {
  if (concrete.empty())
    fail(ErrorCode::InvalidArgument, "Jordan data needs at least one eigenvalue");
  std::sort(concrete.begin(), concrete.end(),
            [](const EigenBlocks& x, const EigenBlocks& y) {
              return x.eigenvalue < y.eigenvalue;
            });
  for (std::size_t i = 0; i < concrete.size(); ++i) {
    if (concrete[i].partition.empty())
      fail(ErrorCode::InvalidArgument, "empty partition in Jordan data");
    if (i > 0 && concrete[i].eigenvalue == concrete[i - 1].eigenvalue)
      fail(ErrorCode::InvalidArgument, "eigenvalues must be pairwise distinct");
    if (!(concrete[i].eigenvalue.field() == concrete[0].eigenvalue.field()))
      fail(ErrorCode::InvalidArgument, "eigenvalues must share a field");
    blocks_.push_back(concrete[i].partition);
    n_ += concrete[i].partition.size();
  }
  sort_canonical(blocks_);
  concrete_ = std::move(concrete);
}

std::string JordanData::to_string() const {
  std::string out = "{";
  if (concrete_) {
    for (std::size_t i = 0; i < concrete_->size(); ++i) {
      if (i) out += ", ";
      out += (*concrete_)[i].eigenvalue.to_string() + ":" +
             (*concrete_)[i].partition.to_string();
    }
  } else {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) out += ",";
      out += blocks_[i].to_string();
    }
  }
  return out + "}";
}

Partition blocks_for_eigenvalue(const Matrix& a, const Scalar& eigenvalue) {
  const Matrix b = a.shifted(eigenvalue);
  std::vector<int> conjugate;
  std::size_t previous = a.rows();
  Matrix power = b;
  while (true) {
    const std::size_t r = rank(power);
    if (r == previous) break;
    conjugate.push_back(static_cast<int>(previous - r));
    previous = r;
    if (r == 0) break;
    power = power * b;
  }
  return transpose(Partition(std::move(conjugate)));
}

JordanData jordan_type_of(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::InvalidArgument, "Jordan type of non-square matrix");
  if (a.rows() == 0) fail(ErrorCode::InvalidArgument, "Jordan type of empty matrix");
  const auto roots = split_roots(char_poly(a));
  std::vector<EigenBlocks> concrete;
  for (const auto& [root, mult] : roots) {
    Partition lambda = blocks_for_eigenvalue(a, root);
    if (lambda.size() != mult)
      fail(ErrorCode::Internal, "generalized eigenspace of " + root.to_string() +
                                    " has dimension " + std::to_string(lambda.size()) +
                                    " but algebraic multiplicity " + std::to_string(mult));
    concrete.push_back({root, std::move(lambda)});
  }
  return JordanData(std::move(concrete));
}

Partition gamma(const JordanData& delta) { return add(delta.blocks()); }

int d_of(const JordanData& delta) {
  int best = 0;
  for (const auto& b : delta.blocks()) best = std::max(best, static_cast<int>(b.length()));
  const int via_gamma = transpose(gamma(delta)).largest();
  if (best != via_gamma)
    fail(ErrorCode::Internal, "d(A) disagrees with transpose(gamma) on " + delta.to_string());
  return best;
}

int min_poly_degree(const JordanData& delta) {
  int total = 0;
  for (const auto& b : delta.blocks()) total += b.largest();
  return total;
}

std::int64_t centralizer_dim(const JordanData& delta) {
  std::int64_t per_eigenvalue = 0;
  for (const auto& b : delta.blocks()) per_eigenvalue += centralizer_dimension(b);
  const std::int64_t via_gamma = centralizer_dimension_by_transpose(gamma(delta));
  if (per_eigenvalue != via_gamma)
    fail(ErrorCode::Internal, "centralizer formulas disagree on " + delta.to_string());
  return per_eigenvalue;
}

std::vector<JordanData> enumerate_jordan_data(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "enumerate_jordan_data needs n >= 1");
  // All partitions of size 1..n in canonical order; a multiset is a
  // nondecreasing index sequence into this list.
  std::vector<Partition> pool;
  for (int size = n; size >= 1; --size)
    for (auto& p : enumerate_partitions(size)) pool.push_back(std::move(p));
  std::vector<JordanData> out;
  std::vector<Partition> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].size() > remaining) continue;
      chosen.push_back(pool[i]);
      rec(i, remaining - pool[i].size());
      chosen.pop_back();
    }
  };
  rec(0, n);
  return out;
}

Matrix jordan_block(const Scalar& eigenvalue, int size) {
  if (size < 1) fail(ErrorCode::InvalidArgument, "Jordan block size must be positive");
  const FieldSpec field = eigenvalue.field();
  Matrix m(field, static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    m(i, i) = eigenvalue;
    if (i + 1 < m.rows()) m(i, i + 1) = Scalar(field, 1);
  }
  return m;
}

Matrix jordan_matrix(const Scalar& eigenvalue, const Partition& lambda) {
  std::vector<Matrix> blocks;
  for (int part : lambda.parts()) blocks.push_back(jordan_block(eigenvalue, part));
  return Matrix::direct_sum(blocks);
}

Matrix jordan_matrix(std::span<const EigenBlocks> concrete) {
  std::vector<Matrix> blocks;
  for (const auto& eb : concrete)
    for (int part : eb.partition.parts())
      blocks.push_back(jordan_block(eb.eigenvalue, part));
  return Matrix::direct_sum(blocks);
}

Matrix canonical_representative(const JordanData& delta, FieldSpec field) {
  if (field.is_prime() && field.characteristic() <= delta.m())
    fail(ErrorCode::FieldTooSmall, field.to_string() + " cannot hold " +
                                       std::to_string(delta.m()) + " distinct nonzero eigenvalues");
  std::vector<EigenBlocks> concrete;
  for (std::size_t i = 0; i < delta.m(); ++i)
    concrete.push_back({Scalar(field, static_cast<long>(i + 1)), delta.blocks()[i]});
  return jordan_matrix(concrete);
}

}  // namespace degen
