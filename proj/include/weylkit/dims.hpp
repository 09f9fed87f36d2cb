#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace weylkit {

/// Local dimensions (d_1, ..., d_n) of a qudit register, each d_i >= 2.
///
/// Basis indices are big-endian throughout: the basis state |j_1,...,j_n>
/// sits at index j = sum_i j_i * prod_{k>i} d_k, so the last qudit is the
/// fastest-running digit. Every matrix, state file and distribution in this
/// library uses this convention.
class DimSpec {
 public:
  explicit DimSpec(std::vector<int> dims);

  std::size_t size() const { return dims_.size(); }
  int dim(std::size_t i) const { return dims_[i]; }
  const std::vector<int>& dims() const { return dims_; }
  long total_dim() const { return total_; }

  /// Big-endian linear index of a digit string (one digit per qudit).
  long index_of(std::span<const int> digits) const;

  /// Inverse of index_of; writes one digit per qudit.
  void digits_of(long index, std::span<int> out) const;

  /// Stride of qudit i: prod_{k>i} d_k.
  long stride(std::size_t i) const { return strides_[i]; }

  bool operator==(const DimSpec& other) const { return dims_ == other.dims_; }
  bool operator!=(const DimSpec& other) const { return !(*this == other); }

 private:
  std::vector<int> dims_;
  std::vector<long> strides_;
  long total_ = 1;
};

/// A bipartition of a register: the listed positions form subsystem A,
/// the complement forms subsystem B.
class Partition {
 public:
  Partition(std::vector<int> positions, std::size_t register_size);

  /// Positions of subsystem A, sorted ascending.
  const std::vector<int>& positions() const { return positions_; }
  /// Positions of subsystem B, sorted ascending.
  std::vector<int> complement() const;
  std::size_t register_size() const { return register_size_; }

 private:
  std::vector<int> positions_;
  std::size_t register_size_ = 0;
};

}  // namespace weylkit
