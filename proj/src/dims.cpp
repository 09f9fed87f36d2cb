#include "weylkit/dims.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace weylkit {

DimSpec::DimSpec(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("DimSpec: register must have at least one qudit");
  }
  for (int d : dims_) {
    if (d < 2) {
      throw std::invalid_argument("DimSpec: local dimension must be >= 2, got " +
                                  std::to_string(d));
    }
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t i = dims_.size(); i-- > 0;) {
    if (i + 1 < dims_.size()) {
      strides_[i] = strides_[i + 1] * dims_[i + 1];
    }
    if (total_ > (1L << 40) / dims_[i]) {
      throw std::invalid_argument("DimSpec: total dimension overflows the dense budget");
    }
    total_ *= dims_[i];
  }
}

long DimSpec::index_of(std::span<const int> digits) const {
  if (digits.size() != dims_.size()) {
    throw std::invalid_argument("DimSpec: digit count does not match register size");
  }
  long idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims_[i]) {
      throw std::invalid_argument("DimSpec: digit out of range");
    }
    idx += digits[i] * strides_[i];
  }
  return idx;
}

void DimSpec::digits_of(long index, std::span<int> out) const {
  if (out.size() != dims_.size()) {
    throw std::invalid_argument("DimSpec: digit count does not match register size");
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    out[i] = static_cast<int>((index / strides_[i]) % dims_[i]);
  }
}

Partition::Partition(std::vector<int> positions, std::size_t register_size)
    : positions_(std::move(positions)), register_size_(register_size) {
  std::sort(positions_.begin(), positions_.end());
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 0 || positions_[i] >= static_cast<int>(register_size_)) {
      throw std::invalid_argument("Partition: position out of range");
    }
    if (i > 0 && positions_[i] == positions_[i - 1]) {
      throw std::invalid_argument("Partition: duplicate position");
    }
  }
}

std::vector<int> Partition::complement() const {
  std::vector<int> rest;
  std::size_t k = 0;
  for (int p = 0; p < static_cast<int>(register_size_); ++p) {
    if (k < positions_.size() && positions_[k] == p) {
      ++k;
    } else {
      rest.push_back(p);
    }
  }
  return rest;
}

}  // namespace weylkit
