#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monolab {

inline constexpr int kDefaultDimCap = 256;

// Ordered list of subsystem dimensions. The first subsystem is the most
// significant in the basis index: index = sum_k i_k * prod_{l>k} d_l.
class SystemDims {
 public:
  SystemDims() = default;
  explicit SystemDims(std::vector<int> dims, int cap = kDefaultDimCap);

  int count() const { return static_cast<int>(dims_.size()); }
  int dim(int k) const { return dims_.at(static_cast<std::size_t>(k)); }
  int total() const { return total_; }
  const std::vector<int>& dims() const { return dims_; }

  // prod_{l>k} d_l
  std::int64_t stride(int k) const { return strides_.at(static_cast<std::size_t>(k)); }

  std::vector<int> unravel(std::int64_t index) const;
  std::int64_t ravel(const std::vector<int>& multi) const;

  bool operator==(const SystemDims& other) const { return dims_ == other.dims_; }
  bool operator!=(const SystemDims& other) const { return !(*this == other); }

  // "2,2,2"
  std::string to_string() const;
  static SystemDims parse(const std::string& text, int cap = kDefaultDimCap);

 private:
  std::vector<int> dims_;
  std::vector<std::int64_t> strides_;
  int total_ = 0;
};

}  // namespace monolab
