#include "monolab/system_dims.hpp"

#include <sstream>

#include "monolab/errors.hpp"

namespace monolab {

SystemDims::SystemDims(std::vector<int> dims, int cap) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DomainError("SystemDims: need at least one subsystem");
  std::int64_t total = 1;
  for (int d : dims_) {
    if (d < 2) throw DomainError("SystemDims: every dimension must be >= 2");
    total *= d;
    if (total > cap)
      throw DomainError("SystemDims: total dimension " + std::to_string(total) +
                        " exceeds cap " + std::to_string(cap));
  }
  total_ = static_cast<int>(total);
  strides_.resize(dims_.size());
  std::int64_t s = 1;
  for (int k = count() - 1; k >= 0; --k) {
    strides_[static_cast<std::size_t>(k)] = s;
    s *= dims_[static_cast<std::size_t>(k)];
  }
}

std::vector<int> SystemDims::unravel(std::int64_t index) const {
  std::vector<int> multi(dims_.size());
  for (int k = 0; k < count(); ++k) {
    multi[static_cast<std::size_t>(k)] =
        static_cast<int>((index / stride(k)) % dims_[static_cast<std::size_t>(k)]);
  }
  return multi;
}

std::int64_t SystemDims::ravel(const std::vector<int>& multi) const {
  std::int64_t index = 0;
  for (int k = 0; k < count(); ++k)
    index += multi[static_cast<std::size_t>(k)] * stride(k);
  return index;
}

std::string SystemDims::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k) out << ',';
    out << dims_[k];
  }
  return out.str();
}

SystemDims SystemDims::parse(const std::string& text, int cap) {
  std::vector<int> dims;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t pos = 0;
      int d = std::stoi(tok, &pos);
      if (pos != tok.size()) throw DomainError("");
      dims.push_back(d);
    } catch (const std::exception&) {
      throw DomainError("SystemDims: bad dimension token '" + tok + "'");
    }
  }
  return SystemDims(dims, cap);
}

}  // namespace monolab
