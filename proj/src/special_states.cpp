#include "monolab/special_states.hpp"

#include <cmath>
#include <numeric>

#include "monolab/errors.hpp"

namespace monolab {

QuantumState basis_state(const SystemDims& dims, const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != dims.count())
    throw DomainError("basis label length does not match subsystem count");
  for (int k = 0; k < dims.count(); ++k)
    if (b[k] < 0 || b[k] >= dims.dim(k))
      throw DomainError("basis label out of range at position " +
                        std::to_string(k));
  Vec v = Vec::Zero(dims.total());
  v(dims.ravel(b)) = 1.0;
  return QuantumState::pure(dims, v);
}

QuantumState bell_state() {
  SystemDims dims({2, 2});
  Vec v = Vec::Zero(4);
  v(dims.ravel({0, 0})) = 1.0 / std::sqrt(2.0);
  v(dims.ravel({1, 1})) = 1.0 / std::sqrt(2.0);
  return QuantumState::pure(dims, v);
}

QuantumState ghz_state(int n) {
  if (n < 2) throw DomainError("ghz_state needs at least 2 qubits");
  SystemDims dims(std::vector<int>(n, 2));
  Vec v = Vec::Zero(dims.total());
  v(dims.ravel(std::vector<int>(n, 0))) = 1.0 / std::sqrt(2.0);
  v(dims.ravel(std::vector<int>(n, 1))) = 1.0 / std::sqrt(2.0);
  return QuantumState::pure(dims, v);
}

QuantumState w_state(int n) {
  if (n < 2) throw DomainError("w_state needs at least 2 qubits");
  SystemDims dims(std::vector<int>(n, 2));
  Vec v = Vec::Zero(dims.total());
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<int> b(n, 0);
    b[k] = 1;
    v(dims.ravel(b)) = amp;
  }
  return QuantumState::pure(dims, v);
}

QuantumState ghz_class_state(const SystemDims& dims,
                             const std::vector<double>& lambda) {
  if (dims.count() < 3)
    throw DomainError("ghz_class_state needs at least 3 parties");
  const int k = static_cast<int>(lambda.size());
  if (k < 1) throw DomainError("ghz_class_state needs at least one level");
  for (int j = 0; j < dims.count(); ++j)
    if (k > dims.dim(j))
      throw DomainError("ghz_class_state: level count exceeds local dimension");
  double sum = 0.0;
  for (double x : lambda) {
    if (x <= 0.0)
      throw DomainError("ghz_class_state coefficients must be positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw DomainError("ghz_class_state coefficients must sum to one");
  Vec v = Vec::Zero(dims.total());
  for (int level = 0; level < k; ++level)
    v(dims.ravel(std::vector<int>(dims.count(), level))) =
        std::sqrt(lambda[level]);
  return QuantumState::pure(dims, v);
}

}  // namespace monolab
