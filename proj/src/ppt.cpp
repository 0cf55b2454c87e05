#include "monolab/ppt.hpp"

#include "monolab/errors.hpp"
#include "monolab/state_ops.hpp"

namespace monolab {

double partial_transpose_min_eig(const QuantumState& state) {
  if (state.dims().count() != 2)
    throw DomainError("partial_transpose_min_eig expects a two-party state");
  Mat pt = partial_transpose(state, 0);
  return hermitian_eigenvalues(pt).minCoeff();
}

bool is_ppt_separable(const QuantumState& state, double tol) {
  const auto& dims = state.dims();
  if (dims.count() != 2)
    throw UnsupportedDimsError("PPT test expects a two-party state, got " +
                               dims.to_string());
  const int da = dims.dim(0), db = dims.dim(1);
  const int prod = da * db;
  if (!((da == 2 && db == 2) || prod == 6))
    throw UnsupportedDimsError(
        "PPT is decisive for separability only on 2x2 and 2x3 systems, got " +
        dims.to_string());
  return partial_transpose_min_eig(state) >= -tol;
}

}  // namespace monolab
