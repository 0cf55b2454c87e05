#include "monolab/state_ops.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <set>

#include "monolab/errors.hpp"

namespace monolab {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

namespace {

struct TraceIndexing {
  std::vector<int> keep;      // ascending
  std::vector<int> traced;    // ascending complement
  std::int64_t keep_total = 1;
  std::int64_t traced_total = 1;
  // global index for (kept multi-index ik, traced multi-index t)
  std::vector<std::int64_t> offsets_keep;
  std::vector<std::int64_t> offsets_traced;
};

TraceIndexing make_trace_indexing(const SystemDims& dims, std::vector<int> keep) {
  if (keep.empty()) throw DomainError("reduced_state: keep set is empty");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw DomainError("reduced_state: duplicate subsystem in keep set");
  if (keep.front() < 0 || keep.back() >= dims.count())
    throw DomainError("reduced_state: subsystem index out of range");

  TraceIndexing ix;
  ix.keep = keep;
  for (int k = 0; k < dims.count(); ++k)
    if (!std::binary_search(keep.begin(), keep.end(), k)) ix.traced.push_back(k);
  for (int k : ix.keep) ix.keep_total *= dims.dim(k);
  for (int k : ix.traced) ix.traced_total *= dims.dim(k);

  // Flattened lookup tables: global index = offsets_keep[ik] + offsets_traced[t].
  ix.offsets_keep.assign(static_cast<std::size_t>(ix.keep_total), 0);
  for (std::int64_t ik = 0; ik < ix.keep_total; ++ik) {
    std::int64_t rem = ik, global = 0;
    for (int pos = static_cast<int>(ix.keep.size()) - 1; pos >= 0; --pos) {
      const int sub = ix.keep[static_cast<std::size_t>(pos)];
      const int d = dims.dim(sub);
      global += (rem % d) * dims.stride(sub);
      rem /= d;
    }
    ix.offsets_keep[static_cast<std::size_t>(ik)] = global;
  }
  ix.offsets_traced.assign(static_cast<std::size_t>(ix.traced_total), 0);
  for (std::int64_t t = 0; t < ix.traced_total; ++t) {
    std::int64_t rem = t, global = 0;
    for (int pos = static_cast<int>(ix.traced.size()) - 1; pos >= 0; --pos) {
      const int sub = ix.traced[static_cast<std::size_t>(pos)];
      const int d = dims.dim(sub);
      global += (rem % d) * dims.stride(sub);
      rem /= d;
    }
    ix.offsets_traced[static_cast<std::size_t>(t)] = global;
  }
  return ix;
}

}  // namespace

QuantumState reduced_state(const QuantumState& state, const std::vector<int>& keep) {
  const SystemDims& dims = state.dims();
  TraceIndexing ix = make_trace_indexing(dims, keep);

  std::vector<int> out_dims;
  for (int k : ix.keep) out_dims.push_back(dims.dim(k));
  SystemDims reduced_dims(out_dims);

  Mat out = Mat::Zero(ix.keep_total, ix.keep_total);
  if (state.is_pure()) {
    const Vec& psi = state.vector();
    for (std::int64_t i = 0; i < ix.keep_total; ++i)
      for (std::int64_t j = 0; j < ix.keep_total; ++j) {
        Complex acc(0, 0);
        for (std::int64_t t = 0; t < ix.traced_total; ++t)
          acc += psi(ix.offsets_keep[static_cast<std::size_t>(i)] +
                     ix.offsets_traced[static_cast<std::size_t>(t)]) *
                 std::conj(psi(ix.offsets_keep[static_cast<std::size_t>(j)] +
                               ix.offsets_traced[static_cast<std::size_t>(t)]));
        out(i, j) = acc;
      }
  } else {
    const Mat& rho = state.matrix();
    for (std::int64_t i = 0; i < ix.keep_total; ++i)
      for (std::int64_t j = 0; j < ix.keep_total; ++j) {
        Complex acc(0, 0);
        for (std::int64_t t = 0; t < ix.traced_total; ++t)
          acc += rho(ix.offsets_keep[static_cast<std::size_t>(i)] +
                         ix.offsets_traced[static_cast<std::size_t>(t)],
                     ix.offsets_keep[static_cast<std::size_t>(j)] +
                         ix.offsets_traced[static_cast<std::size_t>(t)]);
        out(i, j) = acc;
      }
  }
  // Exact up to rounding: Hermitian, PSD, trace preserved.
  out = (out + out.adjoint().eval()) / 2.0;
  return QuantumState::mixed_trusted(std::move(reduced_dims), std::move(out));
}

Mat partial_transpose(const QuantumState& state, int subsystem) {
  const SystemDims& dims = state.dims();
  if (subsystem < 0 || subsystem >= dims.count())
    throw DomainError("partial_transpose: subsystem index out of range");
  const Mat rho = state.density();
  const int d = dims.total();
  const int ds = dims.dim(subsystem);
  const std::int64_t stride = dims.stride(subsystem);

  Mat out(d, d);
  for (std::int64_t i = 0; i < d; ++i) {
    const int is = static_cast<int>((i / stride) % ds);
    const std::int64_t ibase = i - is * stride;
    for (std::int64_t j = 0; j < d; ++j) {
      const int js = static_cast<int>((j / stride) % ds);
      const std::int64_t jbase = j - js * stride;
      out(ibase + js * stride, jbase + is * stride) = rho(i, j);
    }
  }
  return out;
}

double trace_norm(const Mat& m) {
  if (m.rows() != m.cols()) throw DomainError("trace_norm: matrix must be square");
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-10)
    throw DomainError("trace_norm: input not Hermitian (deviation " +
                      std::to_string(herm_dev) + ")");
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

QuantumState permute_subsystems(const QuantumState& state, const std::vector<int>& perm) {
  const SystemDims& dims = state.dims();
  if (static_cast<int>(perm.size()) != dims.count())
    throw DomainError("permute_subsystems: permutation size mismatch");
  std::set<int> seen(perm.begin(), perm.end());
  if (static_cast<int>(seen.size()) != dims.count() || *seen.begin() != 0 ||
      *seen.rbegin() != dims.count() - 1)
    throw DomainError("permute_subsystems: not a permutation of subsystem indices");

  std::vector<int> new_dims;
  for (int k : perm) new_dims.push_back(dims.dim(k));
  SystemDims out_dims(new_dims);

  const int d = dims.total();
  // old global index for each new global index
  std::vector<std::int64_t> old_of_new(static_cast<std::size_t>(d));
  for (std::int64_t n = 0; n < d; ++n) {
    std::vector<int> multi_new = out_dims.unravel(n);
    std::vector<int> multi_old(static_cast<std::size_t>(dims.count()));
    for (int k = 0; k < dims.count(); ++k)
      multi_old[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] =
          multi_new[static_cast<std::size_t>(k)];
    old_of_new[static_cast<std::size_t>(n)] = dims.ravel(multi_old);
  }

  if (state.is_pure()) {
    const Vec& psi = state.vector();
    Vec out(d);
    for (std::int64_t n = 0; n < d; ++n) out(n) = psi(old_of_new[static_cast<std::size_t>(n)]);
    return QuantumState::pure(std::move(out_dims), std::move(out));
  }
  const Mat& rho = state.matrix();
  Mat out(d, d);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j)
      out(i, j) = rho(old_of_new[static_cast<std::size_t>(i)], old_of_new[static_cast<std::size_t>(j)]);
  return QuantumState::mixed_trusted(std::move(out_dims), std::move(out));
}

double purity(const Mat& rho) { return (rho * rho).trace().real(); }

Eigen::VectorXd hermitian_eigenvalues(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Eigen::VectorXd clamped_spectrum(const Mat& rho) {
  Eigen::VectorXd ev = hermitian_eigenvalues(rho);
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) <= kEigClampTol) ev(i) = 0.0;
  return ev;
}

}  // namespace monolab
