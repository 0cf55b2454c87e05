#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "doctest.h"
#include "monolab/errors.hpp"
#include "monolab/ppt.hpp"
#include "monolab/quantum_state.hpp"
#include "monolab/random_states.hpp"
#include "monolab/special_states.hpp"
#include "monolab/split_spec.hpp"
#include "monolab/state_ops.hpp"
#include "monolab/system_dims.hpp"

using namespace monolab;

namespace {

// Reference partial trace written as plain tuple loops, independent of the
// stride/offset tables used by the library implementation.
Mat oracle_reduced(const Mat& rho, const SystemDims& dims,
                   std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  std::vector<int> traced;
  for (int k = 0; k < dims.count(); ++k)
    if (!std::count(keep.begin(), keep.end(), k)) traced.push_back(k);

  std::vector<int> kept_dims;
  for (int k : keep) kept_dims.push_back(dims.dim(k));
  SystemDims out_dims(kept_dims);
  Mat out = Mat::Zero(out_dims.total(), out_dims.total());

  const int d = dims.total();
  for (int i = 0; i < d; ++i) {
    const auto ti = dims.unravel(i);
    for (int j = 0; j < d; ++j) {
      const auto tj = dims.unravel(j);
      bool diagonal_on_traced = true;
      for (int t : traced)
        if (ti[t] != tj[t]) diagonal_on_traced = false;
      if (!diagonal_on_traced) continue;
      std::vector<int> oi, oj;
      for (int k : keep) {
        oi.push_back(ti[k]);
        oj.push_back(tj[k]);
      }
      out(out_dims.ravel(oi), out_dims.ravel(oj)) += rho(i, j);
    }
  }
  return out;
}

// Reference partial transpose via explicit tuple relabeling.
Mat oracle_partial_transpose(const Mat& rho, const SystemDims& dims, int sub) {
  const int d = dims.total();
  Mat out = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    auto ti = dims.unravel(i);
    for (int j = 0; j < d; ++j) {
      auto tj = dims.unravel(j);
      std::swap(ti[sub], tj[sub]);
      out(dims.ravel(ti), dims.ravel(tj)) = rho(i, j);
      std::swap(ti[sub], tj[sub]);
    }
  }
  return out;
}

QuantumState haar_sample(const SystemDims& dims, std::uint64_t i) {
  RandomSpec spec;
  spec.master_seed = 77;
  spec.sample_index = i;
  spec.kind = RandomSpec::Kind::haar_pure;
  return sample_state(dims, spec);
}

QuantumState mixed_sample(const SystemDims& dims, int rank, std::uint64_t i) {
  RandomSpec spec;
  spec.master_seed = 78;
  spec.sample_index = i;
  spec.kind = RandomSpec::Kind::induced_mixed;
  spec.rank = rank;
  return sample_state(dims, spec);
}

}  // namespace

TEST_CASE("SystemDims strides, ravel and unravel agree") {
  SystemDims dims({2, 3, 2});
  CHECK(dims.total() == 12);
  CHECK(dims.stride(0) == 6);
  CHECK(dims.stride(1) == 2);
  CHECK(dims.stride(2) == 1);
  for (int i = 0; i < dims.total(); ++i) {
    auto t = dims.unravel(i);
    CHECK(dims.ravel(t) == i);
  }
  CHECK(dims.ravel({1, 2, 1}) == 6 + 4 + 1);
}

TEST_CASE("SystemDims validation") {
  CHECK_THROWS_AS(SystemDims({1, 2}), DomainError);
  CHECK_THROWS_AS(SystemDims({0}), DomainError);
  CHECK_THROWS_AS(SystemDims({2, 2, 2, 2, 2, 2, 2, 2, 2}), DomainError);
  CHECK_NOTHROW(SystemDims({2, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(SystemDims::parse("2,3,2") == SystemDims({2, 3, 2}));
  CHECK_THROWS_AS(SystemDims::parse("2,x"), DomainError);
  CHECK_THROWS_AS(SystemDims::parse(""), DomainError);
  CHECK(SystemDims({2, 3}).to_string() == "2,3");
}

TEST_CASE("QuantumState construction validates invariants") {
  SystemDims dims({2, 2});
  Vec v = Vec::Zero(4);
  v(0) = 1.0;
  CHECK_NOTHROW(QuantumState::pure(dims, v));
  v(0) = 0.9;
  CHECK_THROWS_AS(QuantumState::pure(dims, v), DomainError);

  Mat rho = Mat::Identity(4, 4) / 4.0;
  CHECK_NOTHROW(QuantumState::mixed(dims, rho));

  Mat bad_trace = Mat::Identity(4, 4) / 2.0;
  CHECK_THROWS_AS(QuantumState::mixed(dims, bad_trace), DomainError);

  Mat not_herm = rho;
  not_herm(0, 1) = 0.1;
  CHECK_THROWS_AS(QuantumState::mixed(dims, not_herm), DomainError);

  Mat not_psd = Mat::Zero(4, 4);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(QuantumState::mixed(dims, not_psd), DomainError);
}

TEST_CASE("with_dims regroups equal total dimension") {
  auto ghz = ghz_state(3);
  auto grouped = ghz.with_dims(SystemDims({2, 4}));
  CHECK(grouped.dims().count() == 2);
  CHECK(grouped.vector() == ghz.vector());
  CHECK_THROWS_AS(ghz.with_dims(SystemDims({3, 3})), DomainError);
}

TEST_CASE("kron matches hand-expanded small case") {
  Mat a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  Mat k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(std::abs(k(0, 1) - Complex(1)) < 1e-15);  // a00*b01
  CHECK(std::abs(k(1, 0) - Complex(1)) < 1e-15);  // a00*b10
  CHECK(std::abs(k(2, 1) - Complex(3)) < 1e-15);  // a10*b01
  CHECK(std::abs(k(2, 3) - Complex(4)) < 1e-15);  // a11*b01
  CHECK(std::abs(k(3, 2) - Complex(4)) < 1e-15);  // a11*b10

  Vec x(2), y(2);
  x << 1, 2;
  y << 3, 4;
  Vec xy = kron_vec(x, y);
  CHECK(std::abs(xy(0) - Complex(3)) < 1e-15);
  CHECK(std::abs(xy(3) - Complex(8)) < 1e-15);
}

TEST_CASE("reduced_state of Bell pair is maximally mixed") {
  auto bell = bell_state();
  auto ra = reduced_state(bell, {0});
  CHECK((ra.matrix() - Mat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK(purity(ra.matrix()) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("reduced_state matches tuple-loop reference on random states") {
  for (std::uint64_t i = 0; i < 5; ++i) {
    SystemDims dims({2, 3, 2});
    auto st = haar_sample(dims, i);
    Mat rho = st.density();
    for (auto keep : std::vector<std::vector<int>>{{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1}}) {
      auto got = reduced_state(st, keep);
      Mat want = oracle_reduced(rho, dims, keep);
      CHECK((got.matrix() - want).cwiseAbs().maxCoeff() < 1e-13);
    }
    // Mixed input path.
    auto mx = mixed_sample(dims, 3, i);
    auto got = reduced_state(mx, {0, 1});
    Mat want = oracle_reduced(mx.matrix(), dims, {0, 1});
    CHECK((got.matrix() - want).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("reduced_state keep order is normalized and validated") {
  auto st = haar_sample(SystemDims({2, 2, 2}), 3);
  auto a = reduced_state(st, {2, 0});
  auto b = reduced_state(st, {0, 2});
  CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(reduced_state(st, {}), DomainError);
  CHECK_THROWS_AS(reduced_state(st, {0, 0}), DomainError);
  CHECK_THROWS_AS(reduced_state(st, {3}), DomainError);
}

TEST_CASE("three-qubit marginals of GHZ and W match hand computation") {
  auto ghz = ghz_state(3);
  auto pair = reduced_state(ghz, {0, 1});
  Mat want = Mat::Zero(4, 4);
  want(0, 0) = 0.5;
  want(3, 3) = 0.5;
  CHECK((pair.matrix() - want).cwiseAbs().maxCoeff() < 1e-14);

  auto w = w_state(3);
  auto one = reduced_state(w, {0});
  CHECK(one.matrix()(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(one.matrix()(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("partial_transpose matches tuple-loop reference") {
  SystemDims dims({2, 3});
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto st = mixed_sample(dims, 4, i);
    for (int sub : {0, 1}) {
      Mat got = partial_transpose(st, sub);
      Mat want = oracle_partial_transpose(st.matrix(), dims, sub);
      CHECK((got - want).cwiseAbs().maxCoeff() == 0.0);
    }
  }
  // Double transpose restores the original.
  auto st = mixed_sample(dims, 2, 9);
  Mat once = partial_transpose(st, 0);
  Mat twice =
      oracle_partial_transpose(once, dims, 0);
  CHECK((twice - st.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial transpose of Bell pair has eigenvalues +-1/2") {
  Mat pt = partial_transpose(bell_state(), 0);
  auto eigs = hermitian_eigenvalues(pt);
  CHECK(eigs(0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(eigs(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eigs(3) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("trace_norm agrees with singular values and rejects non-Hermitian") {
  for (std::uint64_t i = 0; i < 4; ++i) {
    auto st = mixed_sample(SystemDims({2, 2}), 3, i);
    Mat pt = partial_transpose(st, 0);
    Eigen::JacobiSVD<Mat> svd(pt);
    double want = svd.singularValues().sum();
    CHECK(trace_norm(pt) == doctest::Approx(want).epsilon(1e-10));
  }
  Mat m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(trace_norm(m), DomainError);
}

TEST_CASE("permute_subsystems relabels amplitudes consistently") {
  SystemDims dims({2, 3, 2});
  auto st = haar_sample(dims, 11);
  std::vector<int> perm{2, 0, 1};
  auto p = permute_subsystems(st, perm);
  CHECK(p.dims() == SystemDims({2, 2, 3}));
  for (int i = 0; i < dims.total(); ++i) {
    auto t = dims.unravel(i);
    std::vector<int> tp(3);
    for (int k = 0; k < 3; ++k) tp[k] = t[perm[k]];
    CHECK(std::abs(p.vector()(p.dims().ravel(tp)) - st.vector()(i)) < 1e-15);
  }
  // Identity permutation is a no-op; bad permutations are rejected.
  auto idp = permute_subsystems(st, {0, 1, 2});
  CHECK((idp.vector() - st.vector()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(permute_subsystems(st, {0, 1}), DomainError);
  CHECK_THROWS_AS(permute_subsystems(st, {0, 0, 1}), DomainError);

  // Marginal over a set is invariant under permuting it to the front.
  auto moved = permute_subsystems(st, {1, 2, 0});
  auto m1 = reduced_state(moved, {0, 1});
  auto m2 = reduced_state(st, {1, 2});
  CHECK((m1.matrix() - m2.matrix()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("haar_pure_state draws are deterministic and index-separated") {
  SystemDims dims({2, 2});
  auto a = haar_sample(dims, 5);
  auto b = haar_sample(dims, 5);
  auto c = haar_sample(dims, 6);
  CHECK(a.byte_hash() == b.byte_hash());
  CHECK(a.byte_hash() != c.byte_hash());
  CHECK(a.vector() == b.vector());
  CHECK(std::abs(a.vector().norm() - 1.0) < 1e-12);
}

TEST_CASE("mean marginal purity of two-qubit pure draws is near 4/5") {
  // Expected value of tr(rho_a^2) under the global unitary-invariant measure
  // on C^2 x C^2 is (d_a + d_b) / (d_a d_b + 1) = 4/5. A 2000-sample mean
  // has standard error well under 0.01.
  SystemDims dims({2, 2});
  const int n = 2000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    acc += purity(reduced_state(haar_sample(dims, 1000 + i), {0}).matrix());
  CHECK(acc / n == doctest::Approx(0.8).epsilon(0.02));
}

TEST_CASE("induced_mixed_state has the requested rank and unit trace") {
  SystemDims dims({2, 2});
  for (int rank : {1, 2, 3}) {
    auto st = mixed_sample(dims, rank, 42);
    CHECK(std::abs(st.matrix().trace().real() - 1.0) < 1e-12);
    auto eigs = hermitian_eigenvalues(st.matrix());
    int positive = 0;
    for (int i = 0; i < eigs.size(); ++i)
      if (eigs(i) > 1e-12) ++positive;
    CHECK(positive == rank);
  }
  RandomSpec bad;
  bad.kind = RandomSpec::Kind::induced_mixed;
  bad.rank = 0;
  CHECK_THROWS_AS(sample_state(dims, bad), DomainError);
}

TEST_CASE("random_product_state has pure marginals") {
  SystemDims dims({2, 2, 2});
  auto st = random_product_state(dims, 123);
  for (int k = 0; k < 3; ++k)
    CHECK(purity(reduced_state(st, {k}).matrix()) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("special state constructors validate and normalize") {
  CHECK(ghz_state(4).vector().norm() == doctest::Approx(1.0));
  CHECK(w_state(5).vector().norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(ghz_state(1), DomainError);
  CHECK_THROWS_AS(w_state(1), DomainError);

  auto b = basis_state(SystemDims({2, 3}), {1, 2});
  CHECK(std::abs(b.vector()(5) - Complex(1)) < 1e-15);
  CHECK_THROWS_AS(basis_state(SystemDims({2, 2}), {0, 2}), DomainError);

  SystemDims d3({3, 3, 3});
  CHECK_NOTHROW(ghz_class_state(d3, {0.5, 0.3, 0.2}));
  CHECK_THROWS_AS(ghz_class_state(SystemDims({2, 2}), {0.5, 0.5}), DomainError);
  CHECK_THROWS_AS(ghz_class_state(d3, {0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(ghz_class_state(d3, {0.7, 0.3, 0.0}), DomainError);
  CHECK_THROWS_AS(ghz_class_state(SystemDims({2, 2, 2}), {0.4, 0.3, 0.3}),
                  DomainError);
}

TEST_CASE("ppt separability is decisive on 2x2 and rejects other shapes") {
  // p |psi-><psi-| + (1-p) I/4 crosses from separable to entangled at p=1/3;
  // the smallest partial-transpose eigenvalue is (1-3p)/4.
  SystemDims dims({2, 2});
  Vec psi = Vec::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  auto make_werner = [&](double p) {
    Mat rho = p * (psi * psi.adjoint()) +
              (1.0 - p) * Mat::Identity(4, 4) / 4.0;
    return QuantumState::mixed(dims, rho);
  };
  CHECK(is_ppt_separable(make_werner(0.2)));
  CHECK(is_ppt_separable(make_werner(1.0 / 3.0)));
  CHECK(!is_ppt_separable(make_werner(0.5)));
  CHECK(partial_transpose_min_eig(make_werner(0.8)) ==
        doctest::Approx((1.0 - 2.4) / 4.0).epsilon(1e-12));

  auto big = haar_sample(SystemDims({3, 3}), 0);
  CHECK_THROWS_AS(is_ppt_separable(big), UnsupportedDimsError);
  auto three = haar_sample(SystemDims({2, 2, 2}), 0);
  CHECK_THROWS_AS(is_ppt_separable(three), UnsupportedDimsError);
  CHECK_NOTHROW(is_ppt_separable(haar_sample(SystemDims({2, 3}), 0)));
}

TEST_CASE("clamped_spectrum snaps tiny values to zero") {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0 + 5e-11;
  m(1, 1) = -5e-11;
  auto s = clamped_spectrum(m);
  CHECK(s.minCoeff() == 0.0);
  CHECK(s.maxCoeff() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("split and bipartition text forms round-trip and validate") {
  auto cut = Bipartition::parse("0|1,2");
  CHECK(cut.side_a == std::vector<int>{0});
  CHECK(cut.side_b == std::vector<int>{1, 2});
  CHECK(cut.to_string() == "0|1,2");
  SystemDims d3({2, 2, 2});
  CHECK_NOTHROW(cut.validate(d3));
  CHECK_THROWS_AS(Bipartition::parse("0,1,2"), DomainError);
  CHECK_THROWS_AS(Bipartition::parse("0|1|2"), DomainError);
  CHECK_THROWS_AS(Bipartition::parse("0|1,x"), DomainError);
  Bipartition missing{{0}, {1}};
  CHECK_THROWS_AS(missing.validate(d3), DomainError);
  Bipartition dup{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(dup.validate(d3), DomainError);

  auto split = SplitSpec::parse("0|1|2,3");
  CHECK(split.focus == 0);
  CHECK(split.partners.size() == 2);
  CHECK(split.partners[1] == std::vector<int>{2, 3});
  CHECK(split.to_string() == "0|1|2,3");
  CHECK_NOTHROW(split.validate(SystemDims({2, 2, 2, 2})));
  CHECK_THROWS_AS(split.validate(d3), DomainError);
  CHECK_THROWS_AS(SplitSpec::parse("0,1|2"), DomainError);

  auto each = SplitSpec::one_vs_each(d3, 1);
  CHECK(each.focus == 1);
  CHECK(each.partners == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(each.partner_union() == std::vector<int>{0, 2});
}
