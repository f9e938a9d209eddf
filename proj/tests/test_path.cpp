#include "bicat/path.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"

using namespace bicat;

namespace {

double max_abs_diff(const std::vector<double>& a,
                    const std::vector<double>& b) {
  double m = 0.0;
  for (size_t k = 0; k < a.size(); ++k)
    m = std::max(m, std::fabs(a[k] - b[k]));
  return m;
}

std::vector<double> scale(double c, const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[k] = c * v[k];
  return out;
}

}  // namespace

TEST_CASE("sampled path validation") {
  CHECK_THROWS_AS(make_sampled_path(0, 4, {}), EngineError);
  CHECK_THROWS_AS(make_sampled_path(1, 3, {{0}, {1}, {2}, {3}}), EngineError);
  CHECK_THROWS_AS(make_sampled_path(1, 4, {{0}, {1}, {2}}), EngineError);
  CHECK_THROWS_AS(
      make_sampled_path(2, 2, {{0, 0}, {1}, {2, 2}}), EngineError);
  CHECK_THROWS_AS(
      make_sampled_path(1, 2, {{0.5}, {1}, {2}}), EngineError);  // z(0) != 0
  const SampledPath z = make_sampled_path(1, 2, {{0}, {1}, {0.5}});
  CHECK(z.grid == 2);
  CHECK(d0(z) == std::vector<double>{0.5});
}

TEST_CASE("evaluation interpolates between nodes") {
  const SampledPath z = make_sampled_path(2, 2, {{0, 0}, {2, -4}, {2, 0}});
  CHECK(z.eval(0.0) == std::vector<double>{0, 0});
  CHECK(z.eval(0.25) == std::vector<double>{1, -2});
  CHECK(z.eval(0.75) == std::vector<double>{2, -2});
  CHECK(z.eval(1.0) == std::vector<double>{2, 0});
  CHECK(z.eval(-3.0) == std::vector<double>{0, 0});   // clamped
  CHECK(z.eval(12.0) == std::vector<double>{2, 0});
}

TEST_CASE("whiskering homotopies of a linear path have closed forms") {
  const int N = 8;
  const std::vector<double> v = {0.5, -1.0, 2.0};
  const SampledPath z = linear_path(N, v);

  const SampledHomotopy r = rho0(z);
  const SampledHomotopy l = lambda0(z);
  CHECK(r.grid == N);
  CHECK(static_cast<int>(r.samples.size()) == N + 1);
  CHECK(static_cast<int>(r.samples[0].size()) == N + 1);

  // Row s = 1 is the edge d1 feeds from.  With dyadic nodes and a linear
  // path every quantity is exact.
  const SampledPath dr = d1(r);
  const SampledPath dl = d1(l);
  for (int j = 0; j <= N; ++j) {
    const double t = static_cast<double>(j) / N;
    const std::vector<double> er =
        2 * j <= N ? scale(t, v) : scale(1.0 - t, v);
    const std::vector<double> el =
        2 * j <= N ? scale(-t, v) : scale(t - 1.0, v);
    CHECK(max_abs_diff(dr.samples[j], er) <= 1e-15);
    CHECK(max_abs_diff(dl.samples[j], el) <= 1e-15);
  }

  // All three zero edges vanish identically for both homotopies.
  CHECK(homotopy_boundary_deviation(r) == 0.0);
  CHECK(homotopy_boundary_deviation(l) == 0.0);
}

TEST_CASE("tensor equals concatenation on linear paths") {
  const int N = 8;
  const std::vector<double> v = {1.0, 0.25, -2.0};
  const std::vector<double> w = {-0.5, 2.0, 4.0};
  const PointedPath right = {linear_path(N, v), {0.0, 0.0, 0.0}};
  const PointedPath left = {linear_path(N, w), v};  // starts where right ends

  const PointedPath via_tensor = tensor(left, right);
  const PointedPath via_concat = concat(left, right);
  CHECK(via_tensor.base == via_concat.base);
  for (int j = 0; j <= N; ++j)
    CHECK(max_abs_diff(via_tensor.path.samples[j],
                       via_concat.path.samples[j]) <= 1e-15);

  // The displayed composite: right's track first, then left's shifted.
  for (int j = 0; j <= N; ++j) {
    const double t = static_cast<double>(j) / N;
    std::vector<double> expect(3);
    for (int k = 0; k < 3; ++k)
      expect[k] = 2 * j <= N ? 2 * t * v[k] : v[k] + (2 * t - 1) * w[k];
    CHECK(max_abs_diff(via_concat.path.samples[j], expect) <= 1e-15);
  }
}

TEST_CASE("composition requires matching endpoints") {
  const int N = 4;
  const PointedPath right = {linear_path(N, {1.0}), {0.0}};
  const PointedPath off = {linear_path(N, {1.0}), {1.0 + 1e-6}};
  const PointedPath on = {linear_path(N, {1.0}), {1.0 + 1e-13}};
  CHECK_THROWS_AS(tensor(off, right), EngineError);
  try {
    tensor(off, right);
  } catch (const EngineError& e) {
    CHECK(e.kind == ErrKind::NotComposable);
  }
  CHECK_NOTHROW(tensor(on, right));           // inside default tolerance
  CHECK_THROWS_AS(tensor(on, right, 1e-15), EngineError);
  // Mismatched frames are a usage error, not a tolerance question.
  const PointedPath wrong_dim = {linear_path(N, {1.0, 2.0}), {1.0, 0.0}};
  CHECK_THROWS_AS(tensor(wrong_dim, right), EngineError);
}

TEST_CASE("deterministic random paths") {
  const SampledPath a = random_pl_path(3, 16, 42);
  const SampledPath b = random_pl_path(3, 16, 42);
  const SampledPath c = random_pl_path(3, 16, 43);
  CHECK(a.samples == b.samples);
  CHECK(a.samples != c.samples);
  CHECK(a.samples[0] == std::vector<double>(3, 0.0));
  for (const auto& node : a.samples)
    for (double x : node) {
      CHECK(x >= -1.0);
      CHECK(x < 1.0);
    }
}

TEST_CASE("path suite over the default configuration") {
  PathSuiteConfig cfg;
  cfg.paths = 25;  // unit-scale run; the acceptance suite runs all 100
  const PathSuiteReport rep = verify_path_axioms(cfg);
  CHECK(rep.ok);
  CHECK(rep.paths == 25);
  CHECK(rep.max_d0_d1 == 0.0);
  CHECK(rep.max_boundary == 0.0);
  CHECK(rep.max_tensor_concat <= 1e-12);
  CHECK(rep.max_additivity <= 1e-12);
  CHECK(rep.tolerance == 1e-12);
}
