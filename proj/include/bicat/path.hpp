#pragma once
// Paths in R^n as sampled piecewise-linear data: the boundary maps d0/d1,
// the whiskering homotopies rho0/lambda0, and the two routes to composing
// pointed paths (the algebraic tensor and direct concatenation), which
// must agree at grid nodes up to rounding.

#include <cstdint>
#include <vector>

#include "bicat/common.hpp"

namespace bicat {

// z : [0,1] -> R^n with z(0) = 0, linearly interpolated between N+1 samples.
// N must be even so that 2t and 2t-1 are grid-aligned where exactness
// matters.
struct SampledPath {
  int dim = 0;
  int grid = 0;
  std::vector<std::vector<double>> samples;  // grid+1 nodes of dim entries

  std::vector<double> eval(double t) const;
};

// y : [0,1]^2 -> R^n with y(0,t) = y(s,0) = y(s,1) = 0 at grid nodes.
struct SampledHomotopy {
  int dim = 0;
  int grid = 0;
  std::vector<std::vector<std::vector<double>>> samples;  // [s][t]
};

// (z, b) stands for the path t -> z(t) + b.
struct PointedPath {
  SampledPath path;
  std::vector<double> base;
};

// Validating constructor: shapes, even grid, z(0) = 0.
SampledPath make_sampled_path(int dim, int grid,
                              std::vector<std::vector<double>> samples);
SampledPath zero_path(int dim, int grid);
SampledPath linear_path(int grid, const std::vector<double>& v);  // t -> t v

// Fully deterministic piecewise-linear path with node values in [-1, 1).
SampledPath random_pl_path(int dim, int grid, std::uint64_t seed);

std::vector<double> d0(const SampledPath& z);  // z(1)
SampledPath d1(const SampledHomotopy& y);      // t -> y(1, t)

// rho0(z)(s,t) = z(t)                 for 2t <= s,
//                z(t) - z((2t-s)/(2-s)) otherwise;
// lambda0(z)(s,t) = z(st/(2-s)) - z(2t/(2-s)) for 2t <= s,
//                   z(st/(2-s)) - z(s/(2-s))  otherwise.
// Sampled at all grid nodes, branch decided by the exact integer test
// 2j <= i; off-grid inner arguments are interpolated.
SampledHomotopy rho0(const SampledPath& z);
SampledHomotopy lambda0(const SampledPath& z);

// Largest |y| over the three zero edges, at grid nodes.
double homotopy_boundary_deviation(const SampledHomotopy& y);

// left (x) right: the composite travelling right first.  Defined when
// base(left) = d0(right) + base(right) within `tolerance` (euclidean);
// otherwise NotComposable, with the offending norm in the message.
// tensor computes z' - d1 rho0(z') + z - d1 lambda0(z) samplewise;
// concat evaluates the piecewise display (z(2t), then z'(2t-1) + z(1)).
PointedPath tensor(const PointedPath& left, const PointedPath& right,
                   double tolerance = 1e-9);
PointedPath concat(const PointedPath& left, const PointedPath& right,
                   double tolerance = 1e-9);

struct PathSuiteConfig {
  int dim = 3;
  int grid = 64;
  int paths = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-12;
};

// Maxima over the whole suite; ok requires every identity within tolerance
// and the corner value y(1,1) (= d0 of d1) exactly zero.
struct PathSuiteReport {
  int paths = 0;
  double max_tensor_concat = 0.0;
  double max_additivity = 0.0;
  double max_boundary = 0.0;
  double max_d0_d1 = 0.0;
  double tolerance = 0.0;
  bool ok = false;
};

PathSuiteReport verify_path_axioms(const PathSuiteConfig& cfg);

}  // namespace bicat
