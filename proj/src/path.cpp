// Sampled paths in R^n and the two composition routes.

#include "bicat/path.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace bicat {

namespace {

std::vector<double> sub(const std::vector<double>& a,
                        const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double max_abs_diff(const std::vector<double>& a,
                    const std::vector<double>& b) {
  double m = 0.0;
  for (size_t k = 0; k < a.size(); ++k)
    m = std::max(m, std::fabs(a[k] - b[k]));
  return m;
}

void require_same_frame(const PointedPath& l, const PointedPath& r,
                        const char* who) {
  if (l.path.dim != r.path.dim || l.path.grid != r.path.grid ||
      static_cast<int>(l.base.size()) != l.path.dim ||
      static_cast<int>(r.base.size()) != r.path.dim)
    fail(ErrKind::PreconditionFailed,
         std::string(who) + ": mismatched dimension or grid");
}

void require_composable(const PointedPath& l, const PointedPath& r,
                        double tolerance, const char* who) {
  const std::vector<double> end = d0(r.path);
  double norm2 = 0.0;
  for (int k = 0; k < l.path.dim; ++k) {
    const double diff = l.base[k] - (end[k] + r.base[k]);
    norm2 += diff * diff;
  }
  const double norm = std::sqrt(norm2);
  if (norm > tolerance) {
    std::ostringstream msg;
    msg << who << ": left basepoint misses the right path's endpoint by |"
        << norm << "| > " << tolerance;
    fail(ErrKind::NotComposable, msg.str());
  }
}

}  // namespace

std::vector<double> SampledPath::eval(double t) const {
  const double u = t * grid;
  if (u <= 0.0) return samples.front();
  if (u >= grid) return samples.back();
  const int i = static_cast<int>(u);
  const double f = u - i;
  std::vector<double> out(dim);
  for (int k = 0; k < dim; ++k)
    out[k] = samples[i][k] * (1.0 - f) + samples[i + 1][k] * f;
  return out;
}

SampledPath make_sampled_path(int dim, int grid,
                              std::vector<std::vector<double>> samples) {
  if (dim < 1 || grid < 2 || grid % 2 != 0)
    fail(ErrKind::PreconditionFailed,
         "path grid must be even and at least 2, dimension positive");
  if (samples.size() != static_cast<size_t>(grid) + 1)
    fail(ErrKind::PreconditionFailed, "path needs grid+1 sample nodes");
  for (const auto& node : samples)
    if (node.size() != static_cast<size_t>(dim))
      fail(ErrKind::PreconditionFailed, "path sample of wrong dimension");
  for (double x : samples[0])
    if (x != 0.0)
      fail(ErrKind::PreconditionFailed, "paths must start at the origin");
  return SampledPath{dim, grid, std::move(samples)};
}

SampledPath zero_path(int dim, int grid) {
  return make_sampled_path(
      dim, grid,
      std::vector<std::vector<double>>(grid + 1, std::vector<double>(dim)));
}

SampledPath linear_path(int grid, const std::vector<double>& v) {
  std::vector<std::vector<double>> samples(grid + 1,
                                           std::vector<double>(v.size()));
  for (int j = 0; j <= grid; ++j)
    for (size_t k = 0; k < v.size(); ++k)
      samples[j][k] = v[k] * (static_cast<double>(j) / grid);
  return make_sampled_path(static_cast<int>(v.size()), grid,
                           std::move(samples));
}

SampledPath random_pl_path(int dim, int grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> samples(grid + 1,
                                           std::vector<double>(dim));
  // Uniform in [-1, 1) from the top 53 bits, so the stream is the
  // generator's own and identical everywhere.
  for (int j = 1; j <= grid; ++j)
    for (int k = 0; k < dim; ++k)
      samples[j][k] = 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
  return make_sampled_path(dim, grid, std::move(samples));
}

std::vector<double> d0(const SampledPath& z) { return z.samples.back(); }

SampledPath d1(const SampledHomotopy& y) {
  return SampledPath{y.dim, y.grid, y.samples.back()};
}

SampledHomotopy rho0(const SampledPath& z) {
  const int N = z.grid;
  SampledHomotopy y{z.dim, N,
                    std::vector<std::vector<std::vector<double>>>(
                        N + 1, std::vector<std::vector<double>>(N + 1))};
  for (int i = 0; i <= N; ++i) {
    const double s = static_cast<double>(i) / N;
    for (int j = 0; j <= N; ++j) {
      if (2 * j <= i) {
        y.samples[i][j] = z.samples[j];
      } else {
        const double t = static_cast<double>(j) / N;
        y.samples[i][j] = sub(z.samples[j], z.eval((2.0 * t - s) / (2.0 - s)));
      }
    }
  }
  return y;
}

SampledHomotopy lambda0(const SampledPath& z) {
  const int N = z.grid;
  SampledHomotopy y{z.dim, N,
                    std::vector<std::vector<std::vector<double>>>(
                        N + 1, std::vector<std::vector<double>>(N + 1))};
  for (int i = 0; i <= N; ++i) {
    const double s = static_cast<double>(i) / N;
    for (int j = 0; j <= N; ++j) {
      const double t = static_cast<double>(j) / N;
      const std::vector<double> head = z.eval(s * t / (2.0 - s));
      y.samples[i][j] = 2 * j <= i
                            ? sub(head, z.eval(2.0 * t / (2.0 - s)))
                            : sub(head, z.eval(s / (2.0 - s)));
    }
  }
  return y;
}

double homotopy_boundary_deviation(const SampledHomotopy& y) {
  double m = 0.0;
  const int N = y.grid;
  for (int j = 0; j <= N; ++j) m = std::max(m, max_abs(y.samples[0][j]));
  for (int i = 0; i <= N; ++i) {
    m = std::max(m, max_abs(y.samples[i][0]));
    m = std::max(m, max_abs(y.samples[i][N]));
  }
  return m;
}

PointedPath tensor(const PointedPath& left, const PointedPath& right,
                   double tolerance) {
  require_same_frame(left, right, "tensor");
  require_composable(left, right, tolerance, "tensor");
  const SampledPath wl = d1(rho0(left.path));
  const SampledPath wr = d1(lambda0(right.path));
  const int N = left.path.grid;
  std::vector<std::vector<double>> out(N + 1,
                                       std::vector<double>(left.path.dim));
  for (int j = 0; j <= N; ++j)
    for (int k = 0; k < left.path.dim; ++k)
      out[j][k] = left.path.samples[j][k] - wl.samples[j][k] +
                  right.path.samples[j][k] - wr.samples[j][k];
  return PointedPath{SampledPath{left.path.dim, N, std::move(out)},
                     right.base};
}

PointedPath concat(const PointedPath& left, const PointedPath& right,
                   double tolerance) {
  require_same_frame(left, right, "concat");
  require_composable(left, right, tolerance, "concat");
  const int N = left.path.grid;
  std::vector<std::vector<double>> out(N + 1);
  for (int j = 0; j <= N; ++j) {
    if (2 * j <= N) {
      out[j] = right.path.samples[2 * j];
    } else {
      out[j] = left.path.samples[2 * j - N];
      for (int k = 0; k < left.path.dim; ++k)
        out[j][k] += right.path.samples[N][k];
    }
  }
  return PointedPath{SampledPath{left.path.dim, N, std::move(out)},
                     right.base};
}

PathSuiteReport verify_path_axioms(const PathSuiteConfig& cfg) {
  PathSuiteReport rep;
  rep.paths = cfg.paths;
  rep.tolerance = cfg.tolerance;

  double m_tc = 0.0, m_add = 0.0, m_bd = 0.0, m_corner = 0.0;
#pragma omp parallel for reduction(max : m_tc, m_add, m_bd, m_corner)
  for (int k = 0; k < cfg.paths; ++k) {
    const SampledPath z =
        random_pl_path(cfg.dim, cfg.grid, cfg.seed + 2 * k);
    const SampledPath zp =
        random_pl_path(cfg.dim, cfg.grid, cfg.seed + 2 * k + 1);

    for (const SampledPath* p : {&z, &zp}) {
      for (const SampledHomotopy& y : {rho0(*p), lambda0(*p)}) {
        m_bd = std::max(m_bd, homotopy_boundary_deviation(y));
        m_corner = std::max(m_corner, max_abs(d0(d1(y))));
      }
    }

    // rho0 and lambda0 are linear in the sample array.
    SampledPath sum = z;
    for (int j = 0; j <= cfg.grid; ++j)
      for (int d = 0; d < cfg.dim; ++d) sum.samples[j][d] += zp.samples[j][d];
    for (auto make : {rho0, lambda0}) {
      const SampledHomotopy whole = make(sum);
      const SampledHomotopy a = make(z), b = make(zp);
      for (int i = 0; i <= cfg.grid; ++i)
        for (int j = 0; j <= cfg.grid; ++j)
          for (int d = 0; d < cfg.dim; ++d)
            m_add = std::max(
                m_add, std::fabs(whole.samples[i][j][d] - a.samples[i][j][d] -
                                 b.samples[i][j][d]));
    }

    const PointedPath inner{z, std::vector<double>(cfg.dim, 0.0)};
    const PointedPath outer{zp, d0(z)};
    const PointedPath via_tensor = tensor(outer, inner, cfg.tolerance);
    const PointedPath via_concat = concat(outer, inner, cfg.tolerance);
    for (int j = 0; j <= cfg.grid; ++j)
      m_tc = std::max(m_tc, max_abs_diff(via_tensor.path.samples[j],
                                         via_concat.path.samples[j]));
  }

  rep.max_tensor_concat = m_tc;
  rep.max_additivity = m_add;
  rep.max_boundary = m_bd;
  rep.max_d0_d1 = m_corner;
  rep.ok = m_tc <= cfg.tolerance && m_add <= cfg.tolerance &&
           m_bd <= cfg.tolerance && m_corner == 0.0;
  return rep;
}

}  // namespace bicat
