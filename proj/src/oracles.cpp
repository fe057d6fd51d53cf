#include "tlsq/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "tlsq/errors.hpp"

namespace tlsq::oracles {

namespace {

struct Centered {
  std::vector<double> dx;
  std::vector<double> dy;
};

Centered center_2d(const Matrix& points) {
  const std::size_t m = points.rows();
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += points(i, 0);
    sy += points(i, 1);
  }
  sx /= static_cast<double>(m);
  sy /= static_cast<double>(m);
  Centered c{std::vector<double>(m), std::vector<double>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    c.dx[i] = points(i, 0) - sx;
    c.dy[i] = points(i, 1) - sy;
  }
  return c;
}

double objective_centered(const Centered& c, double phi) {
  const double s = std::sin(phi);
  const double co = std::cos(phi);
  double acc = 0.0;
  for (std::size_t i = 0; i < c.dx.size(); ++i) {
    const double d = s * c.dx[i] - co * c.dy[i];
    acc += d * d;
  }
  return acc;
}

void require_2d(const Matrix& points) {
  if (points.cols() != 2 || points.rows() < 1) {
    throw DimensionError("line_angle_search: expected m x 2 points, got " +
                         std::to_string(points.rows()) + "x" + std::to_string(points.cols()));
  }
}

}  // namespace

double line_objective(const Matrix& points, double phi) {
  require_2d(points);
  return objective_centered(center_2d(points), phi);
}

AngleSearchResult line_angle_search(const Matrix& points, std::size_t samples) {
  require_2d(points);
  if (samples < 360) throw DimensionError("line_angle_search: need at least 360 samples");
  const Centered c = center_2d(points);
  const double pi = std::numbers::pi;
  const double step = pi / static_cast<double>(samples);

  AngleSearchResult out;
  out.samples = samples;
  std::size_t best = 0;
  out.min_sampled_objective = INFINITY;
  out.max_sampled_objective = -INFINITY;
  for (std::size_t i = 0; i < samples; ++i) {
    const double f = objective_centered(c, step * static_cast<double>(i));
    if (f < out.min_sampled_objective) {
      out.min_sampled_objective = f;
      best = i;
    }
    out.max_sampled_objective = std::max(out.max_sampled_objective, f);
  }

  // The objective is pi-periodic, so the bracket may straddle 0.
  double lo = step * (static_cast<double>(best) - 1.0);
  double hi = step * (static_cast<double>(best) + 1.0);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective_centered(c, x1);
  double f2 = objective_centered(c, x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective_centered(c, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective_centered(c, x2);
    }
  }
  double angle = 0.5 * (lo + hi);
  double f = objective_centered(c, angle);
  if (out.min_sampled_objective < f) {
    angle = step * static_cast<double>(best);
    f = out.min_sampled_objective;
  }
  angle = std::fmod(angle, pi);
  if (angle < 0.0) angle += pi;
  out.best_angle = angle;
  out.best_objective = f;
  return out;
}

Vector sym_eigen_closed_form(const Matrix& s) {
  const std::size_t n = s.rows();
  if (s.cols() != n || (n != 2 && n != 3)) {
    throw DimensionError("sym_eigen_closed_form: need a 2x2 or 3x3 matrix");
  }
  double scale = 0.0;
  for (double v : s.data()) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(s(i, j) - s(j, i)) > 1e-12 * std::max(scale, 1.0)) {
        throw DimensionError("sym_eigen_closed_form: matrix is not symmetric");
      }
    }
  }

  if (n == 2) {
    const double a = s(0, 0);
    const double d = s(1, 1);
    const double b = s(0, 1);
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), b);
    return Vector{mid + rad, mid - rad};
  }

  // Trigonometric solution for the symmetric 3x3 case.
  const double p1 = s(0, 1) * s(0, 1) + s(0, 2) * s(0, 2) + s(1, 2) * s(1, 2);
  const double q = (s(0, 0) + s(1, 1) + s(2, 2)) / 3.0;
  if (p1 == 0.0) {
    std::vector<double> d{s(0, 0), s(1, 1), s(2, 2)};
    std::sort(d.begin(), d.end(), std::greater<>());
    return Vector(d);
  }
  const double p2 = (s(0, 0) - q) * (s(0, 0) - q) + (s(1, 1) - q) * (s(1, 1) - q) +
                    (s(2, 2) - q) * (s(2, 2) - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  Matrix b(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = (s(i, j) - (i == j ? q : 0.0)) / p;
  }
  const double det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                     b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                     b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
  const double r = std::clamp(det / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double pi = std::numbers::pi;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * pi / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  std::vector<double> d{e1, e2, e3};

  // The cubic only resolves a repeated pair to about sqrt(eps). Keep the
  // root that is well separated from the other two (the largest when r >= 0,
  // else the smallest), deflate it through its eigenvector, and split the
  // remaining pair with the 2x2 formula, which is accurate at coincidence.
  const double lone = r >= 0.0 ? e1 : e3;
  const double m[3][3] = {{s(0, 0) - lone, s(0, 1), s(0, 2)},
                          {s(1, 0), s(1, 1) - lone, s(1, 2)},
                          {s(2, 0), s(2, 1), s(2, 2) - lone}};
  const auto cross = [](const double* x, const double* y) {
    return std::array<double, 3>{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
                                 x[0] * y[1] - x[1] * y[0]};
  };
  const auto norm3 = [](const std::array<double, 3>& x) { return std::hypot(x[0], x[1], x[2]); };
  std::array<double, 3> v{};
  double best = 0.0;
  for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const auto c = cross(m[i], m[j]);
    if (norm3(c) > best) {
      best = norm3(c);
      v = c;
    }
  }
  if (best > 0.0) {
    for (double& x : v) x /= best;
    // u: unit vector orthogonal to v built from its two largest components.
    std::array<double, 3> u{};
    if (std::abs(v[0]) > std::abs(v[1])) {
      const double h = std::hypot(v[0], v[2]);
      u = {-v[2] / h, 0.0, v[0] / h};
    } else {
      const double h = std::hypot(v[1], v[2]);
      u = {0.0, v[2] / h, -v[1] / h};
    }
    const auto w = cross(v.data(), u.data());
    const auto quad = [&](const std::array<double, 3>& x, const std::array<double, 3>& y) {
      double acc = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) acc += x[i] * s(i, j) * y[j];
      }
      return acc;
    };
    const double a = quad(u, u);
    const double c = quad(w, w);
    const double b = quad(u, w);
    const double mid = 0.5 * (a + c);
    const double rad = std::hypot(0.5 * (a - c), b);
    d = {lone, mid + rad, mid - rad};
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return Vector(d);
}

bool perturbation_probe(const Objective& f, const Vector& point, std::size_t trials,
                        double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double base = f(point);
  for (std::size_t t = 0; t < trials; ++t) {
    Vector delta(point.size());
    double norm = 0.0;
    while (norm == 0.0) {
      for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = normal(rng);
      norm = delta.norm();
    }
    Vector probe = point;
    for (std::size_t i = 0; i < delta.size(); ++i) probe[i] += radius * delta[i] / norm;
    if (base > f(probe) + 1e-12) return false;
  }
  return true;
}

}  // namespace tlsq::oracles
