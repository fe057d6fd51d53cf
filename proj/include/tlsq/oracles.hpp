#pragma once

// Brute-force and closed-form reference checkers. Nothing here calls into
// the factorization or solver code; only the Matrix/Vector containers are
// shared.

#include <cstddef>
#include <cstdint>
#include <functional>

#include "tlsq/matrix.hpp"

namespace tlsq::oracles {

struct AngleSearchResult {
  double best_angle = 0.0;  // radians in [0, pi)
  double best_objective = 0.0;
  std::size_t samples = 0;
  double max_sampled_objective = 0.0;
  double min_sampled_objective = 0.0;
};

// Sum of squared distances from the points (rows of an m x 2 matrix) to the
// line through their centroid with direction (cos phi, sin phi).
double line_objective(const Matrix& points, double phi);

// Uniform grid of `samples` angles on [0, pi), then golden-section
// refinement around the best grid cell down to 1e-10 rad.
// Requires an m x 2 matrix and samples >= 360.
AngleSearchResult line_angle_search(const Matrix& points, std::size_t samples);

// Eigenvalues (descending) of a symmetric 2x2 or 3x3 matrix: quadratic
// formula, or the trigonometric solution of the characteristic cubic.
Vector sym_eigen_closed_form(const Matrix& s);

using Objective = std::function<double(const Vector&)>;

// True iff f(point) <= f(point + delta) + 1e-12 for `trials` random deltas
// of norm `radius` (directions uniform on the sphere, fixed by `seed`).
bool perturbation_probe(const Objective& f, const Vector& point, std::size_t trials,
                        double radius, std::uint64_t seed = 0x5eed);

}  // namespace tlsq::oracles
