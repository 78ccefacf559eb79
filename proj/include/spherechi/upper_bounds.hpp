#pragma once

/**
 * @file upper_bounds.hpp
 * @brief Upper bounds: the simplex partition of S_{1/2}^{n-1} and covering
 * estimates.
 *
 * Inscribe a regular n-simplex in the sphere of radius 1/2 and cut along the
 * cones over its facets. Each of the n + 1 cells has diameter below 1, so a
 * sphere inflated by 1 / diameter is still (n + 1)-colourable.
 *
 * The diameter is found numerically (best effort): closed-form candidates
 * pair the normalised centroids of two disjoint groups of facet vertices,
 * and projected ascent from seeded random restarts searches the rest.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"

namespace spherechi {

struct PartitionDiameter {
  std::int64_t n = 0;
  double diameter = 0.0;
  double inflation = 0.0;         // 1 / diameter
  double radius_threshold = 0.0;  // inflation / 2
  double c2_estimate = 0.0;       // n (radius_threshold - 1/2)
  Eigen::VectorXd u;              // maximizing pair, on the radius-1/2 sphere
  Eigen::VectorXd v;
};

/// Regular simplex inscribed in the sphere of radius `radius` in R^n: n + 1
/// columns.
inline Eigen::MatrixXd regular_simplex(std::int64_t n, double radius) {
  const auto dim = static_cast<Eigen::Index>(n);
  // Centred standard basis of R^{n+1}, expressed in an orthonormal basis of
  // the hyperplane sum x = 0.
  Eigen::MatrixXd centred = Eigen::MatrixXd::Identity(dim + 1, dim + 1);
  centred.array() -= 1.0 / static_cast<double>(n + 1);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(centred);
  const Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd vertices = q.leftCols(dim).transpose() * centred;
  for (Eigen::Index j = 0; j < vertices.cols(); ++j) {
    vertices.col(j) *= radius / vertices.col(j).norm();
  }
  return vertices;
}

namespace detail {

// Euclidean projection onto the probability simplex.
inline void project_to_simplex(Eigen::VectorXd& x) {
  std::vector<double> sorted(x.data(), x.data() + x.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0.0) theta = candidate;
  }
  x = (x.array() - theta).cwiseMax(0.0).matrix();
}

// Cosine of the angle between frame * alpha and frame * beta via the Gram matrix.
inline double frame_cosine(const Eigen::MatrixXd& gram, const Eigen::VectorXd& alpha,
                           const Eigen::VectorXd& beta) {
  const double aa = alpha.dot(gram * alpha);
  const double bb = beta.dot(gram * beta);
  return alpha.dot(gram * beta) / std::sqrt(aa * bb);
}

// Minimize the cosine over pairs of simplex-weight vectors by projected
// gradient steps with backtracking.
inline double descend(const Eigen::MatrixXd& gram, Eigen::VectorXd& alpha, Eigen::VectorXd& beta,
                      int iterations) {
  double value = frame_cosine(gram, alpha, beta);
  double step = 1.0;
  for (int it = 0; it < iterations && step > 1e-14; ++it) {
    const Eigen::VectorXd ga = gram * alpha;
    const Eigen::VectorXd gb = gram * beta;
    const double aa = alpha.dot(ga);
    const double bb = beta.dot(gb);
    const double ab = alpha.dot(gb);
    const double norm = std::sqrt(aa * bb);
    const Eigen::VectorXd grad_a = gb / norm - (ab / norm) * ga / aa;
    const Eigen::VectorXd grad_b = ga / norm - (ab / norm) * gb / bb;
    while (step > 1e-14) {
      Eigen::VectorXd a2 = alpha - step * grad_a;
      Eigen::VectorXd b2 = beta - step * grad_b;
      project_to_simplex(a2);
      project_to_simplex(b2);
      const double trial = frame_cosine(gram, a2, b2);
      if (trial < value - 1e-16) {
        alpha = std::move(a2);
        beta = std::move(b2);
        value = trial;
        step *= 2.0;
        break;
      }
      step *= 0.5;
    }
  }
  return value;
}

}  // namespace detail

/// Diameter of one cell of the simplex partition of S_{1/2}^{n-1}. The
/// restart list is indexed by (seed, restart), so more restarts never lower
/// the result.
inline PartitionDiameter simplex_cell_diameter(std::int64_t n, int restarts = 100,
                                               std::uint64_t seed = 1) {
  if (n < 2) throw Error("simplex partition needs n >= 2");
  constexpr double kRadius = 0.5;
  const Eigen::MatrixXd vertices = regular_simplex(n, kRadius);
  // Cell 0: the cone over the facet opposite vertex 0.
  const Eigen::MatrixXd frame = vertices.rightCols(static_cast<Eigen::Index>(n));
  const Eigen::MatrixXd gram = frame.transpose() * frame;
  const auto dim = static_cast<Eigen::Index>(n);

  double best_cos = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_a;
  Eigen::VectorXd best_b;
  auto consider = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b, double c) {
    if (c < best_cos) {
      best_cos = c;
      best_a = a;
      best_b = b;
    }
  };

  // Disjoint groups of sizes k and j; by symmetry the first k and the next j suffice.
  for (Eigen::Index k = 1; k < dim; ++k) {
    for (Eigen::Index j = 1; k + j <= dim; ++j) {
      Eigen::VectorXd a = Eigen::VectorXd::Zero(dim);
      Eigen::VectorXd b = Eigen::VectorXd::Zero(dim);
      a.head(k).setConstant(1.0 / static_cast<double>(k));
      b.segment(k, j).setConstant(1.0 / static_cast<double>(j));
      consider(a, b, detail::frame_cosine(gram, a, b));
    }
  }

  for (int restart = 0; restart < restarts; ++restart) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(restart)};
    std::mt19937_64 rng(seq);
    std::exponential_distribution<double> draw(1.0);
    Eigen::VectorXd a(dim);
    Eigen::VectorXd b(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      a[i] = draw(rng);
      b[i] = draw(rng);
    }
    a /= a.sum();
    b /= b.sum();
    const double c = detail::descend(gram, a, b, 2000);
    consider(a, b, c);
  }

  PartitionDiameter out;
  out.n = n;
  out.u = frame * best_a;
  out.v = frame * best_b;
  out.u *= kRadius / out.u.norm();
  out.v *= kRadius / out.v.norm();
  // |u - v|^2 = 2 R^2 (1 - cos), taken from the cosine so the result is
  // monotone in the search effort.
  out.diameter = std::sqrt(2.0 * kRadius * kRadius * (1.0 - best_cos));
  out.inflation = 1.0 / out.diameter;
  out.radius_threshold = out.inflation / 2.0;
  out.c2_estimate = static_cast<double>(n) * (out.radius_threshold - 0.5);
  return out;
}

/// Coefficients of x in the frame of the facet opposite vertex 0; all
/// nonnegative exactly when x lies in cell 0.
inline Eigen::VectorXd cone_coordinates(std::int64_t n, const Eigen::VectorXd& x) {
  const Eigen::MatrixXd vertices = regular_simplex(n, 0.5);
  const Eigen::MatrixXd frame = vertices.rightCols(static_cast<Eigen::Index>(n));
  return frame.partialPivLu().solve(x);
}

/// Largest radius whose inflated partition cells have diameter <= 1.
inline double theorem8_radius(std::int64_t n, int restarts = 100, std::uint64_t seed = 1) {
  return simplex_cell_diameter(n, restarts, seed).radius_threshold;
}

/// ln(2c) + (5/2) ln n + n ln(2r): log of the covering bound; the factor 2
/// colours each covering half-radius sphere.
inline double rogers_upper(std::int64_t n, double r, double c) {
  if (n < 9) throw Error("Rogers form stated for n >= 9");
  if (!(r > 0.5)) throw Error("radius not above one half");
  if (!(c > 0.0)) throw Error("Rogers constant c must be positive");
  const auto nn = static_cast<double>(n);
  return std::log(2.0 * c) + 2.5 * std::log(nn) + nn * std::log(2.0 * r);
}

struct LabelledBound {
  std::string rule;  // "rogers", "euclidean-base-3" or "simplex-partition"
  double log_value = 0.0;
};

/// Smallest available upper bound on ln chi(S_r^{n-1}).
inline LabelledBound best_upper(std::int64_t n, double r, double c, int restarts = 100,
                                std::uint64_t seed = 1) {
  if (n < 2) throw Error("best_upper needs n >= 2");
  std::vector<LabelledBound> options;
  options.push_back({"euclidean-base-3", static_cast<double>(n) * std::log(3.0)});
  if (n >= 9 && r > 0.5) options.push_back({"rogers", rogers_upper(n, r, c)});
  if (r <= theorem8_radius(n, restarts, seed)) {
    options.push_back({"simplex-partition", std::log(static_cast<double>(n + 1))});
  }
  return *std::min_element(options.begin(), options.end(),
                           [](const LabelledBound& x, const LabelledBound& y) {
                             return x.log_value < y.log_value;
                           });
}

}  // namespace spherechi
