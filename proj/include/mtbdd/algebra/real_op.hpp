#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

namespace mtbdd::algebra {

/// Binary operation on the reals. The domain predicate delimits the carrier;
/// `fn` is total on doubles so boundary identities can still be evaluated at
/// boundary points. `medial` is a static certificate (mediality of a real
/// operation cannot be established by finite scan); `exact` marks operations
/// whose results are compared bitwise (clamping/selection ops), everything
/// else compares with relative tolerance 1e-12.
struct RealOp {
  std::string name;
  std::function<bool(double, double)> in_domain;
  std::function<double(double, double)> fn;
  bool medial = false;
  bool exact = false;
  // Interval used by samplers to draw domain points (rejection via in_domain).
  std::array<double, 2> sample_range{-100.0, 100.0};
  // Overrides the uniform draw for discrete carriers (e.g. integers).
  std::function<double(std::mt19937_64&)> sample;
};

/// Binary operation on R^2 (componentwise pairs).
struct PairOp {
  std::string name;
  std::function<std::array<double, 2>(std::array<double, 2>, std::array<double, 2>)> fn;
  bool medial = false;
};

/// Relative-tolerance comparison used for generic real-valued results.
bool real_close(double a, double b, double rel_tol = 1e-12);

/// Draws a point of op's domain: uniform over sample_range, rejecting points
/// outside in_domain. Throws Error after too many rejections.
double sample_domain_point(const RealOp& op, std::mt19937_64& rng);

struct RealQuadrupleWitness {
  std::array<double, 4> operands;
  double lhs;
  double rhs;
};

/// Random search for a medial-law violation: (p*q)*(r*s) vs (p*r)*(q*s) on
/// sampled domain points. Empty result means no violation found, not a proof.
std::optional<RealQuadrupleWitness> search_medial_violation(const RealOp& op,
                                                            std::mt19937_64& rng,
                                                            unsigned samples = 1000);

/// Closure check by sampling: op(x,y) stays inside the domain predicate.
bool check_closure_by_sampling(const RealOp& op, std::mt19937_64& rng, unsigned samples = 1000);

}  // namespace mtbdd::algebra
