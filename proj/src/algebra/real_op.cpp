#include "mtbdd/algebra/real_op.hpp"

#include <cmath>

#include "mtbdd/errors.hpp"

namespace mtbdd::algebra {

bool real_close(double a, double b, double rel_tol) {
  if (a == b) return true;
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= rel_tol * std::max(scale, 1.0);
}

double sample_domain_point(const RealOp& op, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(op.sample_range[0], op.sample_range[1]);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    double x = op.sample ? op.sample(rng) : dist(rng);
    double probe = op.sample ? op.sample(rng) : dist(rng);
    if (op.in_domain(x, probe)) return x;
  }
  throw Error("op '" + op.name + "': domain predicate rejected 10000 sampled points");
}

std::optional<RealQuadrupleWitness> search_medial_violation(const RealOp& op,
                                                            std::mt19937_64& rng,
                                                            unsigned samples) {
  for (unsigned k = 0; k < samples; ++k) {
    double p = sample_domain_point(op, rng);
    double q = sample_domain_point(op, rng);
    double r = sample_domain_point(op, rng);
    double s = sample_domain_point(op, rng);
    double lhs = op.fn(op.fn(p, q), op.fn(r, s));
    double rhs = op.fn(op.fn(p, r), op.fn(q, s));
    bool equal = op.exact ? lhs == rhs : real_close(lhs, rhs);
    if (!equal) return RealQuadrupleWitness{{p, q, r, s}, lhs, rhs};
  }
  return std::nullopt;
}

bool check_closure_by_sampling(const RealOp& op, std::mt19937_64& rng, unsigned samples) {
  for (unsigned k = 0; k < samples; ++k) {
    double x = sample_domain_point(op, rng);
    double y = sample_domain_point(op, rng);
    double z = op.fn(x, y);
    if (std::isnan(z)) return false;
    if (!op.in_domain(z, y) && !op.in_domain(z, x)) {
      // in_domain takes an operand pair; z must be admissible as an operand.
      return false;
    }
  }
  return true;
}

}  // namespace mtbdd::algebra
