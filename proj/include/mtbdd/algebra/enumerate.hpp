#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mtbdd/algebra/magma.hpp"

namespace mtbdd::algebra {

/// Classification profile of one table: the four flags relevant to the
/// unit/commutativity/associativity/interchange landscape.
struct Profile {
  bool commutative;
  bool associative;
  bool medial;
  bool has_left_unit;
  bool has_right_unit;
  bool has_unit;  // two-sided

  unsigned key() const {
    return (commutative ? 1u : 0) | (associative ? 2u : 0) | (medial ? 4u : 0) |
           (has_left_unit ? 8u : 0) | (has_right_unit ? 16u : 0) | (has_unit ? 32u : 0);
  }
};

Profile profile_of(unsigned n, std::span<const Element> table);

/// Visits every size-n composition table in lexicographic order (row-major
/// base-n counter). The span passed to `visit` is reused between calls.
/// n is capped at 3 (3^9 = 19683 tables); larger carriers go through
/// sample_tables. Throws BudgetError beyond the cap.
void for_each_table(unsigned n, const std::function<void(std::span<const Element>)>& visit);

/// Draws `count` uniformly random size-n tables (for the size-4 opt-in path).
void sample_tables(unsigned n, std::uint64_t count, std::mt19937_64& rng,
                   const std::function<void(std::span<const Element>)>& visit);

std::uint64_t table_count(unsigned n);  // n^(n^2)

/// Predicate over profiles parsed from a comma-separated filter list. Tokens:
/// commutative, non-commutative, associative, non-associative, medial,
/// non-medial, has-unit, no-unit, has-left-unit, has-right-unit.
/// Unknown tokens throw Error.
struct ProfileFilter {
  static ProfileFilter parse(std::string_view csv);
  bool matches(const Profile& p) const;
  std::vector<std::string> tokens;
};

/// Counts per profile plus the first few exemplar tables of each profile
/// passing the filter.
struct EnumerationSummary {
  unsigned size = 0;
  std::uint64_t total = 0;
  std::uint64_t matching = 0;
  std::array<std::uint64_t, 64> profile_counts{};
  std::array<std::vector<std::vector<Element>>, 64> exemplars;  // per profile key
};

EnumerationSummary enumerate_tables(unsigned n, const ProfileFilter& filter,
                                    unsigned max_exemplars);
EnumerationSummary enumerate_sampled(unsigned n, std::uint64_t samples, std::mt19937_64& rng,
                                     const ProfileFilter& filter, unsigned max_exemplars);

}  // namespace mtbdd::algebra
