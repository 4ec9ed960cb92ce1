#include "mtbdd/algebra/enumerate.hpp"

#include <algorithm>

namespace mtbdd::algebra {

Profile profile_of(unsigned n, std::span<const Element> table) {
  Profile p{};
  p.commutative = table_commutative(n, table);
  p.associative = table_associative(n, table);
  p.medial = table_medial(n, table);
  std::vector<Element> left, right;
  std::optional<Element> two_sided;
  table_units(n, table, left, right, two_sided);
  p.has_left_unit = !left.empty();
  p.has_right_unit = !right.empty();
  p.has_unit = two_sided.has_value();
  return p;
}

std::uint64_t table_count(unsigned n) {
  std::uint64_t c = 1;
  for (unsigned i = 0; i < n * n; ++i) c *= n;
  return c;
}

void for_each_table(unsigned n, const std::function<void(std::span<const Element>)>& visit) {
  if (n == 0 || n > 3)
    throw BudgetError("exhaustive table enumeration is capped at size 3; size " +
                      std::to_string(n) + " requires sampling");
  const unsigned cells = n * n;
  std::vector<Element> t(cells, 0);
  while (true) {
    visit(t);
    // base-n increment, last cell least significant
    unsigned i = cells;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return;
    }
  }
}

void sample_tables(unsigned n, std::uint64_t count, std::mt19937_64& rng,
                   const std::function<void(std::span<const Element>)>& visit) {
  std::uniform_int_distribution<unsigned> d(0, n - 1);
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  for (std::uint64_t k = 0; k < count; ++k) {
    for (auto& cell : t) cell = d(rng);
    visit(t);
  }
}

ProfileFilter ProfileFilter::parse(std::string_view csv) {
  ProfileFilter f;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view tok = csv.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      static const char* known[] = {"commutative", "non-commutative", "associative",
                                    "non-associative", "medial", "non-medial",
                                    "has-unit", "no-unit", "has-left-unit", "has-right-unit"};
      if (std::find(std::begin(known), std::end(known), tok) == std::end(known))
        throw Error("unknown filter token '" + std::string(tok) + "'");
      f.tokens.emplace_back(tok);
    }
    if (comma == csv.size()) break;
    pos = comma + 1;
  }
  return f;
}

bool ProfileFilter::matches(const Profile& p) const {
  for (const auto& tok : tokens) {
    if (tok == "commutative" && !p.commutative) return false;
    if (tok == "non-commutative" && p.commutative) return false;
    if (tok == "associative" && !p.associative) return false;
    if (tok == "non-associative" && p.associative) return false;
    if (tok == "medial" && !p.medial) return false;
    if (tok == "non-medial" && p.medial) return false;
    if (tok == "has-unit" && !p.has_unit) return false;
    if (tok == "no-unit" && p.has_unit) return false;
    if (tok == "has-left-unit" && !p.has_left_unit) return false;
    if (tok == "has-right-unit" && !p.has_right_unit) return false;
  }
  return true;
}

namespace {

EnumerationSummary summarize(unsigned n, const ProfileFilter& filter, unsigned max_exemplars,
                             const std::function<void(const std::function<void(std::span<const Element>)>&)>& drive) {
  EnumerationSummary s;
  s.size = n;
  drive([&](std::span<const Element> t) {
    ++s.total;
    Profile p = profile_of(n, t);
    ++s.profile_counts[p.key()];
    if (filter.matches(p)) {
      ++s.matching;
      auto& bucket = s.exemplars[p.key()];
      if (bucket.size() < max_exemplars) bucket.emplace_back(t.begin(), t.end());
    }
  });
  return s;
}

}  // namespace

EnumerationSummary enumerate_tables(unsigned n, const ProfileFilter& filter,
                                    unsigned max_exemplars) {
  return summarize(n, filter, max_exemplars,
                   [n](const std::function<void(std::span<const Element>)>& v) {
                     for_each_table(n, v);
                   });
}

EnumerationSummary enumerate_sampled(unsigned n, std::uint64_t samples, std::mt19937_64& rng,
                                     const ProfileFilter& filter, unsigned max_exemplars) {
  return summarize(n, filter, max_exemplars,
                   [&](const std::function<void(std::span<const Element>)>& v) {
                     sample_tables(n, samples, rng, v);
                   });
}

}  // namespace mtbdd::algebra
