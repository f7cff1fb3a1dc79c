#include <doctest.h>

#include <set>

#include "octabasic/motzkin.hpp"
#include "octabasic/orthopoly.hpp"
#include "octabasic/families.hpp"
#include "support/oracle.hpp"

using namespace octabasic;

namespace {

WeightedMotzkinPath path(std::initializer_list<WeightedStep> steps) { return {std::vector<WeightedStep>(steps)}; }

/// Counts labeled paths level by level: a path at level h has h+1 labels for
/// NE/E_SOLID steps and h for SE/E_DOTTED steps.
std::uint64_t count_paths(int n) {
  std::vector<std::uint64_t> at(n + 2, 0);
  at[0] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(n + 2, 0);
    for (int h = 0; h <= n; ++h) {
      if (!at[h]) continue;
      next[h] += at[h] * (h + 1) + at[h] * h;
      if (h + 1 <= n) next[h + 1] += at[h] * (h + 1);
      if (h > 0) next[h - 1] += at[h] * h;
    }
    at = std::move(next);
  }
  return at[0];
}

}  // namespace

TEST_CASE("path grammar") {
  const auto p = WeightedMotzkinPath::parse("NE(0,0), SE(0,0)");
  CHECK(p == path({{StepKind::NE, 0, 0}, {StepKind::SE, 0, 0}}));
  CHECK(p.to_string() == "NE(0,0),SE(0,0)");
  CHECK(WeightedMotzkinPath::parse(p.to_string()) == p);
  CHECK_THROWS_AS(WeightedMotzkinPath::parse("NE(0,0),XX(0,0)"), MalformedPath);
  CHECK_THROWS_AS(WeightedMotzkinPath::parse("NE(0,0"), MalformedPath);
  CHECK_THROWS_AS(path({{StepKind::SE, 0, 0}}).validate(), MalformedPath);
  CHECK_THROWS_AS(path({{StepKind::NE, 0, 0}}).validate(), MalformedPath);
  CHECK_THROWS_AS(path({{StepKind::E_SOLID, 1, 0}}).validate(), MalformedPath);
  CHECK_THROWS_AS(path({{StepKind::NE, 0, 0}, {StepKind::E_DOTTED, 0, 1}, {StepKind::SE, 0, 0}}).validate(),
                  MalformedPath);
  CHECK_NOTHROW(path({{StepKind::NE, 0, 0}, {StepKind::NE, 1, 0}, {StepKind::SE, 0, 1}, {StepKind::SE, 0, 0}})
                    .validate());
  CHECK(path({{StepKind::NE, 0, 0}, {StepKind::NE, 0, 1}}).levels() == std::vector<int>{0, 1, 2});
}

TEST_CASE("enumeration") {
  const auto one = enumerate_paths(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == path({{StepKind::E_SOLID, 0, 0}}));
  const auto two = enumerate_paths(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == path({{StepKind::E_SOLID, 0, 0}, {StepKind::E_SOLID, 0, 0}}));
  CHECK(two[1] == path({{StepKind::NE, 0, 0}, {StepKind::SE, 0, 0}}));
  for (int n = 0; n <= 7; ++n) {
    std::uint64_t count = 0;
    std::set<std::string> seen;
    for_each_path(n, [&](const WeightedMotzkinPath& p) {
      ++count;
      if (n <= 5) seen.insert(p.to_string());
      CHECK_NOTHROW(p.validate());
    });
    CHECK(count == oracle::factorial(n));
    CHECK(count == count_paths(n));
    if (n <= 5) CHECK(seen.size() == count);
  }
}

TEST_CASE("weights") {
  const Poly a = Poly::var(VarId::a), b = Poly::var(VarId::b);
  CHECK(path_weight(path({{StepKind::NE, 0, 0}, {StepKind::SE, 0, 0}})) == a * b);
  CHECK(path_weight(path({{StepKind::E_SOLID, 0, 0}, {StepKind::E_SOLID, 0, 0}})) == a * a);
  SUBCASE("summing path weights reproduces the moments") {
    const auto mu = moments_from_recurrence(octabasic_coeffs(), 5);
    for (int n = 0; n <= 5; ++n) {
      Poly sum;
      for_each_path(n, [&](const WeightedMotzkinPath& p) { sum += path_weight(p); });
      CHECK(sum == mu[n]);
    }
  }
}

TEST_CASE("insertion map on small paths") {
  CHECK(path_to_perm(path({{StepKind::NE, 0, 0}, {StepKind::SE, 0, 0}})) == Permutation::parse("1 2"));
  CHECK(path_to_perm(path({{StepKind::E_SOLID, 0, 0}, {StepKind::E_SOLID, 0, 0}})) == Permutation::parse("2 1"));
  CHECK_THROWS_AS(path_to_perm(path({{StepKind::NE, 0, 0}})), MalformedPath);
}

TEST_CASE("decoding the worked permutation") {
  const auto sigma = Permutation::parse("2 6 3 5 7 4 1 8 9");
  const auto p = perm_to_path(sigma);
  const std::vector<StepKind> kinds{StepKind::NE,       StepKind::NE, StepKind::NE,       StepKind::E_SOLID, StepKind::E_DOTTED,
                                    StepKind::SE,       StepKind::SE, StepKind::E_DOTTED, StepKind::SE};
  REQUIRE(p.length() == 9);
  for (int i = 0; i < 9; ++i) {
    CHECK(p.steps[i].kind == kinds[i]);
    CHECK(p.steps[i].j == lsg(sigma, i + 1));
    CHECK(p.steps[i].k == rsg(sigma, i + 1));
  }
  std::vector<TraceStep> trace;
  CHECK(path_to_perm(p, &trace) == sigma);
  REQUIRE(trace.size() == 9);
  CHECK(trace.back().partial == "2 6 | 3 5 7 | 4 | 1 8 9");
  CHECK(format_trace(trace).find("9: SE(0,0) level 1") != std::string::npos);
  CHECK(trace_to_json(trace).size() == 9);
}

TEST_CASE("twelve-element example round trips") {
  const auto sigma = Permutation::parse("10 | 8 9 11 | 1 3 7 | 5 | 4 6 | 2 12");
  const auto p = perm_to_path(sigma);
  CHECK_NOTHROW(p.validate());
  CHECK(path_to_perm(p) == sigma);
  CHECK(path_weight(p) == theorem1_weight(sigma));
}

TEST_CASE("bijection is exhaustive on S_6") {
  std::set<std::string> images;
  for_each_path(6, [&](const WeightedMotzkinPath& p) {
    const auto sigma = path_to_perm(p);
    REQUIRE(perm_to_path(sigma) == p);
    REQUIRE(path_weight(p) == theorem1_weight(sigma));
    images.insert(sigma.to_string());
  });
  CHECK(images.size() == 720);
}
