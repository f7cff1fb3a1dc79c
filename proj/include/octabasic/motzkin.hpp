#pragma once

// Weighted four-step Motzkin paths and the run-insertion bijection with
// permutations.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "octabasic/permstat.hpp"
#include "octabasic/polyring.hpp"

namespace octabasic {

/// NE and E_SOLID carry weight a*c^j*d^k with j+k equal to the start level;
/// SE and E_DOTTED carry b*c^j*d^k with j+k one less.
enum class StepKind : std::uint8_t { E_SOLID, E_DOTTED, NE, SE };

std::string_view step_name(StepKind k);

struct WeightedStep {
  StepKind kind = StepKind::E_SOLID;
  int j = 0;
  int k = 0;

  bool operator==(const WeightedStep&) const = default;
};

struct MalformedPath : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WeightedMotzkinPath {
  std::vector<WeightedStep> steps;

  int length() const { return static_cast<int>(steps.size()); }
  /// Levels before each step plus the final level (length()+1 entries).
  /// Throws MalformedPath if the path dips below zero or a label does not
  /// fit its start level; does not require ending at zero.
  std::vector<int> levels() const;
  /// Throws MalformedPath unless the path is a complete valid labeled path.
  void validate() const;

  /// Comma-separated KIND(j,k) tokens, e.g. "NE(0,0),SE(0,0)".
  std::string to_string() const;
  static WeightedMotzkinPath parse(std::string_view text);

  bool operator==(const WeightedMotzkinPath&) const = default;
};

/// Level change of a step: +1, -1 or 0.
int level_delta(StepKind k);

/// Every valid labeled path of length n, ordered by step kind
/// (E_SOLID < E_DOTTED < NE < SE) then by j at each position.
std::vector<WeightedMotzkinPath> enumerate_paths(int n);

/// Calls visit for each labeled path of length n in enumerate_paths order
/// without materializing the list.
void for_each_path(int n, const std::function<void(const WeightedMotzkinPath&)>& visit);

Poly path_weight(const WeightedMotzkinPath& path);

/// One insertion stage of path_to_perm.
struct TraceStep {
  int value = 0;
  WeightedStep step;
  int level_before = 0;
  int level_after = 0;
  /// Partial permutation with run bars after inserting value.
  std::string partial;
};

/// Inserts 1..n as the path dictates. Throws MalformedPath on invalid input.
Permutation path_to_perm(const WeightedMotzkinPath& path, std::vector<TraceStep>* trace = nullptr);

/// Step i has the kind fixed by i's class and label (lsg(i), rsg(i)).
WeightedMotzkinPath perm_to_path(const Permutation& sigma);

/// "i: KIND(j,k) level h→h' | partial" per line.
std::string format_trace(const std::vector<TraceStep>& trace);
nlohmann::json trace_to_json(const std::vector<TraceStep>& trace);

}  // namespace octabasic
