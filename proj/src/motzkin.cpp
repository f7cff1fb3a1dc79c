#include "octabasic/motzkin.hpp"

#include <cctype>
#include <sstream>

namespace octabasic {

namespace {

struct Bracket {
  VarId alpha;
  VarId c;
  VarId d;
};

Bracket bracket_of(StepKind k) {
  switch (k) {
    case StepKind::NE:
      return {VarId::a, VarId::p, VarId::q};
    case StepKind::SE:
      return {VarId::b, VarId::v, VarId::w};
    case StepKind::E_SOLID:
      return {VarId::a, VarId::r, VarId::s};
    case StepKind::E_DOTTED:
      return {VarId::b, VarId::t, VarId::u};
  }
  throw std::logic_error("bad step kind");
}

// j + k must equal this for a step starting at level h.
int label_sum(StepKind k, int h) {
  return (k == StepKind::NE || k == StepKind::E_SOLID) ? h : h - 1;
}

std::string step_token(const WeightedStep& s) {
  return std::string(step_name(s.kind)) + "(" + std::to_string(s.j) + "," + std::to_string(s.k) + ")";
}

}  // namespace

std::string_view step_name(StepKind k) {
  switch (k) {
    case StepKind::E_SOLID:
      return "E_SOLID";
    case StepKind::E_DOTTED:
      return "E_DOTTED";
    case StepKind::NE:
      return "NE";
    case StepKind::SE:
      return "SE";
  }
  return "?";
}

int level_delta(StepKind k) {
  if (k == StepKind::NE) return 1;
  if (k == StepKind::SE) return -1;
  return 0;
}

std::vector<int> WeightedMotzkinPath::levels() const {
  std::vector<int> lv{0};
  lv.reserve(steps.size() + 1);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    const int h = lv.back();
    if (s.j < 0 || s.k < 0 || s.j + s.k != label_sum(s.kind, h))
      throw MalformedPath("step " + std::to_string(i + 1) + " " + step_token(s) + " does not fit level " +
                          std::to_string(h));
    const int next = h + level_delta(s.kind);
    if (next < 0) throw MalformedPath("step " + std::to_string(i + 1) + " goes below level 0");
    lv.push_back(next);
  }
  return lv;
}

void WeightedMotzkinPath::validate() const {
  if (levels().back() != 0) throw MalformedPath("path does not return to level 0");
}

std::string WeightedMotzkinPath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ',';
    out += step_token(steps[i]);
  }
  return out;
}

WeightedMotzkinPath WeightedMotzkinPath::parse(std::string_view text) {
  WeightedMotzkinPath path;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw MalformedPath(std::string("path syntax: expected '") + c + "' at offset " + std::to_string(i));
    ++i;
  };
  auto number = [&] {
    skip_ws();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw MalformedPath("path syntax: expected a number at offset " + std::to_string(start));
    return std::stoi(std::string(text.substr(start, i - start)));
  };

  skip_ws();
  while (i < text.size()) {
    const std::size_t start = i;
    while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    const auto name = text.substr(start, i - start);
    WeightedStep s;
    if (name == "NE") {
      s.kind = StepKind::NE;
    } else if (name == "SE") {
      s.kind = StepKind::SE;
    } else if (name == "E_SOLID") {
      s.kind = StepKind::E_SOLID;
    } else if (name == "E_DOTTED") {
      s.kind = StepKind::E_DOTTED;
    } else {
      throw MalformedPath("path syntax: unknown step kind '" + std::string(name) + "'");
    }
    expect('(');
    s.j = number();
    expect(',');
    s.k = number();
    expect(')');
    path.steps.push_back(s);
    skip_ws();
    if (i < text.size()) {
      expect(',');
      skip_ws();
      if (i >= text.size()) throw MalformedPath("path syntax: trailing comma");
    }
  }
  return path;
}

// -------------------------------------------------------------- enumeration

void for_each_path(int n, const std::function<void(const WeightedMotzkinPath&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_path: negative n");
  WeightedMotzkinPath path;
  path.steps.reserve(n);
  constexpr StepKind kOrder[] = {StepKind::E_SOLID, StepKind::E_DOTTED, StepKind::NE, StepKind::SE};

  std::function<void(int)> extend = [&](int h) {
    const int remaining = n - path.length();
    if (remaining == 0) {
      if (h == 0) visit(path);
      return;
    }
    for (StepKind kind : kOrder) {
      const int next = h + level_delta(kind);
      const int sum = label_sum(kind, h);
      if (next < 0 || next > remaining - 1 || sum < 0) continue;
      for (int j = 0; j <= sum; ++j) {
        path.steps.push_back({kind, j, sum - j});
        extend(next);
        path.steps.pop_back();
      }
    }
  };
  extend(0);
}

std::vector<WeightedMotzkinPath> enumerate_paths(int n) {
  std::vector<WeightedMotzkinPath> out;
  for_each_path(n, [&](const WeightedMotzkinPath& p) { out.push_back(p); });
  return out;
}

Poly path_weight(const WeightedMotzkinPath& path) {
  Monomial m;
  for (const auto& s : path.steps) {
    const auto br = bracket_of(s.kind);
    m *= Monomial{{br.alpha, 1}, {br.c, s.j}, {br.d, s.k}};
  }
  return Poly::monomial(m);
}

// ---------------------------------------------------------------- bijection

namespace {

struct Block {
  std::vector<int> values;
  bool active = false;
};

std::string render(const std::vector<Block>& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += " | ";
    for (std::size_t i = 0; i < blocks[b].values.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(blocks[b].values[i]);
    }
  }
  return out;
}

}  // namespace

Permutation path_to_perm(const WeightedMotzkinPath& path, std::vector<TraceStep>* trace) {
  const auto lv = path.levels();
  if (lv.back() != 0) throw MalformedPath("path does not return to level 0");

  // Blocks are the runs of the final permutation, in final order. A block is
  // active while it still awaits a continuator or its closer.
  std::vector<Block> blocks;
  int active = 0;
  for (int idx = 0; idx < path.length(); ++idx) {
    const auto& s = path.steps[idx];
    const int value = idx + 1;
    if (active != lv[idx]) throw std::logic_error("active run count diverged from path level");

    if (s.kind == StepKind::E_DOTTED || s.kind == StepKind::SE) {
      int seen = 0;
      for (auto& blk : blocks) {
        if (!blk.active) continue;
        if (seen++ == s.j) {
          blk.values.push_back(value);
          if (s.kind == StepKind::SE) {
            blk.active = false;
            --active;
          }
          break;
        }
      }
    } else {
      // A new run may start at the front of the word or right after an active
      // run; anywhere else the preceding element would be smaller than value.
      int left_active = 0;
      std::size_t slot = blocks.size() + 1;
      for (std::size_t pos = 0; pos <= blocks.size(); ++pos) {
        if (pos > 0 && blocks[pos - 1].active) ++left_active;
        const bool feasible = pos == 0 || blocks[pos - 1].active;
        if (feasible && left_active == s.j) {
          slot = pos;
          break;
        }
      }
      if (slot > blocks.size()) throw MalformedPath("no insertion slot for step " + std::to_string(value));
      const bool opens = s.kind == StepKind::NE;
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(slot), Block{{value}, opens});
      if (opens) ++active;
    }
    if (trace) trace->push_back({value, s, lv[idx], lv[idx + 1], render(blocks)});
  }

  std::vector<int> word;
  word.reserve(path.length());
  for (const auto& blk : blocks) word.insert(word.end(), blk.values.begin(), blk.values.end());
  return Permutation(std::move(word));
}

WeightedMotzkinPath perm_to_path(const Permutation& sigma) {
  const auto d = decompose(sigma);
  const int n = sigma.size();
  WeightedMotzkinPath path;
  path.steps.resize(n);
  for (int value = 1; value <= n; ++value) {
    const int own = d.run_of_value[value];
    int l = 0, r = 0;
    for (int k = 0; k < d.run_count(); ++k) {
      if (k == own) continue;
      const auto run = d.runs[k];
      if (sigma.at(run.begin) < value && value < sigma.at(run.end - 1)) (k < own ? l : r) += 1;
    }
    StepKind kind = StepKind::E_SOLID;
    switch (d.class_of_value[value]) {
      case ElementClass::opener:
        kind = StepKind::NE;
        break;
      case ElementClass::closer:
        kind = StepKind::SE;
        break;
      case ElementClass::singleton:
        kind = StepKind::E_SOLID;
        break;
      case ElementClass::continuator:
        kind = StepKind::E_DOTTED;
        break;
    }
    path.steps[value - 1] = {kind, l, r};
  }
  return path;
}

std::string format_trace(const std::vector<TraceStep>& trace) {
  std::ostringstream os;
  for (const auto& t : trace)
    os << t.value << ": " << step_token(t.step) << " level " << t.level_before << "→" << t.level_after << " | "
       << t.partial << '\n';
  return os.str();
}

nlohmann::json trace_to_json(const std::vector<TraceStep>& trace) {
  auto out = nlohmann::json::array();
  for (const auto& t : trace)
    out.push_back({{"i", t.value},
                   {"kind", std::string(step_name(t.step.kind))},
                   {"j", t.step.j},
                   {"k", t.step.k},
                   {"level_before", t.level_before},
                   {"level_after", t.level_after},
                   {"partial", t.partial}});
  return out;
}

}  // namespace octabasic
