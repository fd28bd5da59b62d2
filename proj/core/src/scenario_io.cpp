#include "rcsep/scenario_io.hpp"

#include "rcsep/errors.hpp"

#include <fstream>
#include <sstream>

namespace rcsep::scenario_io {

namespace niem = rcsep::niemytzki;
namespace sorg = rcsep::sorgenfrey;
using harness::Scenario;

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ScenarioError("line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

Rational parse_rational(const std::string& t, std::size_t line) {
  try {
    return Rational::parse(t);
  } catch (const std::invalid_argument& e) {
    fail(line, e.what());
  }
}

long parse_long(const std::string& t, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (...) {
    fail(line, std::string("bad integer for ") + what + ": '" + t + "'");
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  bool space_seen = false;
  bool eps_seen = false;
  int section = 0;  // 0 header, 1 F, 2 G

  std::istringstream is(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line == "F:") {
      if (!space_seen) fail(lineno, "space must be declared before generators");
      section = 1;
      continue;
    }
    if (line == "G:") {
      if (section < 1) fail(lineno, "F: block must come before G:");
      section = 2;
      continue;
    }

    if (section == 0) {
      auto colon = line.find(':');
      if (colon == std::string::npos) fail(lineno, "expected 'key: value'");
      std::string key = trim(line.substr(0, colon));
      std::string val = trim(line.substr(colon + 1));
      if (val.empty()) fail(lineno, "missing value for key '" + key + "'");
      if (key == "space") {
        auto ts = tokens(val);
        if (ts[0] == "niemytzki" && ts.size() == 1) {
          s.space = region::Space::niemytzki;
        } else if (ts[0] == "sorgenfrey" && ts.size() == 2) {
          s.space = region::Space::sorgenfrey;
          long d = parse_long(ts[1], lineno, "dimension");
          if (d < 1) fail(lineno, "dimension must be >= 1");
          s.dim = (std::size_t)d;
        } else {
          fail(lineno, "space must be 'niemytzki' or 'sorgenfrey <d>'");
        }
        space_seen = true;
      } else if (key == "epsilon") {
        s.epsilon = parse_rational(val, lineno);
        eps_seen = true;
      } else if (key == "stages") {
        s.stages = parse_long(val, lineno, "stages");
      } else if (key == "samples") {
        s.samples = parse_long(val, lineno, "samples");
      } else if (key == "seed") {
        s.seed = (std::uint64_t)parse_long(val, lineno, "seed");
      } else if (key == "budget") {
        s.budget = (int)parse_long(val, lineno, "budget");
      } else if (key == "name") {
        s.name = val;
      } else {
        fail(lineno, "unknown key '" + key + "'");
      }
      continue;
    }

    // generator lines
    auto ts = tokens(line);
    if (s.space == region::Space::niemytzki) {
      if (ts.size() != 4 || ts[0] != "ball")
        fail(lineno, "expected 'ball x y r'");
      Rational x = parse_rational(ts[1], lineno);
      Rational y = parse_rational(ts[2], lineno);
      Rational r = parse_rational(ts[3], lineno);
      if (r.sign() <= 0) fail(lineno, "radius must be positive");
      if (y.sign() < 0) fail(lineno, "anchor must lie in the closed upper half plane");
      auto b = niem::closed_ball(niem::Point{x, y}, r);
      (section == 1 ? s.nF : s.nG).push_back(b);
    } else {
      if (ts.empty() || ts[0] != "box" || ts.size() != 1 + 2 * s.dim)
        fail(lineno, "expected 'box l1 .. ld w1 .. wd' with d = " + std::to_string(s.dim));
      sorg::Point lower;
      std::vector<Rational> widths;
      for (std::size_t k = 0; k < s.dim; ++k)
        lower.coords.push_back(parse_rational(ts[1 + k], lineno));
      for (std::size_t k = 0; k < s.dim; ++k) {
        Rational w = parse_rational(ts[1 + s.dim + k], lineno);
        if (w.sign() <= 0) fail(lineno, "widths must be positive");
        widths.push_back(w);
      }
      (section == 1 ? s.sF : s.sG).push_back(sorg::box(lower, widths));
    }
  }

  if (!space_seen) throw ScenarioError("scenario: missing 'space:' declaration");
  if (section < 2) throw ScenarioError("scenario: missing F: or G: block");
  if (!eps_seen) s.epsilon = Rational(1, 2);
  harness::validate(s);
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  os << "name: " << s.name << "\n";
  if (s.space == region::Space::niemytzki)
    os << "space: niemytzki\n";
  else
    os << "space: sorgenfrey " << s.dim << "\n";
  os << "epsilon: " << s.epsilon.str() << "\n";
  os << "stages: " << s.stages << "\n";
  os << "samples: " << s.samples << "\n";
  os << "seed: " << s.seed << "\n";
  os << "budget: " << s.budget << "\n";
  os << "F:\n";
  if (s.space == region::Space::niemytzki) {
    for (const auto& b : s.nF)
      os << "ball " << b.anchor.x.str() << " " << b.anchor.y.str() << " " << b.radius.str()
         << "\n";
    os << "G:\n";
    for (const auto& b : s.nG)
      os << "ball " << b.anchor.x.str() << " " << b.anchor.y.str() << " " << b.radius.str()
         << "\n";
  } else {
    auto emit = [&](const sorg::Box& b) {
      os << "box";
      for (const auto& c : b.lower.coords) os << " " << c.str();
      for (const auto& w : b.widths) os << " " << w.str();
      os << "\n";
    };
    for (const auto& b : s.sF) emit(b);
    os << "G:\n";
    for (const auto& b : s.sG) emit(b);
  }
  return os.str();
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario(ss.str());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path + ": " + e.what());
  }
}

}  // namespace rcsep::scenario_io
