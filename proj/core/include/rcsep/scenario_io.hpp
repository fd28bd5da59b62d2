#pragma once

#include "rcsep/harness.hpp"

#include <string>

namespace rcsep::scenario_io {

// Line-oriented scenario format.
//
//   # comment
//   space: niemytzki            (or: sorgenfrey <d>)
//   epsilon: 1/2                (optional, niemytzki only; defaults to 1/2)
//   stages: 8                   (optional)
//   samples: 100                (optional)
//   seed: 7                     (optional)
//   budget: 16                  (optional)
//   name: far-apart             (optional)
//   F:
//   ball 0 0 1                  (anchor x, anchor y, radius)
//   G:
//   ball 4 0 1
//
// Sorgenfrey generators: `box l1 .. ld w1 .. wd`. Rationals are written as
// p/q or plain integers. Parsing is total-or-error; every diagnostic names a
// line number. parse(serialize(parse(text))) reproduces the same scenario.

harness::Scenario parse_scenario(const std::string& text);
std::string serialize_scenario(const harness::Scenario& s);

harness::Scenario load_scenario_file(const std::string& path);

}  // namespace rcsep::scenario_io
