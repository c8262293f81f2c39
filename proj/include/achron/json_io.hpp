#pragma once

#include <optional>
#include <string>
#include <utility>

#include "achron/frame.hpp"

namespace achron {

class FiniteBao;

// Frame files:
//
//   {
//     "modalities": ["d"],
//     "worlds": ["a", "x0", "x1"],
//     "relations": { "d": [["a","x0"], ["a","x1"], ["x0","x0"], ["x1","x1"]] },
//     "valuation": { "p0": ["x0"] }
//   }
//
// "valuation" is optional; with it the file describes a model.  Pair order
// is not significant.  Unknown keys anywhere are rejected.
std::pair<Frame, std::optional<Valuation>> frame_from_json(const std::string& text);
std::string frame_to_json(const Frame& f, const std::optional<Valuation>& val = std::nullopt);

// Algebra files:
//
//   {
//     "modalities": ["d"],
//     "atoms": ["x", "y"],
//     "op": { "d": { "x": ["x","y"], "y": [] } }
//   }
//
// Operators are given on atoms and extended additively.  Atoms missing from
// an operator table map to the empty join.
FiniteBao algebra_from_json(const std::string& text);
std::string algebra_to_json(const FiniteBao& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace achron
