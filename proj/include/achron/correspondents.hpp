#pragma once

#include <string>
#include <utility>
#include <vector>

#include "achron/frame.hpp"

namespace achron {

// Outcome of a first-order frame condition: either it holds, or the
// counterexample names the witnessing worlds (and bound parameters).  The
// counterexample is the first one in the scan order documented on each
// checker, so it is stable across runs.
struct ConditionReport {
  bool holds;
  std::vector<std::pair<std::string, std::string>> counterexample;

  std::string describe() const;  // "x=a y=b z=c" or empty when it holds
};

// For all x, y, z: Rxy and R^n xz imply Ryz.  Scan order: x, then y in
// R(x), then z in R^n(x), all by world index.  n = 0 is symmetry.
ConditionReport check_5n(const Frame& f, unsigned n, const std::string& m);

// The ladder of conditions equivalent to the n = 2 axiom's validity:
// for every n <= max_n, R^n xy and R^(n+1) xz imply Ryz.  The n = 0 stage
// never fails; the counterexample binds the failing stage as "n".
ConditionReport check_e52_upto(const Frame& f, const std::string& m, unsigned max_n);

// Every diamond-future has achronal width (under the black modality) at
// most n: no x has n+1 points of future(dia, x) with pairwise incomparable
// bdia-futures.  The counterexample binds x and the lexicographically first
// such tuple y0..yn.  Requires n >= 1.
ConditionReport check_Un(const Frame& f, unsigned n, const std::string& dia,
                         const std::string& bdia);

// Same condition spelled as the literal quantifier prefix; exponential in
// n, kept for cross-checking on tiny frames.
ConditionReport check_Un_literal(const Frame& f, unsigned n, const std::string& dia,
                                 const std::string& bdia);

// No future contains an antichain of more than n points.  Requires n >= 1.
ConditionReport check_In(const Frame& f, unsigned n, const std::string& m);

// All futures are pairwise comparable by inclusion; counterexample is the
// first incomparable pair.
ConditionReport check_chain(const Frame& f, const std::string& m);

// Every antichain of more than n points inside a future contains two
// distinct points with the same strict future (successors that do not see
// back).  Requires n >= 1.
ConditionReport check_widstar(const Frame& f, unsigned n, const std::string& m);

struct FrameProps {
  bool reflexive;
  bool transitive;
  bool symmetric;
};

FrameProps frame_props(const Frame& f, const std::string& m);

// Shape of a point-generated frame with a euclidean relation: a single
// irreflexive point, or every point sees a reflexive point.
enum class SegerbergClass { SingleIrreflexive, ReflexiveCofinal, Neither };

const char* to_string(SegerbergClass c);

// Classify the frame generated by w.  The frame must be single-modality and
// actually generated by w (NotPointGenerated otherwise).
SegerbergClass segerberg_classify(const Frame& f, const std::string& w);

}  // namespace achron
