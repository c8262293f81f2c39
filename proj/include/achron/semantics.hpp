#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "achron/formula.hpp"
#include "achron/frame.hpp"

namespace achron {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 24;

// Truth set of f in the model: the set of worlds satisfying f.
WorldSet truth_set(const Model& m, const Formula& f);

bool satisfies(const Model& m, std::size_t world, const Formula& f);
bool satisfies(const Model& m, const std::string& world, const Formula& f);

// True when every world of the model satisfies f.
bool verifies(const Model& m, const Formula& f);

struct Witness {
  Valuation valuation;
  std::size_t world;
};

struct ValidityVerdict {
  bool valid;
  std::optional<Witness> witness;  // refuting valuation and world
};

struct SatVerdict {
  bool satisfiable;
  std::optional<Witness> witness;  // satisfying valuation and world
};

// Frame validity by exhaustive valuation sweep over the atoms of f.  The
// sweep enumerates valuations as bit vectors, least significant bit first,
// bit (a * world_count + w) deciding world w for the a-th atom of f in
// ascending atom order.  The witness is the first refuting valuation in that
// order together with its least refuting world, independent of thread count.
// Raises Budget when 2^(atoms * worlds) exceeds the budget.
ValidityVerdict valid_on_frame(const Frame& f, const Formula& phi,
                               std::uint64_t budget = kDefaultBudget);

// Single-threaded reference implementation of the same sweep.
ValidityVerdict valid_on_frame_serial(const Frame& f, const Formula& phi,
                                      std::uint64_t budget = kDefaultBudget);

// Validity at one designated world, same enumeration order.
ValidityVerdict valid_at_point(const Frame& f, const std::string& world, const Formula& phi,
                               std::uint64_t budget = kDefaultBudget);

// Dual sweep: first valuation and world satisfying f, if any.
SatVerdict satisfiable_in_frame(const Frame& f, const Formula& phi,
                                std::uint64_t budget = kDefaultBudget);

}  // namespace achron
