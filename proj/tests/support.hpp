#pragma once

// Helpers shared by the unit suites and the acceptance runner: exhaustive
// small-frame enumeration, deterministic random generators, and independent
// (definition-level) oracles for the quantities the library computes by
// cleverer means.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "achron/formula.hpp"
#include "achron/frame.hpp"
#include "achron/signature.hpp"

namespace testsup {

using namespace achron;

inline Signature mono() { return Signature({"d"}); }

// Every single-modality frame on n worlds corresponds to one bitmask over the
// n*n adjacency entries: bit (x*n + y) set means an edge x -> y.
inline Frame frame_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
  Relation r(n, WorldSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((mask >> (x * n + y)) & 1) r[x].set(y);
  return Frame(mono(), std::move(names), std::vector<Relation>{std::move(r)});
}

inline std::uint64_t mask_count(std::size_t n) { return std::uint64_t(1) << (n * n); }

template <typename Fn>
void for_all_frames_upto(std::size_t max_worlds, Fn&& fn) {
  for (std::size_t n = 1; n <= max_worlds; ++n)
    for (std::uint64_t m = 0; m < mask_count(n); ++m) fn(frame_from_mask(n, m));
}

// Deterministic source; modulo instead of distribution objects so draws are
// identical across standard libraries.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t next(std::uint64_t bound) { return gen() % bound; }
  bool coin() { return gen() & 1; }
};

inline Frame random_frame(Rng& rng, std::size_t max_worlds,
                          const std::vector<std::string>& mods = {"d"}) {
  std::size_t n = 1 + rng.next(max_worlds);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
  std::vector<Relation> rels;
  for (std::size_t m = 0; m < mods.size(); ++m) {
    Relation r(n, WorldSet(n));
    for (auto& row : r)
      for (std::size_t y = 0; y < n; ++y)
        if (rng.coin()) row.set(y);
    rels.push_back(std::move(r));
  }
  return Frame(Signature(mods), std::move(names), std::move(rels));
}

inline Valuation random_valuation(Rng& rng, std::size_t worlds, int atoms) {
  Valuation val;
  for (int a = 0; a < atoms; ++a) {
    WorldSet s(worlds);
    for (std::size_t w = 0; w < worlds; ++w)
      if (rng.coin()) s.set(w);
    val.emplace(a, std::move(s));
  }
  return val;
}

inline Formula random_formula(Rng& rng, int depth, int atoms,
                              const std::vector<std::string>& mods) {
  if (depth == 0 || rng.next(5) == 0) {
    std::uint64_t pick = rng.next(static_cast<std::uint64_t>(atoms) + 2);
    if (pick == 0) return top();
    if (pick == 1) return bot();
    return atom(static_cast<int>(pick - 2));
  }
  switch (rng.next(7)) {
    case 0:
      return neg(random_formula(rng, depth - 1, atoms, mods));
    case 1:
      return disj(random_formula(rng, depth - 1, atoms, mods),
                  random_formula(rng, depth - 1, atoms, mods));
    case 2:
      return conj(random_formula(rng, depth - 1, atoms, mods),
                  random_formula(rng, depth - 1, atoms, mods));
    case 3:
      return implies(random_formula(rng, depth - 1, atoms, mods),
                     random_formula(rng, depth - 1, atoms, mods));
    case 4:
      return iff(random_formula(rng, depth - 1, atoms, mods),
                 random_formula(rng, depth - 1, atoms, mods));
    default: {
      const std::string& m = mods[rng.next(mods.size())];
      Formula sub = random_formula(rng, depth - 1, atoms, mods);
      return rng.coin() ? dia(m, std::move(sub)) : box(m, std::move(sub));
    }
  }
}

// A fixed pool of `count` distinct formulas with modal depth <= modal_cap.
inline std::vector<Formula> formula_pool(std::uint64_t seed, std::size_t count,
                                         int modal_cap, int atoms) {
  Rng rng(seed);
  std::vector<Formula> pool;
  while (pool.size() < count) {
    Formula f = random_formula(rng, 4, atoms, {"d"});
    if (modal_depth(f) > modal_cap) continue;
    bool dup = false;
    for (const auto& g : pool)
      if (g == f) {
        dup = true;
        break;
      }
    if (!dup) pool.push_back(std::move(f));
  }
  return pool;
}

inline std::vector<std::size_t> members_of(const WorldSet& s) {
  std::vector<std::size_t> out;
  for (auto w = s.find_first(); w != WorldSet::npos; w = s.find_next(w)) out.push_back(w);
  return out;
}

inline bool comparable(const WorldSet& a, const WorldSet& b) {
  return a.is_subset_of(b) || b.is_subset_of(a);
}

// Largest subset of S whose futures are pairwise incomparable by inclusion —
// the definition itself, by subset enumeration.
inline std::size_t oracle_achronal_width(const Frame& f, std::size_t mi, const WorldSet& S) {
  std::vector<std::size_t> idx = members_of(S);
  std::size_t best = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << idx.size()); ++sub) {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if ((sub >> i) & 1) pts.push_back(idx[i]);
    bool ok = true;
    for (std::size_t i = 0; ok && i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (comparable(f.future(mi, pts[i]), f.future(mi, pts[j]))) {
          ok = false;
          break;
        }
    if (ok && pts.size() > best) best = pts.size();
  }
  return best;
}

// Largest subset of S with no edge in either direction between any two
// members — again straight from the definition.
inline std::size_t oracle_antichain_width(const Frame& f, std::size_t mi, const WorldSet& S) {
  std::vector<std::size_t> idx = members_of(S);
  std::size_t best = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << idx.size()); ++sub) {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if ((sub >> i) & 1) pts.push_back(idx[i]);
    bool ok = true;
    for (std::size_t i = 0; ok && i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (f.edge(mi, pts[i], pts[j]) || f.edge(mi, pts[j], pts[i])) {
          ok = false;
          break;
        }
    if (ok && pts.size() > best) best = pts.size();
  }
  return best;
}

// Largest k such that some Y ⊆ S has image {R(y) : y ∈ Y} consisting of k
// distinct, pairwise-incomparable sets.
inline std::size_t oracle_image_antichain(const Frame& f, std::size_t mi, const WorldSet& S) {
  std::vector<std::size_t> idx = members_of(S);
  std::size_t best = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << idx.size()); ++sub) {
    std::vector<WorldSet> family;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if ((sub >> i) & 1) {
        const WorldSet& fut = f.future(mi, idx[i]);
        bool seen = false;
        for (const auto& g : family)
          if (g == fut) {
            seen = true;
            break;
          }
        if (!seen) family.push_back(fut);
      }
    bool ok = true;
    for (std::size_t i = 0; ok && i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j)
        if (comparable(family[i], family[j])) {
          ok = false;
          break;
        }
    if (ok && family.size() > best) best = family.size();
  }
  return best;
}

// Inclusion-width of the family of distinct futures of S: the largest
// pairwise-incomparable subfamily.
inline std::size_t oracle_image_width(const Frame& f, std::size_t mi, const WorldSet& S) {
  std::vector<WorldSet> family;
  for (std::size_t w : members_of(S)) {
    const WorldSet& fut = f.future(mi, w);
    bool seen = false;
    for (const auto& g : family)
      if (g == fut) {
        seen = true;
        break;
      }
    if (!seen) family.push_back(fut);
  }
  std::size_t best = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << family.size()); ++sub) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < family.size(); ++i)
      if ((sub >> i) & 1) pick.push_back(i);
    bool ok = true;
    for (std::size_t i = 0; ok && i < pick.size(); ++i)
      for (std::size_t j = i + 1; j < pick.size(); ++j)
        if (comparable(family[pick[i]], family[pick[j]])) {
          ok = false;
          break;
        }
    if (ok && pick.size() > best) best = pick.size();
  }
  return best;
}

// Does some world reach every world (under all modalities)?
inline bool rooted(const Frame& f) {
  for (std::size_t w = 0; w < f.world_count(); ++w)
    if (f.reachable_from(w).all()) return true;
  return false;
}

}  // namespace testsup
