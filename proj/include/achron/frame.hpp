#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "achron/signature.hpp"

namespace achron {

using WorldSet = boost::dynamic_bitset<>;

// One accessibility relation, stored as a successor set per source world.
using Relation = std::vector<WorldSet>;

using EdgeList = std::vector<std::pair<std::string, std::string>>;

// A frame: named worlds plus one relation per modality of the signature.
// Frames are immutable; the derived-frame operations below return copies.
class Frame {
public:
  Frame(Signature sig, std::vector<std::string> worlds,
        std::map<std::string, EdgeList> edges);
  Frame(Signature sig, std::vector<std::string> worlds, std::vector<Relation> rels);

  const Signature& sig() const { return sig_; }
  std::size_t world_count() const { return worlds_.size(); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& world_name(std::size_t i) const { return worlds_.at(i); }
  std::size_t world_index(const std::string& name) const;
  std::size_t modality_index(const std::string& m) const { return sig_.index(m); }

  const Relation& relation(std::size_t mi) const { return rels_.at(mi); }
  const Relation& relation(const std::string& m) const { return rels_.at(sig_.index(m)); }
  bool edge(std::size_t mi, std::size_t x, std::size_t y) const {
    return rels_[mi][x].test(y);
  }

  const WorldSet& future(std::size_t mi, std::size_t x) const { return rels_.at(mi).at(x); }
  WorldSet future(const std::string& m, const std::string& x) const {
    return rels_.at(sig_.index(m)).at(world_index(x));
  }

  WorldSet all_worlds() const { return WorldSet(worlds_.size()).set(); }
  WorldSet empty_set() const { return WorldSet(worlds_.size()); }

  // R-bar for one modality: (x, y) is in the result iff R(y) is a subset of
  // R(x).  Always reflexive and transitive.
  Relation overline(std::size_t mi) const;
  Relation overline(const std::string& m) const { return overline(sig_.index(m)); }

  Frame with_relation(std::size_t mi, Relation r) const;
  Frame overline_frame() const;  // every relation replaced by its overline
  Frame reflexive_closure() const;
  Frame transitive_closure() const;

  WorldSet reachable_from(std::size_t x) const;  // closure under all modalities
  Frame generated_subframe(const std::string& w) const;

  // Image of {x} under the composition of the listed relations, first name
  // applied first.
  WorldSet compose(const std::vector<std::string>& mods, const std::string& x) const;

  bool operator==(const Frame& other) const {
    return sig_ == other.sig_ && worlds_ == other.worlds_ && rels_ == other.rels_;
  }

private:
  void check_shape() const;

  Signature sig_;
  std::vector<std::string> worlds_;
  std::vector<Relation> rels_;  // [modality][world] -> successor set
};

// Relation helpers.
Relation identity_relation(std::size_t n);
Relation compose_relations(const Relation& a, const Relation& b);
Relation nfold_compose(const Relation& r, unsigned n);  // n = 0 gives identity
bool is_reflexive(const Relation& r);
bool is_transitive(const Relation& r);
bool is_symmetric(const Relation& r);
bool relation_subset(const Relation& a, const Relation& b);

// Largest subset of s that is pairwise unrelated under the relation of m
// (no edge in either direction between distinct members).
std::size_t antichain_width(const Frame& f, std::size_t mi, const WorldSet& s);
std::size_t antichain_width(const Frame& f, const std::string& m, const WorldSet& s);

// Largest subset of s whose futures under m are pairwise incomparable by
// inclusion; equivalently the antichain width of s under R-bar.
std::size_t achronal_width(const Frame& f, std::size_t mi, const WorldSet& s);
std::size_t achronal_width(const Frame& f, const std::string& m, const WorldSet& s);

// Clique search on an undirected graph given as adjacency rows, restricted
// to the members mask.  first_clique_of_size returns the lexicographically
// least k-subset (as ascending indices) forming a clique, if any.
std::size_t max_clique_size(const std::vector<WorldSet>& adj, const WorldSet& members);
std::optional<std::vector<std::size_t>> first_clique_of_size(
    const std::vector<WorldSet>& adj, const WorldSet& members, std::size_t k);

// Pairwise-unrelatedness and future-incomparability graphs over the worlds
// of f, ready for the clique helpers.
std::vector<WorldSet> unrelated_graph(const Relation& r);
std::vector<WorldSet> incomparability_graph(const Relation& r);

// Exhaustive isomorphism check; capped at 8 worlds.
bool isomorphic(const Frame& a, const Frame& b);

// A model: frame plus a valuation mapping atom indices to world sets.
// Atoms absent from the map are false everywhere.
using Valuation = std::map<int, WorldSet>;

struct Model {
  Frame frame;
  Valuation val;
};

}  // namespace achron
