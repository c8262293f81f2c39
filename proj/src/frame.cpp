#include "achron/frame.hpp"

#include <algorithm>
#include <numeric>

namespace achron {

Frame::Frame(Signature sig, std::vector<std::string> worlds,
             std::map<std::string, EdgeList> edges)
    : sig_(std::move(sig)), worlds_(std::move(worlds)) {
  check_shape();
  rels_.assign(sig_.size(), Relation(worlds_.size(), WorldSet(worlds_.size())));
  for (const auto& [m, pairs] : edges) {
    std::size_t mi = sig_.index(m);
    for (const auto& [x, y] : pairs) rels_[mi][world_index(x)].set(world_index(y));
  }
}

Frame::Frame(Signature sig, std::vector<std::string> worlds, std::vector<Relation> rels)
    : sig_(std::move(sig)), worlds_(std::move(worlds)), rels_(std::move(rels)) {
  check_shape();
  if (rels_.size() != sig_.size())
    fail(ErrorCode::Param, "one relation per modality expected");
  for (const auto& r : rels_) {
    if (r.size() != worlds_.size()) fail(ErrorCode::Param, "relation row count mismatch");
    for (const auto& row : r)
      if (row.size() != worlds_.size()) fail(ErrorCode::Param, "relation row width mismatch");
  }
}

void Frame::check_shape() const {
  if (worlds_.empty()) fail(ErrorCode::Param, "frame needs at least one world");
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (worlds_[i].empty()) fail(ErrorCode::Param, "empty world name");
    for (std::size_t j = i + 1; j < worlds_.size(); ++j)
      if (worlds_[i] == worlds_[j])
        fail(ErrorCode::Param, "duplicate world name '" + worlds_[i] + "'");
  }
}

std::size_t Frame::world_index(const std::string& name) const {
  for (std::size_t i = 0; i < worlds_.size(); ++i)
    if (worlds_[i] == name) return i;
  fail(ErrorCode::UnknownWorld, "unknown world '" + name + "'");
}

Relation Frame::overline(std::size_t mi) const {
  const Relation& r = rels_.at(mi);
  std::size_t n = worlds_.size();
  Relation out(n, WorldSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r[y].is_subset_of(r[x])) out[x].set(y);
  return out;
}

Frame Frame::with_relation(std::size_t mi, Relation r) const {
  std::vector<Relation> rels = rels_;
  rels.at(mi) = std::move(r);
  return Frame(sig_, worlds_, std::move(rels));
}

Frame Frame::overline_frame() const {
  std::vector<Relation> rels;
  rels.reserve(rels_.size());
  for (std::size_t mi = 0; mi < rels_.size(); ++mi) rels.push_back(overline(mi));
  return Frame(sig_, worlds_, std::move(rels));
}

Frame Frame::reflexive_closure() const {
  std::vector<Relation> rels = rels_;
  for (auto& r : rels)
    for (std::size_t x = 0; x < r.size(); ++x) r[x].set(x);
  return Frame(sig_, worlds_, std::move(rels));
}

static void close_transitively(Relation& r) {
  std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (r[x].test(k)) r[x] |= r[k];
}

Frame Frame::transitive_closure() const {
  std::vector<Relation> rels = rels_;
  for (auto& r : rels) close_transitively(r);
  return Frame(sig_, worlds_, std::move(rels));
}

WorldSet Frame::reachable_from(std::size_t x) const {
  WorldSet seen(worlds_.size());
  seen.set(x);
  WorldSet frontier = seen;
  while (frontier.any()) {
    WorldSet next(worlds_.size());
    for (auto w = frontier.find_first(); w != WorldSet::npos; w = frontier.find_next(w))
      for (const auto& r : rels_) next |= r[w];
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

Frame Frame::generated_subframe(const std::string& w) const {
  WorldSet keep = reachable_from(world_index(w));
  std::vector<std::size_t> old_of_new;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < worlds_.size(); ++i)
    if (keep.test(i)) {
      old_of_new.push_back(i);
      names.push_back(worlds_[i]);
    }
  std::size_t n = old_of_new.size();
  std::vector<Relation> rels(sig_.size(), Relation(n, WorldSet(n)));
  for (std::size_t mi = 0; mi < sig_.size(); ++mi)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (rels_[mi][old_of_new[x]].test(old_of_new[y])) rels[mi][x].set(y);
  return Frame(sig_, std::move(names), std::move(rels));
}

WorldSet Frame::compose(const std::vector<std::string>& mods, const std::string& x) const {
  WorldSet cur(worlds_.size());
  cur.set(world_index(x));
  for (const auto& m : mods) {
    const Relation& r = rels_.at(sig_.index(m));
    WorldSet next(worlds_.size());
    for (auto w = cur.find_first(); w != WorldSet::npos; w = cur.find_next(w)) next |= r[w];
    cur = std::move(next);
  }
  return cur;
}

Relation identity_relation(std::size_t n) {
  Relation r(n, WorldSet(n));
  for (std::size_t i = 0; i < n; ++i) r[i].set(i);
  return r;
}

Relation compose_relations(const Relation& a, const Relation& b) {
  std::size_t n = a.size();
  Relation out(n, WorldSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (auto w = a[x].find_first(); w != WorldSet::npos; w = a[x].find_next(w))
      out[x] |= b[w];
  return out;
}

Relation nfold_compose(const Relation& r, unsigned n) {
  Relation out = identity_relation(r.size());
  for (unsigned i = 0; i < n; ++i) out = compose_relations(out, r);
  return out;
}

bool is_reflexive(const Relation& r) {
  for (std::size_t x = 0; x < r.size(); ++x)
    if (!r[x].test(x)) return false;
  return true;
}

bool is_transitive(const Relation& r) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (auto y = r[x].find_first(); y != WorldSet::npos; y = r[x].find_next(y))
      if (!r[y].is_subset_of(r[x])) return false;
  return true;
}

bool is_symmetric(const Relation& r) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = x + 1; y < r.size(); ++y)
      if (r[x].test(y) != r[y].test(x)) return false;
  return true;
}

bool relation_subset(const Relation& a, const Relation& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!a[x].is_subset_of(b[x])) return false;
  return true;
}

std::vector<WorldSet> unrelated_graph(const Relation& r) {
  std::size_t n = r.size();
  std::vector<WorldSet> adj(n, WorldSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (!r[x].test(y) && !r[y].test(x)) {
        adj[x].set(y);
        adj[y].set(x);
      }
  return adj;
}

std::vector<WorldSet> incomparability_graph(const Relation& r) {
  std::size_t n = r.size();
  std::vector<WorldSet> adj(n, WorldSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (!r[x].is_subset_of(r[y]) && !r[y].is_subset_of(r[x])) {
        adj[x].set(y);
        adj[y].set(x);
      }
  return adj;
}

static void clique_extend(const std::vector<WorldSet>& adj, WorldSet cand,
                          std::size_t cur, std::size_t& best) {
  if (cur > best) best = cur;
  while (cand.any()) {
    if (cur + cand.count() <= best) return;
    auto v = cand.find_first();
    cand.reset(v);
    clique_extend(adj, cand & adj[v], cur + 1, best);
  }
}

std::size_t max_clique_size(const std::vector<WorldSet>& adj, const WorldSet& members) {
  std::size_t best = 0;
  clique_extend(adj, members, 0, best);
  return best;
}

static bool clique_dfs(const std::vector<WorldSet>& adj, const WorldSet& cand,
                       std::size_t need, std::vector<std::size_t>& picked) {
  if (need == 0) return true;
  if (cand.count() < need) return false;
  for (auto v = cand.find_first(); v != WorldSet::npos; v = cand.find_next(v)) {
    picked.push_back(v);
    WorldSet rest = cand & adj[v];
    // keep indices ascending so the first hit is lexicographically least
    for (auto w = rest.find_first(); w != WorldSet::npos && w <= v; w = rest.find_next(w))
      rest.reset(w);
    if (clique_dfs(adj, rest, need - 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

std::optional<std::vector<std::size_t>> first_clique_of_size(
    const std::vector<WorldSet>& adj, const WorldSet& members, std::size_t k) {
  std::vector<std::size_t> picked;
  if (k == 0) return picked;
  if (clique_dfs(adj, members, k, picked)) return picked;
  return std::nullopt;
}

std::size_t antichain_width(const Frame& f, std::size_t mi, const WorldSet& s) {
  return max_clique_size(unrelated_graph(f.relation(mi)), s);
}

std::size_t antichain_width(const Frame& f, const std::string& m, const WorldSet& s) {
  return antichain_width(f, f.modality_index(m), s);
}

std::size_t achronal_width(const Frame& f, std::size_t mi, const WorldSet& s) {
  return max_clique_size(incomparability_graph(f.relation(mi)), s);
}

std::size_t achronal_width(const Frame& f, const std::string& m, const WorldSet& s) {
  return achronal_width(f, f.modality_index(m), s);
}

bool isomorphic(const Frame& a, const Frame& b) {
  if (!(a.sig() == b.sig())) return false;
  std::size_t n = a.world_count();
  if (n != b.world_count()) return false;
  if (n > 8) fail(ErrorCode::Param, "isomorphism search capped at 8 worlds");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t mi = 0; ok && mi < a.sig().size(); ++mi)
      for (std::size_t x = 0; ok && x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (a.edge(mi, x, y) != b.edge(mi, perm[x], perm[y])) {
            ok = false;
            break;
          }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace achron
