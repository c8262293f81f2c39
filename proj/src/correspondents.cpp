#include "achron/correspondents.hpp"

namespace achron {

namespace {

ConditionReport pass() { return {true, {}}; }

void require_n(unsigned n, const char* who) {
  if (n < 1) fail(ErrorCode::Param, std::string(who) + " needs n >= 1");
}

ConditionReport tuple_failure(const Frame& f, std::size_t x,
                              const std::vector<std::size_t>& ys) {
  ConditionReport r{false, {}};
  r.counterexample.emplace_back("x", f.world_name(x));
  for (std::size_t i = 0; i < ys.size(); ++i)
    r.counterexample.emplace_back("y" + std::to_string(i), f.world_name(ys[i]));
  return r;
}

// Width-style condition shared by check_Un and check_In: every future of
// base has clique number at most n in adj, else bind x and the first
// offending tuple.
ConditionReport width_condition(const Frame& f, const Relation& base,
                                const std::vector<WorldSet>& adj, unsigned n) {
  for (std::size_t x = 0; x < f.world_count(); ++x) {
    const WorldSet& s = base[x];
    if (max_clique_size(adj, s) <= n) continue;
    auto tuple = first_clique_of_size(adj, s, n + 1);
    return tuple_failure(f, x, *tuple);
  }
  return pass();
}

}  // namespace

std::string ConditionReport::describe() const {
  std::string out;
  for (const auto& [name, value] : counterexample) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += value;
  }
  return out;
}

ConditionReport check_5n(const Frame& f, unsigned n, const std::string& m) {
  const Relation& r = f.relation(m);
  Relation rn = nfold_compose(r, n);
  for (std::size_t x = 0; x < f.world_count(); ++x)
    for (auto y = r[x].find_first(); y != WorldSet::npos; y = r[x].find_next(y))
      for (auto z = rn[x].find_first(); z != WorldSet::npos; z = rn[x].find_next(z))
        if (!r[y].test(z))
          return {false,
                  {{"x", f.world_name(x)}, {"y", f.world_name(y)}, {"z", f.world_name(z)}}};
  return pass();
}

ConditionReport check_e52_upto(const Frame& f, const std::string& m, unsigned max_n) {
  const Relation& r = f.relation(m);
  Relation rn = identity_relation(f.world_count());
  for (unsigned n = 0; n <= max_n; ++n) {
    Relation rn1 = compose_relations(rn, r);
    for (std::size_t x = 0; x < f.world_count(); ++x)
      for (auto y = rn[x].find_first(); y != WorldSet::npos; y = rn[x].find_next(y))
        for (auto z = rn1[x].find_first(); z != WorldSet::npos; z = rn1[x].find_next(z))
          if (!r[y].test(z))
            return {false,
                    {{"n", std::to_string(n)},
                     {"x", f.world_name(x)},
                     {"y", f.world_name(y)},
                     {"z", f.world_name(z)}}};
    rn = std::move(rn1);
  }
  return pass();
}

ConditionReport check_Un(const Frame& f, unsigned n, const std::string& dia,
                         const std::string& bdia) {
  require_n(n, "check_Un");
  const Relation& base = f.relation(dia);
  auto adj = incomparability_graph(f.relation(bdia));
  return width_condition(f, base, adj, n);
}

ConditionReport check_Un_literal(const Frame& f, unsigned n, const std::string& dia,
                                 const std::string& bdia) {
  require_n(n, "check_Un_literal");
  const Relation& rd = f.relation(dia);
  const Relation& rb = f.relation(bdia);
  std::size_t count = f.world_count();
  // Tuples (y0..yn) over future(dia, x), odometer order; the condition asks
  // for some pair i != j with future(yi) included in future(yj).
  std::vector<std::size_t> tup(n + 1);
  for (std::size_t x = 0; x < count; ++x) {
    std::vector<std::size_t> future;
    for (auto w = rd[x].find_first(); w != WorldSet::npos; w = rd[x].find_next(w))
      future.push_back(w);
    if (future.empty()) continue;
    std::vector<std::size_t> idx(n + 1, 0);
    while (true) {
      for (std::size_t i = 0; i <= n; ++i) tup[i] = future[idx[i]];
      bool some_pair = false;
      for (std::size_t i = 0; i <= n && !some_pair; ++i)
        for (std::size_t j = 0; j <= n; ++j)
          if (i != j && rb[tup[i]].is_subset_of(rb[tup[j]])) {
            some_pair = true;
            break;
          }
      if (!some_pair) return tuple_failure(f, x, tup);
      std::size_t k = n + 1;
      while (k > 0) {
        if (++idx[k - 1] < future.size()) break;
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return pass();
}

ConditionReport check_In(const Frame& f, unsigned n, const std::string& m) {
  require_n(n, "check_In");
  const Relation& r = f.relation(m);
  return width_condition(f, r, unrelated_graph(r), n);
}

ConditionReport check_chain(const Frame& f, const std::string& m) {
  const Relation& r = f.relation(m);
  for (std::size_t x = 0; x < f.world_count(); ++x)
    for (std::size_t y = x + 1; y < f.world_count(); ++y)
      if (!r[x].is_subset_of(r[y]) && !r[y].is_subset_of(r[x]))
        return {false, {{"x", f.world_name(x)}, {"y", f.world_name(y)}}};
  return pass();
}

namespace {

// Lexicographic successor of a k-combination of {0..total-1}; false when the
// last combination was reached.
bool next_combination(std::vector<std::size_t>& pick, std::size_t total) {
  std::size_t k = pick.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (pick[i] < total - k + i) {
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

ConditionReport check_widstar(const Frame& f, unsigned n, const std::string& m) {
  require_n(n, "check_widstar");
  const Relation& r = f.relation(m);
  std::size_t count = f.world_count();

  // Strict futures: successors that do not see back.
  Relation strict(count, WorldSet(count));
  for (std::size_t y = 0; y < count; ++y)
    for (auto z = r[y].find_first(); z != WorldSet::npos; z = r[y].find_next(z))
      if (!r[z].test(y)) strict[y].set(z);

  auto adj = unrelated_graph(r);
  // Antichains of exactly n+1 points suffice: a bad larger antichain stays
  // bad after shrinking to n+1 points.
  std::vector<std::size_t> members;
  std::vector<std::size_t> pick(n + 1);
  for (std::size_t x = 0; x < count; ++x) {
    members.clear();
    for (auto w = r[x].find_first(); w != WorldSet::npos; w = r[x].find_next(w))
      members.push_back(w);
    if (members.size() < n + 1) continue;

    for (std::size_t i = 0; i <= n; ++i) pick[i] = i;
    do {
      bool antichain = true;
      for (std::size_t i = 0; i <= n && antichain; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
          if (!adj[members[pick[i]]].test(members[pick[j]])) {
            antichain = false;
            break;
          }
      if (!antichain) continue;
      bool twin = false;
      for (std::size_t i = 0; i <= n && !twin; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
          if (strict[members[pick[i]]] == strict[members[pick[j]]]) {
            twin = true;
            break;
          }
      if (!twin) {
        std::vector<std::size_t> tuple;
        for (std::size_t i = 0; i <= n; ++i) tuple.push_back(members[pick[i]]);
        return tuple_failure(f, x, tuple);
      }
    } while (next_combination(pick, members.size()));
  }
  return pass();
}

FrameProps frame_props(const Frame& f, const std::string& m) {
  const Relation& r = f.relation(m);
  return {is_reflexive(r), is_transitive(r), is_symmetric(r)};
}

const char* to_string(SegerbergClass c) {
  switch (c) {
    case SegerbergClass::SingleIrreflexive: return "SingleIrreflexive";
    case SegerbergClass::ReflexiveCofinal: return "ReflexiveCofinal";
    default: return "Neither";
  }
}

SegerbergClass segerberg_classify(const Frame& f, const std::string& w) {
  if (f.sig().size() != 1)
    fail(ErrorCode::Param, "classification needs a single-modality frame");
  std::size_t root = f.world_index(w);
  if (!f.reachable_from(root).all())
    fail(ErrorCode::NotPointGenerated,
         "frame is not generated by world '" + w + "'");
  const Relation& r = f.relation(std::size_t(0));
  if (f.world_count() == 1 && !r[0].test(0)) return SegerbergClass::SingleIrreflexive;
  for (std::size_t x = 0; x < f.world_count(); ++x) {
    bool ok = false;
    for (auto y = r[x].find_first(); y != WorldSet::npos; y = r[x].find_next(y))
      if (r[y].test(y)) {
        ok = true;
        break;
      }
    if (!ok) return SegerbergClass::Neither;
  }
  return SegerbergClass::ReflexiveCofinal;
}

}  // namespace achron
