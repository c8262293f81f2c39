#include "achron/corpus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "achron/correspondents.hpp"

namespace achron {

namespace {

Signature mono() { return Signature({"d"}); }

std::string num(long long v) { return std::to_string(v); }

void require(bool ok, const char* msg) {
  if (!ok) fail(ErrorCode::Param, msg);
}

Frame dj_frame(int j) {
  require(j >= 0, "Dj needs j >= 0");
  std::vector<std::string> worlds;
  worlds.push_back(num(j + 1));
  std::string prime = num(j) + "prime";
  std::string prime2 = num(j) + "prime2";
  worlds.push_back(prime);
  worlds.push_back(prime2);
  for (int i = j - 1; i >= 0; --i) worlds.push_back(num(i));

  EdgeList e;
  e.emplace_back(num(j + 1), prime);
  e.emplace_back(num(j + 1), prime2);
  if (j >= 1) {
    e.emplace_back(prime, num(j - 1));
    e.emplace_back(prime2, num(j - 1));
    for (int i = j - 1; i >= 1; --i) e.emplace_back(num(i), num(i - 1));
  }
  return Frame(mono(), std::move(worlds), {{"d", std::move(e)}});
}

Frame gjn_frame(int j, int N) {
  require(j >= 1 && N >= 1, "GjN needs j >= 1 and N >= 1");
  std::vector<std::string> worlds;
  worlds.push_back("0");
  for (int l = 0; l < N; ++l) worlds.push_back("a" + num(l));
  for (int k = 1; k <= j; ++k) worlds.push_back(num(k));

  EdgeList e;
  for (int k = 0; k <= j; ++k)
    for (int m = k + 1; m <= j; ++m) e.emplace_back(num(k), num(m));
  for (int l = 0; l < N; ++l) {
    e.emplace_back("0", "a" + num(l));
    for (int m = 1; m <= j; ++m) e.emplace_back("a" + num(l), num(m));
  }
  return Frame(mono(), std::move(worlds), {{"d", std::move(e)}});
}

Frame ejn_frame(int j, int n) {
  require(j >= 1 && n >= 1, "Ejn needs j >= 1 and n >= 1");
  std::vector<std::string> worlds;
  worlds.push_back(num(j + 1));
  for (int i = 0; i <= n; ++i) worlds.push_back("r" + num(i));
  std::string prime = num(j) + "prime";
  std::string prime2 = num(j) + "prime2";
  worlds.push_back(prime);
  worlds.push_back(prime2);
  for (int i = j - 1; i >= 0; --i) worlds.push_back(num(i));

  EdgeList e;
  for (int i = 0; i <= n; ++i) {
    std::string r = "r" + num(i);
    e.emplace_back(num(j + 1), r);
    e.emplace_back(r, r);
    e.emplace_back(r, prime);
    e.emplace_back(r, prime2);
  }
  e.emplace_back(prime, num(j - 1));
  e.emplace_back(prime2, num(j - 1));
  for (int i = j - 1; i >= 1; --i) e.emplace_back(num(i), num(i - 1));
  return Frame(mono(), std::move(worlds), {{"d", std::move(e)}}).transitive_closure();
}

Frame lawnrake_frame(int N) {
  require(N >= 1, "LawnRake needs N >= 1");
  std::vector<std::string> worlds{"a"};
  EdgeList e;
  for (int i = 0; i < N; ++i) {
    std::string x = "x" + num(i);
    worlds.push_back(x);
    e.emplace_back("a", x);
    e.emplace_back(x, x);
  }
  return Frame(mono(), std::move(worlds), {{"d", std::move(e)}});
}

// Finite cut of the two-column frame: points with index out of range are
// dropped and every surviving point keeps the in-range part of its future.
Frame fine_frame(int N) {
  require(N >= 1, "FineN needs N >= 1");
  std::vector<std::string> worlds;
  for (int i = 0; i <= N + 1; ++i) worlds.push_back("b" + num(i));
  for (int i = 0; i <= N + 1; ++i) worlds.push_back("c" + num(i));
  for (int i = 0; i < N; ++i) worlds.push_back("a" + num(i));
  for (int i = 0; i < N; ++i) worlds.push_back("d" + num(i));

  EdgeList e;
  auto b = [&](int i) { return "b" + num(i); };
  auto c = [&](int i) { return "c" + num(i); };
  e.emplace_back(b(1), b(0));
  e.emplace_back(c(1), c(0));
  for (int m = 0; m + 2 <= N + 1; ++m) {
    for (int i = 0; i <= m + 1; ++i) e.emplace_back(b(m + 2), b(i));
    for (int i = 0; i <= m; ++i) e.emplace_back(b(m + 2), c(i));
    for (int i = 0; i <= m; ++i) e.emplace_back(c(m + 2), b(i));
    for (int i = 0; i <= m + 1; ++i) e.emplace_back(c(m + 2), c(i));
  }
  for (int m = 0; m < N; ++m) {
    std::string am = "a" + num(m);
    for (int i = 0; i <= m + 1; ++i) {
      e.emplace_back(am, b(i));
      e.emplace_back(am, c(i));
    }
  }
  for (int m = 0; m < N; ++m) {
    std::string dm = "d" + num(m);
    for (int k = m + 1; k < N; ++k) e.emplace_back(dm, "d" + num(k));
    for (int k = m; k < N; ++k) {
      e.emplace_back(dm, "a" + num(k));
      for (int i = 0; i <= k + 1; ++i) {
        e.emplace_back(dm, b(i));
        e.emplace_back(dm, c(i));
      }
    }
  }
  return Frame(mono(), std::move(worlds), {{"d", std::move(e)}});
}

std::vector<std::string> row_worlds(int N) {
  std::vector<std::string> worlds{"a"};
  for (int i = 0; i < N; ++i) worlds.push_back("u" + num(i));
  for (int i = 0; i < N; ++i) worlds.push_back("v" + num(i));
  return worlds;
}

Frame xuchain_frame(int N) {
  require(N >= 1, "XuChainN needs N >= 1");
  EdgeList e;
  for (int i = 0; i < N; ++i) {
    e.emplace_back("a", "u" + num(i));
    e.emplace_back("a", "v" + num(i));
    for (int j = 0; j <= i; ++j) {
      e.emplace_back("u" + num(i), "v" + num(j));
      e.emplace_back("v" + num(i), "v" + num(j));
    }
  }
  return Frame(mono(), row_worlds(N), {{"d", std::move(e)}});
}

Frame sternberg_frame(int N) {
  require(N >= 1, "SternbergN needs N >= 1");
  EdgeList e;
  for (int i = 0; i < N; ++i) {
    e.emplace_back("a", "u" + num(i));
    for (int j = 0; j <= i; ++j) e.emplace_back("u" + num(i), "v" + num(j));
    e.emplace_back("v" + num(i), "v" + num(i));
  }
  return Frame(mono(), row_worlds(N), {{"d", std::move(e)}});
}

Formula dia_pow(const std::string& m, int n, Formula f) {
  for (int i = 0; i < n; ++i) f = dia(m, std::move(f));
  return f;
}

Formula disj_all(const std::vector<Formula>& parts) {
  require(!parts.empty(), "empty disjunction");
  Formula out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = disj(std::move(out), parts[i]);
  return out;
}

Formula conj_all(const std::vector<Formula>& parts) {
  require(!parts.empty(), "empty conjunction");
  Formula out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = conj(std::move(out), parts[i]);
  return out;
}

}  // namespace

Frame gen_frame(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Dj: return dj_frame(spec.j);
    case Family::GjN: return gjn_frame(spec.j, spec.N);
    case Family::Ejn: return ejn_frame(spec.j, spec.n);
    case Family::LawnRake: return lawnrake_frame(spec.N);
    case Family::FineN: return fine_frame(spec.N);
    case Family::XuChainN: return xuchain_frame(spec.N);
    case Family::SternbergN: return sternberg_frame(spec.N);
  }
  fail(ErrorCode::Param, "unknown family");
}

Model fine_model(int N) {
  Frame f = fine_frame(N);
  WorldSet even = f.empty_set(), odd = f.empty_set();
  for (int i = 0; i < N; ++i)
    (i % 2 == 0 ? even : odd).set(f.world_index("d" + num(i)));
  Valuation val;
  val.emplace(0, std::move(even));
  val.emplace(1, std::move(odd));
  return Model{std::move(f), std::move(val)};
}

Formula alpha(int i, const std::string& dia_m) {
  require(i >= 0, "alpha needs i >= 0");
  return conj(dia_pow(dia_m, i, top()), neg(dia_pow(dia_m, i + 1, top())));
}

Formula phi(int i, const std::string& dia_m) {
  Formula a = alpha(i, dia_m);
  return disj(box(dia_m, implies(a, atom(0))), box(dia_m, implies(a, neg(atom(0)))));
}

Formula five(int n, const std::string& dia_m) {
  require(n >= 0, "five needs n >= 0");
  return implies(dia_pow(dia_m, n, atom(0)), box(dia_m, dia(dia_m, atom(0))));
}

Formula u_axiom(int n, const std::string& dia_m, const std::string& bdia) {
  require(n >= 1, "u_axiom needs n >= 1");
  std::vector<Formula> outer;
  for (int i = 0; i <= n; ++i) {
    std::vector<Formula> rest;
    for (int j = 0; j <= n; ++j)
      if (j != i) rest.push_back(box(bdia, atom(j)));
    outer.push_back(box(dia_m, implies(box(bdia, atom(i)), disj_all(rest))));
  }
  return disj_all(outer);
}

Formula u_axiom_alt(int n, const std::string& dia_m, const std::string& bdia) {
  require(n >= 1, "u_axiom_alt needs n >= 1");
  std::vector<Formula> ante;
  for (int i = 0; i <= n; ++i)
    ante.push_back(dia(dia_m, conj(atom(n + 1 + i), box(bdia, atom(i)))));
  std::vector<Formula> cons;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) cons.push_back(dia(dia_m, conj(atom(n + 1 + i), box(bdia, atom(j)))));
  return implies(conj_all(ante), disj_all(cons));
}

Formula i_axiom(int n, const std::string& dia_m) {
  require(n >= 1, "i_axiom needs n >= 1");
  std::vector<Formula> ante;
  for (int i = 0; i <= n; ++i) ante.push_back(dia(dia_m, atom(i)));
  std::vector<Formula> cons;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j)
        cons.push_back(
            dia(dia_m, conj(atom(i), disj(atom(j), dia(dia_m, atom(j))))));
  return implies(conj_all(ante), disj_all(cons));
}

namespace {

Formula near_constant_split(Formula base, int fresh, int i, const std::string& dia_m) {
  Formula a = alpha(i, dia_m);
  return disj(disj(std::move(base), box(dia_m, implies(a, atom(fresh)))),
              box(dia_m, implies(a, neg(atom(fresh)))));
}

}  // namespace

Formula psi(int i, int n, const std::string& dia_m) {
  return near_constant_split(i_axiom(n, dia_m), n + 1, i, dia_m);
}

Formula xi(int i, const std::string& dia_m) {
  return near_constant_split(five(2, dia_m), 1, i, dia_m);
}

Formula zeta(int i, int n, const std::string& dia_m, const std::string& bdia) {
  return near_constant_split(u_axiom(n, dia_m, bdia), n + 1, i, dia_m);
}

Formula t_axiom(const std::string& m) { return implies(atom(0), dia(m, atom(0))); }

Formula four_axiom(const std::string& m) {
  return implies(dia(m, dia(m, atom(0))), dia(m, atom(0)));
}

Formula m_axiom(const std::string& m) {
  return implies(box(m, dia(m, atom(0))), dia(m, box(m, atom(0))));
}

Formula q_axiom(const std::string& m) {
  return implies(conj(dia(m, atom(0)), box(m, implies(atom(0), box(m, atom(0))))),
                 atom(0));
}

Formula grz_axiom(const std::string& m) {
  return implies(
      box(m, implies(box(m, implies(atom(0), box(m, atom(0)))), atom(0))),
      atom(0));
}

Formula h_formula(const std::string& m) {
  Formula s = atom(0), t = atom(1);
  Formula inner3 = conj(conj(neg(s), neg(t)), dia(m, s));
  Formula inner2 = conj(conj(neg(s), t), dia(m, inner3));
  return neg(conj(s, box(m, implies(s, dia(m, inner2)))));
}

Formula h_circ(const std::string& m) { return circ_translate(h_formula(m)); }

namespace {

std::string world_set_names(const Frame& f, const WorldSet& s) {
  if (s.none()) return "-";
  std::string out;
  for (auto w = s.find_first(); w != WorldSet::npos; w = s.find_next(w)) {
    if (!out.empty()) out += ',';
    out += f.world_name(w);
  }
  return out;
}

const char* vstr(bool valid) { return valid ? "valid" : "invalid"; }
const char* hstr(const ConditionReport& r) { return r.holds ? "holds" : "fails"; }

struct LedgerBuilder {
  Ledger led;
  std::uint64_t budget;

  void row(std::string id, std::string source, std::string expected,
           const std::function<std::string()>& compute) {
    ClaimRow r{std::move(id), std::move(source), std::move(expected), "", false};
    try {
      r.computed = compute();
    } catch (const Error& e) {
      r.computed = e.code_name();
    }
    r.pass = r.computed == r.expected;
    led.rows.push_back(std::move(r));
  }
};

std::vector<AtomSubst> h_substitutions() {
  std::vector<AtomSubst> subs;
  subs.push_back({});
  subs.push_back({{0, atom(1)}, {1, atom(0)}});
  subs.push_back({{0, dia("d", atom(0))}, {1, conj(atom(0), atom(1))}});
  subs.push_back({{0, disj(atom(0), atom(1))}, {1, neg(atom(0))}});
  subs.push_back({{0, box("d", atom(0))}, {1, dia("d", atom(1))}});
  return subs;
}

void dj_claims(LedgerBuilder& b) {
  for (int j = 0; j <= 3; ++j) {
    Frame f = dj_frame(j);
    b.row("d" + num(j) + "-validates-52", "S4.2", "valid",
          [&] { return vstr(valid_on_frame(f, five(2), b.budget).valid); });
    for (int i = 0; i <= 3; ++i) {
      std::string id = "d" + num(j) + (i == j ? "-refutes-phi" : "-validates-phi") + num(i);
      b.row(std::move(id), "S4.2", vstr(i != j),
            [&] { return vstr(valid_on_frame(f, phi(i), b.budget).valid); });
    }
    Model m{f, {}};
    for (int i = 0; i <= j + 2; ++i) {
      std::string expected;
      if (i < j) expected = num(i);
      else if (i == j) expected = num(j) + "prime," + num(j) + "prime2";
      else if (i == j + 1) expected = num(j + 1);
      else expected = "-";
      b.row("d" + num(j) + "-alpha" + num(i) + "-worlds", "S4.2", expected,
            [&] { return world_set_names(f, truth_set(m, alpha(i))); });
    }
  }
}

void lawnrake_claims(LedgerBuilder& b) {
  for (int n = 1; n <= 3; ++n) {
    Frame f = lawnrake_frame(n + 1);
    std::string base = "lawnrake" + num(n + 1);
    b.row(base + "-u" + num(n + 1), "S5.3", "holds",
          [&] { return hstr(check_Un(f, n + 1, "d", "d")); });
    b.row(base + "-u" + num(n), "S5.3", "fails",
          [&] { return hstr(check_Un(f, n, "d", "d")); });
    b.row(base + "-i" + num(n + 1), "S5.3", "holds",
          [&] { return hstr(check_In(f, n + 1, "d")); });
  }
}

void ejn_claims(LedgerBuilder& b) {
  for (int j = 1; j <= 2; ++j)
    for (int n = 1; n <= 2; ++n) {
      Frame f = ejn_frame(j, n);
      std::string base = "e" + num(j) + "-" + num(n);
      b.row(base + "-u" + num(n + 1), "S5.6", "holds",
            [&] { return hstr(check_Un(f, n + 1, "d", "d")); });
      b.row(base + "-u" + num(n), "S5.6", "fails",
            [&] { return hstr(check_Un(f, n, "d", "d")); });
      b.row(base + "-transitive", "S5.6", "true",
            [&] { return frame_props(f, "d").transitive ? "true" : "false"; });
      Model m{f, {}};
      for (int i = 0; i <= 4; ++i)
        b.row(base + "-alpha" + num(i) + "-at-r", "S5.6", "-", [&] {
          WorldSet hits = f.empty_set();
          WorldSet truth = truth_set(m, alpha(i));
          for (int k = 0; k <= n; ++k) {
            std::size_t r = f.world_index("r" + num(k));
            if (truth.test(r)) hits.set(r);
          }
          return world_set_names(f, hits);
        });
    }
}

void gjn_claims(LedgerBuilder& b) {
  for (int j = 1; j <= 2; ++j) {
    for (int N = 2; N <= 4; ++N) {
      Frame f = gjn_frame(j, N);
      b.row("g" + num(j) + "-" + num(N) + "-chain", "S5.6", "holds",
            [&] { return hstr(check_chain(f, "d")); });
    }
    for (int n = 1; n <= 2; ++n)
      for (int N = n + 1; N <= n + 2; ++N) {
        Frame f = gjn_frame(j, N);
        std::string base = "g" + num(j) + "-" + num(N);
        b.row(base + "-i" + num(n) + "-at0", "S5.6", "invalid",
              [&] { return vstr(valid_at_point(f, "0", i_axiom(n), b.budget).valid); });
      }
    Frame f3 = gjn_frame(j, 3);
    for (int i = 0; i <= 4; ++i)
      b.row("g" + num(j) + "-3-psi" + num(i) + "-n1", "S5.6", vstr(i != j),
            [&] { return vstr(valid_on_frame(f3, psi(i, 1), b.budget).valid); });
  }
}

void fine_claims(LedgerBuilder& b) {
  for (int N = 3; N <= 5; ++N) {
    Frame f = fine_frame(N);
    std::string base = "fine" + num(N);
    b.row(base + "-u2", "S5.8", "holds",
          [&] { return hstr(check_Un(f, 2, "d", "d")); });
    b.row(base + "-u1-pair", "S5.8", "x=b3 y0=b1 y1=c1",
          [&] { return check_Un(f, 1, "d", "d").describe(); });
    b.row(base + "-no-achronal-triple", "S6", "2",
          [&] { return num(achronal_width(f, "d", f.all_worlds())); });
    b.row(base + "-transitive", "S5.8", "true",
          [&] { return frame_props(f, "d").transitive ? "true" : "false"; });
    b.row(base + "-irreflexive", "S5.8", "true", [&] {
      for (std::size_t w = 0; w < f.world_count(); ++w)
        if (f.edge(0, w, w)) return "false";
      return "true";
    });
    Model m = fine_model(N);
    auto subs = h_substitutions();
    for (std::size_t k = 0; k < subs.size(); ++k)
      b.row(base + "-hcirc-sub" + num(k), "S6", "verified",
            [&] { return verifies(m, substitute(h_circ(), subs[k])) ? "verified" : "refuted"; });
  }
}

void xuchain_claims(LedgerBuilder& b) {
  for (int n = 1; n <= 3; ++n) {
    int N = n + 1;
    Frame f = xuchain_frame(N);
    std::string base = "xuchain" + num(N);
    b.row(base + "-chain", "S5.7", "holds",
          [&] { return hstr(check_chain(f, "d")); });
    b.row(base + "-w" + num(n) + "star", "S5.7", "fails",
          [&] { return hstr(check_widstar(f, n, "d")); });
  }
}

void sternberg_claims(LedgerBuilder& b) {
  for (int N = 3; N <= 4; ++N) {
    Frame f = sternberg_frame(N);
    std::string base = "sternberg" + num(N);
    b.row(base + "-dd-width", "S7.1", num(N), [&] {
      return num(achronal_width(f, "d", f.compose({"d", "d"}, "a")));
    });
    b.row(base + "-d-width", "S7.1", "1", [&] {
      return num(achronal_width(f, "d", f.compose({"d"}, "a")));
    });
  }
}

}  // namespace

bool Ledger::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

const ClaimRow* Ledger::find(const std::string& id) const {
  for (const auto& r : rows)
    if (r.id == id) return &r;
  return nullptr;
}

Ledger reproduce_claims(std::uint64_t budget) {
  LedgerBuilder b;
  b.budget = budget;
  dj_claims(b);
  lawnrake_claims(b);
  ejn_claims(b);
  gjn_claims(b);
  fine_claims(b);
  xuchain_claims(b);
  sternberg_claims(b);
  std::sort(b.led.rows.begin(), b.led.rows.end(),
            [](const ClaimRow& x, const ClaimRow& y) { return x.id < y.id; });
  return std::move(b.led);
}

std::string ledger_tsv(const Ledger& ledger) {
  std::ostringstream out;
  out << "claim_id\tpaper_ref\texpected\tcomputed\tstatus\n";
  for (const auto& r : ledger.rows)
    out << r.id << '\t' << r.source << '\t' << r.expected << '\t' << r.computed << '\t'
        << (r.pass ? "ok" : "FAIL") << '\n';
  return out.str();
}

std::string ledger_json(const Ledger& ledger) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < ledger.rows.size(); ++i) {
    const auto& r = ledger.rows[i];
    out << "  {\"claim_id\": \"" << r.id << "\", \"paper_ref\": \"" << r.source
        << "\", \"expected\": \"" << r.expected << "\", \"computed\": \"" << r.computed
        << "\", \"status\": \"" << (r.pass ? "ok" : "FAIL") << "\"}"
        << (i + 1 < ledger.rows.size() ? "," : "") << "\n";
  }
  out << "]\n";
  return out.str();
}

}  // namespace achron
