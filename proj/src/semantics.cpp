#include "achron/semantics.hpp"

#include <atomic>
#include <vector>

namespace achron {

namespace {

// Formulas are flattened once per (formula, frame) pair into a postorder
// program over world-set registers; the valuation sweep then reruns the
// program with fresh atom registers only.
struct Instr {
  FKind kind;
  int a = -1, b = -1;   // operand registers
  int slot = -1;        // Atom: index into the sorted atom list
  std::size_t mod = 0;  // Dia: modality index in the frame signature
};

struct Compiled {
  std::vector<Instr> prog;
  std::vector<int> atoms;  // sorted atom indices of the formula
};

int compile_node(const Formula& f, const Frame& fr, Compiled& out) {
  Instr ins{f.kind()};
  switch (f.kind()) {
    case FKind::Top:
      break;
    case FKind::Atom: {
      auto it = std::lower_bound(out.atoms.begin(), out.atoms.end(), f.atom_index());
      ins.slot = static_cast<int>(it - out.atoms.begin());
      break;
    }
    case FKind::Not:
      ins.a = compile_node(f.child(), fr, out);
      break;
    case FKind::Or:
      ins.a = compile_node(f.left(), fr, out);
      ins.b = compile_node(f.right(), fr, out);
      break;
    case FKind::Dia:
      ins.mod = fr.modality_index(f.modality());
      ins.a = compile_node(f.child(), fr, out);
      break;
  }
  out.prog.push_back(ins);
  return static_cast<int>(out.prog.size() - 1);
}

Compiled compile(const Formula& f, const Frame& fr) {
  Compiled out;
  auto atoms = atoms_of(f);
  out.atoms.assign(atoms.begin(), atoms.end());
  compile_node(f, fr, out);
  return out;
}

class Evaluator {
public:
  Evaluator(const Compiled& c, const Frame& fr)
      : c_(c), fr_(fr), n_(fr.world_count()), regs_(c.prog.size(), WorldSet(n_)) {}

  // slots[i] is the world set of the i-th atom of the compiled formula.
  const WorldSet& eval(const std::vector<WorldSet>& slots) {
    for (std::size_t i = 0; i < c_.prog.size(); ++i) {
      const Instr& ins = c_.prog[i];
      switch (ins.kind) {
        case FKind::Top:
          regs_[i].set();
          break;
        case FKind::Atom:
          regs_[i] = slots[ins.slot];
          break;
        case FKind::Not:
          regs_[i] = regs_[ins.a];
          regs_[i].flip();
          break;
        case FKind::Or:
          regs_[i] = regs_[ins.a];
          regs_[i] |= regs_[ins.b];
          break;
        case FKind::Dia: {
          const Relation& r = fr_.relation(ins.mod);
          const WorldSet& s = regs_[ins.a];
          WorldSet& dst = regs_[i];
          dst.reset();
          for (std::size_t w = 0; w < n_; ++w)
            if (r[w].intersects(s)) dst.set(w);
          break;
        }
      }
    }
    return regs_.back();
  }

private:
  const Compiled& c_;
  const Frame& fr_;
  std::size_t n_;
  std::vector<WorldSet> regs_;
};

// Decode valuation index v into per-atom world sets.
void decode(std::uint64_t v, std::size_t n, std::vector<WorldSet>& slots) {
  for (std::size_t a = 0; a < slots.size(); ++a) {
    slots[a].reset();
    for (std::size_t w = 0; w < n; ++w)
      if ((v >> (a * n + w)) & 1) slots[a].set(w);
  }
}

Valuation to_valuation(const Compiled& c, const std::vector<WorldSet>& slots) {
  Valuation val;
  for (std::size_t a = 0; a < c.atoms.size(); ++a) val.emplace(c.atoms[a], slots[a]);
  return val;
}

std::uint64_t sweep_size(const Compiled& c, std::size_t worlds, std::uint64_t budget,
                         const char* what) {
  std::size_t bits = c.atoms.size() * worlds;
  if (bits >= 63 || (std::uint64_t(1) << bits) > budget)
    fail(ErrorCode::Budget, std::string(what) + " needs 2^" + std::to_string(bits) +
                                " valuations, over the budget of " + std::to_string(budget));
  return std::uint64_t(1) << bits;
}

// Shared by the validity entry points: find the least v in [0, total) whose
// valuation refutes the formula somewhere on `check`, or report validity.
template <typename Check>
ValidityVerdict sweep_serial(const Compiled& c, const Frame& fr, std::uint64_t total,
                             Check check) {
  Evaluator ev(c, fr);
  std::vector<WorldSet> slots(c.atoms.size(), WorldSet(fr.world_count()));
  for (std::uint64_t v = 0; v < total; ++v) {
    decode(v, fr.world_count(), slots);
    auto bad = check(ev.eval(slots));
    if (bad != WorldSet::npos) return {false, Witness{to_valuation(c, slots), bad}};
  }
  return {true, std::nullopt};
}

template <typename Check>
ValidityVerdict sweep(const Compiled& c, const Frame& fr, std::uint64_t total, Check check) {
#ifdef _OPENMP
  std::atomic<std::uint64_t> first{total};
#pragma omp parallel
  {
    Evaluator ev(c, fr);
    std::vector<WorldSet> slots(c.atoms.size(), WorldSet(fr.world_count()));
#pragma omp for schedule(dynamic, 1024)
    for (long long v = 0; v < static_cast<long long>(total); ++v) {
      std::uint64_t uv = static_cast<std::uint64_t>(v);
      if (uv >= first.load(std::memory_order_relaxed)) continue;
      decode(uv, fr.world_count(), slots);
      if (check(ev.eval(slots)) != WorldSet::npos) {
        std::uint64_t cur = first.load(std::memory_order_relaxed);
        while (uv < cur && !first.compare_exchange_weak(cur, uv)) {
        }
      }
    }
  }
  if (first.load() == total) return {true, std::nullopt};
  // Re-evaluate the winning valuation to rebuild the witness.
  Evaluator ev(c, fr);
  std::vector<WorldSet> slots(c.atoms.size(), WorldSet(fr.world_count()));
  decode(first.load(), fr.world_count(), slots);
  auto bad = check(ev.eval(slots));
  return {false, Witness{to_valuation(c, slots), bad}};
#else
  return sweep_serial(c, fr, total, check);
#endif
}

// Returns the least world where the formula fails, or npos.
std::size_t first_gap(const WorldSet& truth) {
  if (truth.all()) return WorldSet::npos;
  for (std::size_t w = 0; w < truth.size(); ++w)
    if (!truth.test(w)) return w;
  return WorldSet::npos;
}

}  // namespace

WorldSet truth_set(const Model& m, const Formula& f) {
  Compiled c = compile(f, m.frame);
  std::vector<WorldSet> slots(c.atoms.size(), WorldSet(m.frame.world_count()));
  for (std::size_t a = 0; a < c.atoms.size(); ++a) {
    auto it = m.val.find(c.atoms[a]);
    if (it != m.val.end()) slots[a] = it->second;
  }
  Evaluator ev(c, m.frame);
  return ev.eval(slots);
}

bool satisfies(const Model& m, std::size_t world, const Formula& f) {
  if (world >= m.frame.world_count()) fail(ErrorCode::UnknownWorld, "world index out of range");
  return truth_set(m, f).test(world);
}

bool satisfies(const Model& m, const std::string& world, const Formula& f) {
  return satisfies(m, m.frame.world_index(world), f);
}

bool verifies(const Model& m, const Formula& f) {
  return truth_set(m, f).all();
}

ValidityVerdict valid_on_frame(const Frame& f, const Formula& phi, std::uint64_t budget) {
  Compiled c = compile(phi, f);
  std::uint64_t total = sweep_size(c, f.world_count(), budget, "validity sweep");
  return sweep(c, f, total, first_gap);
}

ValidityVerdict valid_on_frame_serial(const Frame& f, const Formula& phi,
                                      std::uint64_t budget) {
  Compiled c = compile(phi, f);
  std::uint64_t total = sweep_size(c, f.world_count(), budget, "validity sweep");
  return sweep_serial(c, f, total, first_gap);
}

ValidityVerdict valid_at_point(const Frame& f, const std::string& world, const Formula& phi,
                               std::uint64_t budget) {
  std::size_t w = f.world_index(world);
  Compiled c = compile(phi, f);
  std::uint64_t total = sweep_size(c, f.world_count(), budget, "validity sweep");
  auto check = [w](const WorldSet& truth) { return truth.test(w) ? WorldSet::npos : w; };
  return sweep_serial(c, f, total, check);
}

SatVerdict satisfiable_in_frame(const Frame& f, const Formula& phi, std::uint64_t budget) {
  Compiled c = compile(phi, f);
  std::uint64_t total = sweep_size(c, f.world_count(), budget, "satisfiability sweep");
  // A valuation satisfying phi somewhere is one refuting ~phi somewhere; the
  // check reports the least satisfying world directly.
  auto check = [](const WorldSet& truth) { return truth.find_first(); };
  ValidityVerdict v = sweep(c, f, total, check);
  if (v.valid) return {false, std::nullopt};
  return {true, std::move(v.witness)};
}

}  // namespace achron
