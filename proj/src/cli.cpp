#include "achron/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "achron/algebra.hpp"
#include "achron/corpus.hpp"
#include "achron/correspondents.hpp"
#include "achron/errors.hpp"
#include "achron/formula.hpp"
#include "achron/json_io.hpp"
#include "achron/parser.hpp"
#include "achron/semantics.hpp"

namespace achron {
namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string set_names(const Frame& f, const WorldSet& s) {
  std::string out = "{";
  for (auto w = s.find_first(); w != WorldSet::npos; w = s.find_next(w)) {
    if (out.size() > 1) out += ',';
    out += f.world_name(w);
  }
  return out + "}";
}

std::string witness_line(const Frame& f, const Formula& phi, const Witness& wit) {
  std::string out = "INVALID at " + f.world_name(wit.world);
  for (int a : atoms_of(phi)) {
    auto it = wit.valuation.find(a);
    out += " p" + std::to_string(a) + "=";
    out += it == wit.valuation.end() ? "{}" : set_names(f, it->second);
  }
  return out;
}

Frame load_frame(const std::string& path) { return frame_from_json(read_file(path)).first; }

Model load_model(const std::string& path) {
  auto [frame, val] = frame_from_json(read_file(path));
  return Model{std::move(frame), val ? std::move(*val) : Valuation{}};
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
}

struct GenOptions {
  std::string family;
  std::string formula;
  int j = 0;
  int n = 1;
  int N = 1;
  int i = 0;
  std::string dia = "d";
  std::string bdia = "d";
  std::string out_path;
};

Frame gen_family(const GenOptions& g) {
  static const std::map<std::string, Family> table = {
      {"Dj", Family::Dj},           {"GjN", Family::GjN},
      {"Ejn", Family::Ejn},         {"LawnRake", Family::LawnRake},
      {"FineN", Family::FineN},     {"XuChainN", Family::XuChainN},
      {"SternbergN", Family::SternbergN}};
  auto it = table.find(g.family);
  if (it == table.end()) fail(ErrorCode::Param, "unknown family '" + g.family + "'");
  FamilySpec spec;
  spec.family = it->second;
  spec.j = g.j;
  spec.n = g.n;
  spec.N = g.N;
  return gen_frame(spec);
}

Formula gen_named_formula(const GenOptions& g) {
  const std::string& name = g.formula;
  if (name == "alpha") return alpha(g.i, g.dia);
  if (name == "phi") return phi(g.i, g.dia);
  if (name == "psi") return psi(g.i, g.n, g.dia);
  if (name == "xi") return xi(g.i, g.dia);
  if (name == "zeta") return zeta(g.i, g.n, g.dia, g.bdia);
  if (name == "five") return five(g.n, g.dia);
  if (name == "u") return u_axiom(g.n, g.dia, g.bdia);
  if (name == "ualt") return u_axiom_alt(g.n, g.dia, g.bdia);
  if (name == "i") return i_axiom(g.n, g.dia);
  if (name == "t") return t_axiom(g.dia);
  if (name == "four") return four_axiom(g.dia);
  if (name == "m") return m_axiom(g.dia);
  if (name == "q") return q_axiom(g.dia);
  if (name == "grz") return grz_axiom(g.dia);
  if (name == "h") return h_formula(g.dia);
  if (name == "hcirc") return h_circ(g.dia);
  fail(ErrorCode::Param, "unknown formula name '" + name + "'");
}

int run_corr(const Frame& f, const std::string& cond, unsigned n, unsigned maxn,
             const std::string& mod, const std::string& bdia, const std::string& root,
             std::ostream& out) {
  if (cond == "props") {
    FrameProps p = frame_props(f, mod);
    out << "reflexive=" << (p.reflexive ? "true" : "false")
        << " transitive=" << (p.transitive ? "true" : "false")
        << " symmetric=" << (p.symmetric ? "true" : "false") << "\n";
    return 0;
  }
  if (cond == "segerberg") {
    if (root.empty()) fail(ErrorCode::Param, "segerberg needs --root");
    out << to_string(segerberg_classify(f, root)) << "\n";
    return 0;
  }
  ConditionReport report;
  if (cond == "5n")
    report = check_5n(f, n, mod);
  else if (cond == "e52")
    report = check_e52_upto(f, mod, maxn);
  else if (cond == "un")
    report = check_Un(f, n, mod, bdia);
  else if (cond == "in")
    report = check_In(f, n, mod);
  else if (cond == "chain")
    report = check_chain(f, mod);
  else if (cond == "widstar")
    report = check_widstar(f, n, mod);
  else
    fail(ErrorCode::Param, "unknown condition '" + cond + "'");
  if (report.holds) {
    out << "HOLDS\n";
    return 0;
  }
  out << "FAILS: " << report.describe() << "\n";
  return 1;
}

int run_dual(const std::string& frame_path, const std::string& algebra_path,
             const std::string& mode, const std::string& eq_text,
             const std::string& out_path, std::uint64_t budget, std::ostream& out) {
  if (!frame_path.empty()) {
    Frame f = load_frame(frame_path);
    if (mode == "complex") {
      emit(algebra_to_json(complex_algebra(f)), out_path, out);
      return 0;
    }
    if (mode == "roundtrip") {
      Frame back = ultrafilter_frame(complex_algebra(f));
      bool same = f == back || isomorphic(f, back);
      out << "roundtrip isomorphic: " << (same ? "yes" : "no") << "\n";
      return same ? 0 : 1;
    }
    fail(ErrorCode::Param, "with -F the mode must be 'complex' or 'roundtrip'");
  }
  FiniteBao a = algebra_from_json(read_file(algebra_path));
  if (mode == "frame") {
    emit(frame_to_json(ultrafilter_frame(a)), out_path, out);
    return 0;
  }
  if (mode == "sigma") {
    emit(algebra_to_json(canonical_extension(a)), out_path, out);
    return 0;
  }
  if (mode == "eq") {
    auto pos = eq_text.find('=');
    if (pos == std::string::npos)
      fail(ErrorCode::Param, "eq needs '<lhs> = <rhs>' with formula syntax on each side");
    Term lhs = formula_to_term(parse(eq_text.substr(0, pos), a.sig()));
    Term rhs = formula_to_term(parse(eq_text.substr(pos + 1), a.sig()));
    EquationVerdict v = validates_equation(a, lhs, rhs, budget);
    if (v.valid) {
      out << "VALID\n";
      return 0;
    }
    out << "INVALID:";
    for (std::size_t i = 0; i < v.witness->size(); ++i) {
      out << " v" << i << "={";
      AlgElement e = (*v.witness)[i];
      bool first = true;
      for (std::size_t k = 0; k < a.atom_count(); ++k)
        if (e >> k & 1) {
          if (!first) out << ',';
          out << a.atoms()[k];
          first = false;
        }
      out << "}";
    }
    out << "\n";
    return 1;
  }
  fail(ErrorCode::Param, "with -A the mode must be 'frame', 'sigma' or 'eq'");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-frame workbench for multimodal logics"};
  app.require_subcommand(1);

  std::string formula_text, modalities_csv = "d";
  std::string model_path, frame_path, algebra_path, world, out_path;
  std::string cond, mod = "d", bdia = "d", root, set_csv, eq_text, mode;
  std::string format = "tsv";
  std::uint64_t budget = kDefaultBudget;
  unsigned n = 1, maxn = 3;
  bool achronal = false;
  GenOptions gen;

  auto* cmd_parse = app.add_subcommand("parse", "parse a formula and echo its normal printing");
  cmd_parse->add_option("formula", formula_text)->required();
  cmd_parse->add_option("--modalities", modalities_csv, "comma-separated modality names");

  auto* cmd_check = app.add_subcommand("check", "evaluate a formula in a model");
  cmd_check->add_option("-m,--model", model_path)->required();
  cmd_check->add_option("-f,--formula", formula_text)->required();
  cmd_check->add_option("-w,--world", world, "check at this world (default: all worlds)");

  auto* cmd_valid = app.add_subcommand("valid", "frame validity by valuation sweep");
  cmd_valid->add_option("-F,--frame", frame_path)->required();
  cmd_valid->add_option("-f,--formula", formula_text)->required();
  cmd_valid->add_option("--budget", budget)->check(CLI::PositiveNumber);

  auto* cmd_corr = app.add_subcommand("corr", "first-order frame-condition checks");
  cmd_corr->add_option("-F,--frame", frame_path)->required();
  cmd_corr->add_option("--cond", cond)
      ->required()
      ->check(CLI::IsMember({"5n", "e52", "un", "in", "chain", "widstar", "props", "segerberg"}));
  cmd_corr->add_option("--n", n);
  cmd_corr->add_option("--maxn", maxn);
  cmd_corr->add_option("-m,--mod,--dia", mod);
  cmd_corr->add_option("--bdia", bdia);
  cmd_corr->add_option("-w,--root", root);

  auto* cmd_width = app.add_subcommand("width", "antichain width of a world set");
  cmd_width->add_option("-F,--frame", frame_path)->required();
  cmd_width->add_option("-m,--mod", mod)->required();
  cmd_width->add_option("--set", set_csv, "comma-separated worlds (default: all)");
  cmd_width->add_flag("--achronal", achronal, "compare futures by inclusion instead of edges");

  auto* cmd_gen = app.add_subcommand("gen", "generate a frame family member or named formula");
  auto* fam_opt = cmd_gen->add_option("--family", gen.family);
  auto* for_opt = cmd_gen->add_option("--formula", gen.formula);
  fam_opt->excludes(for_opt);
  cmd_gen->add_option("--j", gen.j);
  cmd_gen->add_option("--n", gen.n);
  cmd_gen->add_option("--N", gen.N);
  cmd_gen->add_option("--i", gen.i);
  cmd_gen->add_option("--dia", gen.dia);
  cmd_gen->add_option("--bdia", gen.bdia);
  cmd_gen->add_option("--out", gen.out_path);

  auto* cmd_dual = app.add_subcommand("dual", "complex algebras, atom frames, canonical extensions");
  auto* dual_f = cmd_dual->add_option("-F,--frame", frame_path);
  auto* dual_a = cmd_dual->add_option("-A,--algebra", algebra_path);
  dual_f->excludes(dual_a);
  cmd_dual->add_option("mode", mode)->required();
  cmd_dual->add_option("equation", eq_text);
  cmd_dual->add_option("--out", out_path);
  cmd_dual->add_option("--budget", budget)->check(CLI::PositiveNumber);

  auto* cmd_repro = app.add_subcommand("reproduce", "re-check the finite claim catalog");
  cmd_repro->add_option("--budget", budget)->check(CLI::PositiveNumber);
  cmd_repro->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  cmd_repro->add_option("--out", out_path);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("achron");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (*cmd_parse) {
      Signature sig(split_csv(modalities_csv));
      out << print(parse(formula_text, sig)) << "\n";
      return 0;
    }
    if (*cmd_check) {
      Model m = load_model(model_path);
      Formula f = parse(formula_text, m.frame.sig());
      bool ok = world.empty() ? verifies(m, f) : satisfies(m, world, f);
      out << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }
    if (*cmd_valid) {
      Frame f = load_frame(frame_path);
      Formula phi = parse(formula_text, f.sig());
      ValidityVerdict v = valid_on_frame(f, phi, budget);
      if (v.valid) {
        out << "VALID\n";
        return 0;
      }
      out << witness_line(f, phi, *v.witness) << "\n";
      return 1;
    }
    if (*cmd_corr)
      return run_corr(load_frame(frame_path), cond, n, maxn, mod, bdia, root, out);
    if (*cmd_width) {
      Frame f = load_frame(frame_path);
      WorldSet s = f.all_worlds();
      if (!set_csv.empty()) {
        s = f.empty_set();
        for (const auto& name : split_csv(set_csv)) s.set(f.world_index(name));
      }
      out << (achronal ? achronal_width(f, mod, s) : antichain_width(f, mod, s)) << "\n";
      return 0;
    }
    if (*cmd_gen) {
      if (!gen.family.empty()) {
        emit(frame_to_json(gen_family(gen)), gen.out_path, out);
        return 0;
      }
      if (!gen.formula.empty()) {
        out << print(gen_named_formula(gen)) << "\n";
        return 0;
      }
      fail(ErrorCode::Param, "gen needs --family or --formula");
    }
    if (*cmd_dual) {
      if (frame_path.empty() == algebra_path.empty())
        fail(ErrorCode::Param, "dual needs exactly one of -F and -A");
      return run_dual(frame_path, algebra_path, mode, eq_text, out_path, budget, out);
    }
    if (*cmd_repro) {
      Ledger led = reproduce_claims(budget);
      emit(format == "tsv" ? ledger_tsv(led) : ledger_json(led), out_path, out);
      return led.all_pass() ? 0 : 1;
    }
    fail(ErrorCode::Param, "no subcommand selected");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "E_PARAM: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.code_name() << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace achron
