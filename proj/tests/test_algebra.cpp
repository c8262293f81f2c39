#include <doctest.h>

#include <string>
#include <vector>

#include "achron/algebra.hpp"
#include "achron/corpus.hpp"
#include "achron/errors.hpp"
#include "achron/json_io.hpp"
#include "achron/semantics.hpp"
#include "support.hpp"

using namespace achron;
using testsup::mono;

namespace {

// Reference evaluator used to double-check equation witnesses.
AlgElement eval(const FiniteBao& a, const Term& t, const std::vector<AlgElement>& assign) {
  switch (t.kind()) {
    case TKind::One: return a.one();
    case TKind::Zero: return 0;
    case TKind::Var: return assign.at(t.var_index());
    case TKind::Minus: return a.one() & ~eval(a, t.child(), assign);
    case TKind::Plus: return eval(a, t.left(), assign) | eval(a, t.right(), assign);
    case TKind::OpDia:
      return a.apply(a.sig().index(t.modality()), eval(a, t.child(), assign));
  }
  return 0;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("formulas translate to terms and back") {
    CHECK(formula_to_term(top()) == Term::one());
    CHECK(formula_to_term(atom(3)) == Term::var(3));
    CHECK(formula_to_term(disj(neg(atom(0)), atom(1))) ==
          Term::plus(Term::minus(Term::var(0)), Term::var(1)));

    // Conjunction reaches the term language through its expansion.
    CHECK(formula_to_term(dia("d", conj(atom(0), atom(1)))) ==
          Term::op_dia("d", Term::minus(Term::plus(Term::minus(Term::var(0)),
                                                   Term::minus(Term::var(1))))));

    CHECK(term_to_formula(Term::zero()) == bot());
    CHECK(term_to_formula(Term::op_dia("b", Term::var(2))) == dia("b", atom(2)));

    // Round trips: formula -> term -> formula is the identity; term ->
    // formula -> term is the identity except that 0 reads back as -1.
    testsup::Rng rng(99);
    for (int i = 0; i < 200; ++i) {
      Formula f = testsup::random_formula(rng, 5, 4, {"d", "b"});
      CHECK(term_to_formula(formula_to_term(f)) == f);
    }
    CHECK(formula_to_term(term_to_formula(Term::zero())) == Term::minus(Term::one()));

    CHECK(equation_to_formula(Term::var(0), Term::one()) == iff(atom(0), top()));
    CHECK_THROWS_AS(Term::var(-1), Error);
  }

  TEST_CASE("complex algebra stores predecessor sets on atoms") {
    Frame f = gen_frame({Family::LawnRake, 0, 0, 2});  // worlds a, x0, x1
    FiniteBao cx = complex_algebra(f);
    CHECK(cx.atom_count() == 3);
    CHECK(cx.atoms() == std::vector<std::string>{"a", "x0", "x1"});
    CHECK(cx.atom_index("x1") == 2);
    CHECK_THROWS_AS(cx.atom_index("zz"), Error);
    CHECK(cx.one() == 0b111);

    // Nothing sees the handle; each tooth is seen by itself and the handle.
    CHECK(cx.op_on_atom(0, 0) == 0b000);
    CHECK(cx.op_on_atom(0, 1) == 0b011);
    CHECK(cx.op_on_atom(0, 2) == 0b101);

    // The operator is additive with empty join 0.
    CHECK(cx.apply(0, 0) == 0);
    CHECK(cx.apply(0, 0b110) == 0b111);
    CHECK(cx.apply(0, cx.one()) == 0b111);

    // Additivity and normality on a spread of complex algebras.
    testsup::Rng rng(5);
    for (int t = 0; t < 40; ++t) {
      FiniteBao a = complex_algebra(testsup::random_frame(rng, 5, {"d", "b"}));
      for (std::size_t mi = 0; mi < 2; ++mi) {
        CHECK(a.apply(mi, 0) == 0);
        for (int s = 0; s < 8; ++s) {
          AlgElement x = rng.next(a.one() + 1);
          AlgElement y = rng.next(a.one() + 1);
          CHECK(a.apply(mi, x | y) == (a.apply(mi, x) | a.apply(mi, y)));
        }
      }
    }
  }

  TEST_CASE("constructor validation") {
    Signature sig = mono();
    using Tables = std::vector<std::vector<AlgElement>>;
    CHECK_THROWS_AS(FiniteBao(sig, {}, Tables{{}}), Error);
    CHECK_THROWS_AS(FiniteBao(sig, {"x", "x"}, Tables{{0, 0}}), Error);
    CHECK_THROWS_AS(FiniteBao(sig, {"x"}, Tables{}), Error);
    CHECK_THROWS_AS(FiniteBao(sig, {"x"}, Tables{{0, 0}}), Error);
    // An operator value mentioning a bit outside the carrier.
    CHECK_THROWS_AS(FiniteBao(sig, {"x"}, Tables{{0b10}}), Error);
    try {
      FiniteBao(sig, {"x"}, Tables{{0b10}});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Param);
    }
  }

  TEST_CASE("atom frame inverts the complex algebra") {
    // p relates to q exactly when p lies below the operator value on q.
    FiniteBao a(mono(), {"x", "y"}, {{0b11, 0b00}});
    Frame f = ultrafilter_frame(a);
    CHECK(f.worlds() == std::vector<std::string>{"x", "y"});
    CHECK(f.edge(0, 0, 0));
    CHECK(f.edge(0, 1, 0));
    CHECK(!f.edge(0, 0, 1));
    CHECK(!f.edge(0, 1, 1));

    // Starting from a frame, the round trip reproduces it on the nose,
    // and the canonical extension fixes the complex algebra.
    for (const Frame& g : {gen_frame({Family::LawnRake, 0, 0, 2}),
                           gen_frame({Family::Dj, 1, 0, 0}),
                           gen_frame({Family::SternbergN, 0, 0, 3})}) {
      FiniteBao cx = complex_algebra(g);
      CHECK(ultrafilter_frame(cx) == g);
      CHECK(canonical_extension(cx) == cx);
    }
  }

  TEST_CASE("equation checking sweeps assignments in ascending order") {
    FiniteBao cx = complex_algebra(gen_frame({Family::LawnRake, 0, 0, 2}));
    Term tau = formula_to_term(u_axiom(1));

    auto verdict = validates_equation(cx, tau, Term::one(), kDefaultBudget);
    REQUIRE(!verdict.valid);
    REQUIRE(verdict.witness.has_value());
    // First failing assignment: v0 = {x1}, v1 = {x0}, i.e. masks 4 and 2.
    CHECK(*verdict.witness == std::vector<AlgElement>{4, 2});

    // The witness really does separate the two sides.
    CHECK(eval(cx, tau, *verdict.witness) != cx.one());

    // Deterministic across runs.
    auto again = validates_equation(cx, tau, Term::one(), kDefaultBudget);
    REQUIRE(again.witness.has_value());
    CHECK(*again.witness == *verdict.witness);

    // A reflexive point validates the T axiom as an equation.
    Frame loop(mono(), {"a"}, {{"d", {{"a", "a"}}}});
    auto ok = validates_equation(complex_algebra(loop), formula_to_term(t_axiom()),
                                 Term::one(), kDefaultBudget);
    CHECK(ok.valid);
    CHECK(!ok.witness.has_value());

    // Trivial identities hold everywhere.
    CHECK(validates_equation(cx, Term::var(0), Term::var(0), kDefaultBudget).valid);
  }

  TEST_CASE("equation budget") {
    FiniteBao cx = complex_algebra(gen_frame({Family::LawnRake, 0, 0, 2}));
    // One variable over three atoms: 2^3 assignments.
    CHECK(validates_equation(cx, Term::var(0), Term::var(0), 8).valid);
    try {
      validates_equation(cx, Term::var(0), Term::var(0), 7);
      FAIL("expected a budget error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Budget);
      CHECK(doctest::Contains("2^3").checkWith(e.what()));
      CHECK(doctest::Contains("budget of 7").checkWith(e.what()));
    }
  }

  TEST_CASE("validity transfers between a frame and its complex algebra") {
    testsup::Rng rng(31);
    for (int t = 0; t < 60; ++t) {
      Frame f = testsup::random_frame(rng, 3, {"d"});
      Formula phi = testsup::random_formula(rng, 3, 2, {"d"});
      bool frame_valid = valid_on_frame(f, phi).valid;
      bool alg_valid = validates_equation(complex_algebra(f), formula_to_term(phi),
                                          Term::one(), kDefaultBudget)
                           .valid;
      CHECK(frame_valid == alg_valid);
    }
  }

  TEST_CASE("algebra isomorphism permutes atoms") {
    FiniteBao a = complex_algebra(gen_frame({Family::LawnRake, 0, 0, 2}));
    // Same algebra with the atoms renamed and listed in a different order:
    // mapping a->handle, x0->t0, x1->t1 transports the operator table to
    // op(t0) = {handle, t0}, op(t1) = {handle, t1}, op(handle) = 0.
    FiniteBao b(mono(), {"t0", "t1", "handle"}, {{0b101, 0b110, 0b000}});
    CHECK(isomorphic(a, b));
    CHECK(isomorphic(a, a));

    // Breaking one operator entry breaks the isomorphism.
    FiniteBao c(mono(), {"a", "x0", "x1"}, {{0b000, 0b011, 0b001}});
    CHECK(!isomorphic(a, c));
    // Different signatures or sizes never match.
    CHECK(!isomorphic(a, FiniteBao(Signature({"b"}), {"a", "x0", "x1"},
                                   {{0b000, 0b011, 0b101}})));
    CHECK(!isomorphic(a, FiniteBao(mono(), {"x"}, {{0b1}})));

    // The exhaustive search refuses past eight atoms.
    std::vector<std::string> names;
    for (int i = 0; i < 9; ++i) names.push_back("a" + std::to_string(i));
    FiniteBao nine(mono(), names, {std::vector<AlgElement>(9, 0)});
    CHECK_THROWS_AS(isomorphic(nine, nine), Error);
  }

  TEST_CASE("json serialization") {
    FiniteBao a = complex_algebra(gen_frame({Family::Ejn, 1, 1, 0}));
    CHECK(algebra_from_json(algebra_to_json(a)) == a);

    // The documented shape: atoms absent from an operator table default to
    // the empty join.
    FiniteBao doc = algebra_from_json(R"({
      "modalities": ["d"],
      "atoms": ["x", "y"],
      "op": { "d": { "x": ["x", "y"] } }
    })");
    CHECK(doc.op_on_atom(0, 0) == 0b11);
    CHECK(doc.op_on_atom(0, 1) == 0);

    CHECK_THROWS_AS(algebra_from_json("{}"), Error);
    try {
      algebra_from_json(R"({"modalities": ["d"], "atoms": ["x"],
                            "op": {}, "spare": 0})");
    } catch (const Error& e) {
      CHECK(std::string(e.code_name()) == "E_PARSE");
    }
    try {
      algebra_from_json(R"({"modalities": ["d"], "atoms": ["x"],
                            "op": {"d": {"zz": []}}})");
    } catch (const Error& e) {
      CHECK(std::string(e.code_name()) == "E_PARSE");
    }
  }
}
