#include "achron/parser.hpp"

#include <cctype>
#include <vector>

namespace achron {

namespace {

enum class Tok : unsigned char {
  End, True, False, Not, And, Or, Imp, Iff, LParen, RParen, Atom, DiaMod, BoxMod,
};

struct Token {
  Tok kind;
  std::size_t pos = 0;
  int nat = -1;       // Atom
  std::string name{};  // DiaMod, BoxMod
};

[[noreturn]] void parse_fail(std::size_t pos, const std::string& msg) {
  fail(ErrorCode::Parse, msg + " at offset " + std::to_string(pos));
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string lex_ident(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  if (i >= s.size() || !ident_start(s[i])) parse_fail(i, "expected identifier");
  while (i < s.size() && ident_char(s[i])) ++i;
  return s.substr(start, i - start);
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t pos = i;
    switch (c) {
      case '~': out.push_back({Tok::Not, pos}); ++i; continue;
      case '&': out.push_back({Tok::And, pos}); ++i; continue;
      case '|': out.push_back({Tok::Or, pos}); ++i; continue;
      case '(': out.push_back({Tok::LParen, pos}); ++i; continue;
      case ')': out.push_back({Tok::RParen, pos}); ++i; continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') { out.push_back({Tok::Imp, pos}); i += 2; continue; }
        parse_fail(pos, "expected '->'");
      case '<': {
        if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
          out.push_back({Tok::Iff, pos}); i += 3; continue;
        }
        ++i;
        Token t{Tok::DiaMod, pos};
        t.name = lex_ident(s, i);
        if (i >= s.size() || s[i] != '>') parse_fail(i, "expected '>'");
        ++i;
        out.push_back(std::move(t));
        continue;
      }
      case '[': {
        ++i;
        Token t{Tok::BoxMod, pos};
        t.name = lex_ident(s, i);
        if (i >= s.size() || s[i] != ']') parse_fail(i, "expected ']'");
        ++i;
        out.push_back(std::move(t));
        continue;
      }
      default: break;
    }
    if (ident_start(c)) {
      std::string id = lex_ident(s, i);
      if (id == "true") { out.push_back({Tok::True, pos}); continue; }
      if (id == "false") { out.push_back({Tok::False, pos}); continue; }
      if (id.size() > 1 && id[0] == 'p') {
        bool digits = true;
        for (std::size_t k = 1; k < id.size(); ++k)
          if (!std::isdigit(static_cast<unsigned char>(id[k]))) { digits = false; break; }
        if (digits) {
          if (id.size() > 9) parse_fail(pos, "atom index too large");
          out.push_back({Tok::Atom, pos, std::stoi(id.substr(1))});
          continue;
        }
      }
      parse_fail(pos, "unexpected identifier '" + id + "'");
    }
    parse_fail(pos, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, s.size()});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> toks, const Signature& sig)
      : toks_(std::move(toks)), sig_(sig) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().kind != Tok::End) parse_fail(peek().pos, "trailing input");
    return f;
  }

private:
  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }
  bool eat(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }

  Formula parse_iff() {
    Formula l = parse_imp();
    if (eat(Tok::Iff)) return iff(std::move(l), parse_iff());
    return l;
  }

  Formula parse_imp() {
    Formula l = parse_or();
    if (eat(Tok::Imp)) return implies(std::move(l), parse_imp());
    return l;
  }

  Formula parse_or() {
    Formula l = parse_and();
    while (eat(Tok::Or)) l = disj(std::move(l), parse_and());
    return l;
  }

  Formula parse_and() {
    Formula l = parse_unary();
    while (eat(Tok::And)) l = conj(std::move(l), parse_unary());
    return l;
  }

  std::string checked_modality(const Token& t) {
    if (!sig_.contains(t.name))
      fail(ErrorCode::UnknownModality,
           "unknown modality '" + t.name + "' at offset " + std::to_string(t.pos));
    return t.name;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return neg(parse_unary());
      case Tok::DiaMod: {
        Token t = take();
        return dia(checked_modality(t), parse_unary());
      }
      case Tok::BoxMod: {
        Token t = take();
        return box(checked_modality(t), parse_unary());
      }
      default: return parse_atom();
    }
  }

  Formula parse_atom() {
    switch (peek().kind) {
      case Tok::True: take(); return top();
      case Tok::False: take(); return bot();
      case Tok::Atom: return atom(take().nat);
      case Tok::LParen: {
        take();
        Formula f = parse_iff();
        if (!eat(Tok::RParen)) parse_fail(peek().pos, "expected ')'");
        return f;
      }
      default: parse_fail(peek().pos, "expected formula");
    }
  }

  std::vector<Token> toks_;
  const Signature& sig_;
  std::size_t at_ = 0;
};

// Printing works on a classification of each node: either the node is one of
// the primitive forms, or it is the expansion of an abbreviation and is shown
// sugared.  An Or whose left child is a plain negation (one that does not
// itself read as false, a box, a conjunction or a biconditional) is shown as
// an implication.
enum class Form : unsigned char { Top, Bot, Atom, Not, And, Or, Imp, Iff, Dia, Box };

struct Reading {
  Form form;
  std::string mod;           // Dia, Box
  std::optional<Formula> a, b;
};

Reading classify(const Formula& f) {
  switch (f.kind()) {
    case FKind::Top: return {Form::Top, {}, {}, {}};
    case FKind::Atom: return {Form::Atom, {}, {}, {}};
    case FKind::Dia: return {Form::Dia, f.modality(), f.child(), {}};
    case FKind::Or: {
      if (auto imp = as_implies(f)) {
        Form left = classify(f.left()).form;
        if (left == Form::Not)
          return {Form::Imp, {}, imp->first, imp->second};
      }
      return {Form::Or, {}, f.left(), f.right()};
    }
    case FKind::Not: {
      if (is_bot(f)) return {Form::Bot, {}, {}, {}};
      if (auto bx = as_box(f)) return {Form::Box, bx->first, bx->second, {}};
      if (auto eq = as_iff(f)) return {Form::Iff, {}, eq->first, eq->second};
      if (auto cj = as_conj(f)) return {Form::And, {}, cj->first, cj->second};
      return {Form::Not, {}, f.child(), {}};
    }
  }
  return {Form::Not, {}, f.child(), {}};
}

// Binding strength, loosest to tightest.  A node is parenthesised when its
// own level is below what the context requires.
int level_of(Form form) {
  switch (form) {
    case Form::Iff: return 1;
    case Form::Imp: return 2;
    case Form::Or: return 3;
    case Form::And: return 4;
    case Form::Not:
    case Form::Dia:
    case Form::Box: return 5;
    default: return 6;
  }
}

void print_at(const Formula& f, int min_level, std::string& out) {
  Reading r = classify(f);
  int lvl = level_of(r.form);
  if (lvl < min_level) {
    out += '(';
    print_at(f, 0, out);
    out += ')';
    return;
  }
  switch (r.form) {
    case Form::Top: out += "true"; return;
    case Form::Bot: out += "false"; return;
    case Form::Atom: out += 'p'; out += std::to_string(f.atom_index()); return;
    case Form::Not: out += '~'; print_at(*r.a, 5, out); return;
    case Form::Dia:
      out += '<'; out += r.mod; out += '>';
      print_at(*r.a, 5, out);
      return;
    case Form::Box:
      out += '['; out += r.mod; out += ']';
      print_at(*r.a, 5, out);
      return;
    case Form::And:
      print_at(*r.a, 4, out); out += " & "; print_at(*r.b, 5, out);
      return;
    case Form::Or:
      print_at(*r.a, 3, out); out += " | "; print_at(*r.b, 4, out);
      return;
    case Form::Imp:
      print_at(*r.a, 3, out); out += " -> "; print_at(*r.b, 2, out);
      return;
    case Form::Iff:
      print_at(*r.a, 2, out); out += " <-> "; print_at(*r.b, 1, out);
      return;
  }
}

}  // namespace

Formula parse(const std::string& text, const Signature& sig) {
  return Parser(lex(text), sig).run();
}

std::string print(const Formula& f) {
  std::string out;
  print_at(f, 0, out);
  return out;
}

}  // namespace achron
