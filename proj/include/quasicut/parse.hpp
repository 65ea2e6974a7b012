#pragma once

#include "quasicut/polyhedra.hpp"
#include "quasicut/report.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace quasicut {

/**
 * Line-based document format. Statements, one per line, # starts a comment:
 *
 *   dim 2
 *   tower sqrt5 = 5            adjoin the square root of the expression
 *   let phi = (1 + sqrt5)/2    name a field value
 *   generator (1, 0)           quasilattice generator
 *   facet (-1, 0) >= -1        half-space; <= flips the side
 *   witness (0, -1, 0, 0, 0)   optional, one per facet, over the generators
 *   cut Y (1, 0) epsilon 0     optional, "side le" selects the other half
 *   blowup vertex (0, 0) Y (0, u) epsilon 1
 *
 * Expressions use + - * / ( ), integer literals, and declared names.
 */
struct InputDocument {
  std::size_t n = 0;
  Tower tower;
  std::vector<std::pair<std::string, FieldElement>> lets;
  std::vector<FieldVec> generators;
  HPolyhedron polyhedron;
  std::vector<IntVec> witnesses;
  std::optional<CutSpec> cut;
  struct BlowupBlock {
    FieldVec vertex;
    FieldVec y;
    FieldElement epsilon;
  };
  std::optional<BlowupBlock> blowup;
};

namespace detail {

struct Token {
  enum Kind { ident, number, symbol, end } kind = end;
  std::string text;
  std::size_t col = 0;
};

inline std::vector<Token> tokenize_line(const std::string& line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
    Token t;
    t.col = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      t.kind = Token::ident;
      t.text = line.substr(i, j - i);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      t.kind = Token::number;
      t.text = line.substr(i, j - i);
      i = j;
    } else if (c == '>' || c == '<') {
      if (i + 1 >= line.size() || line[i + 1] != '=')
        throw ParseError(lineno, "column " + std::to_string(i + 1) + ": expected '" +
                                     std::string(1, c) + "='");
      t.kind = Token::symbol;
      t.text = std::string(1, c) + "=";
      i += 2;
    } else if (std::string("+-*/(),=").find(c) != std::string::npos) {
      t.kind = Token::symbol;
      t.text = std::string(1, c);
      ++i;
    } else {
      throw ParseError(lineno, "column " + std::to_string(i + 1) +
                                   ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back(std::move(t));
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::size_t lineno, const Tower& tower,
             const std::map<std::string, FieldElement>& names)
      : toks_(std::move(toks)), lineno_(lineno), tower_(tower), names_(names) {}

  bool done() const { return pos_ >= toks_.size(); }
  const Token& peek() const {
    static const Token end_tok;
    return done() ? end_tok : toks_[pos_];
  }
  bool accept_symbol(const std::string& s) {
    if (!done() && toks_[pos_].kind == Token::symbol && toks_[pos_].text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_symbol(const std::string& s) {
    if (!accept_symbol(s)) fail("expected '" + s + "'");
  }
  std::string expect_ident() {
    if (done() || toks_[pos_].kind != Token::ident) fail("expected a name");
    return toks_[pos_++].text;
  }
  bool accept_ident(const std::string& s) {
    if (!done() && toks_[pos_].kind == Token::ident && toks_[pos_].text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_ident_kw(const std::string& s) {
    if (!accept_ident(s)) fail("expected '" + s + "'");
  }
  void expect_end() {
    if (!done()) fail("trailing input");
  }
  // `with_got` names the offending token; turn it off for semantic complaints
  // that already describe the problem.
  [[noreturn]] void fail(const std::string& msg, bool with_got = true) const {
    std::size_t col = done() ? (toks_.empty() ? 1 : toks_.back().col + toks_.back().text.size())
                             : toks_[pos_].col;
    std::string detail = msg;
    if (with_got)
      detail += done() ? ", got end of line" : ", got '" + toks_[pos_].text + "'";
    throw ParseError(lineno_, "column " + std::to_string(col) + ": " + detail);
  }

  FieldElement parse_expr() {
    FieldElement v = parse_term();
    for (;;) {
      if (accept_symbol("+")) v = v + parse_term();
      else if (accept_symbol("-")) v = v - parse_term();
      else return v;
    }
  }

  FieldVec parse_vector() {
    expect_symbol("(");
    FieldVec v;
    if (!accept_symbol(")")) {
      v.push_back(parse_expr());
      while (accept_symbol(",")) v.push_back(parse_expr());
      expect_symbol(")");
    }
    return v;
  }

 private:
  FieldElement parse_term() {
    FieldElement v = parse_factor();
    for (;;) {
      if (accept_symbol("*")) v = v * parse_factor();
      else if (accept_symbol("/")) {
        FieldElement w = parse_factor();
        if (w.is_zero()) fail("division by zero", false);
        v = v / w;
      } else {
        return v;
      }
    }
  }

  FieldElement parse_factor() {
    if (accept_symbol("-")) return -parse_factor();
    return parse_primary();
  }

  FieldElement parse_primary() {
    if (done()) fail("expected a value");
    const Token& t = toks_[pos_];
    if (t.kind == Token::number) {
      ++pos_;
      return tower_.rational(Rational(Integer(t.text)));
    }
    if (t.kind == Token::ident) {
      auto it = names_.find(t.text);
      if (it == names_.end()) fail("unknown name '" + t.text + "'", false);
      ++pos_;
      return it->second;
    }
    if (accept_symbol("(")) {
      FieldElement v = parse_expr();
      expect_symbol(")");
      return v;
    }
    fail("expected a value");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t lineno_;
  const Tower& tower_;
  const std::map<std::string, FieldElement>& names_;
};

inline Integer expr_integer(LineParser& p) {
  FieldElement e = p.parse_expr();
  if (!e.is_rational()) p.fail("expected an integer", false);
  Rational r = e.rational_value();
  if (rational_den(r) != 1) p.fail("expected an integer", false);
  return rational_num(r);
}

}  // namespace detail

inline InputDocument parse(const std::string& text) {
  InputDocument doc;
  bool have_dim = false;
  std::map<std::string, FieldElement> names;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<detail::Token> toks = detail::tokenize_line(line, lineno);
    if (toks.empty()) continue;
    detail::LineParser p(std::move(toks), lineno, doc.tower, names);
    std::string kw = p.expect_ident();

    auto need_dim = [&] {
      if (!have_dim) throw ParseError(lineno, "'dim' must come before '" + kw + "'");
    };
    auto check_arity = [&](const FieldVec& v, const char* what) {
      if (v.size() != doc.n)
        throw ParseError(lineno, std::string(what) + " has " + std::to_string(v.size()) +
                                     " entries, expected " + std::to_string(doc.n));
    };

    if (kw == "dim") {
      if (have_dim) throw ParseError(lineno, "duplicate 'dim'");
      Integer v = detail::expr_integer(p);
      p.expect_end();
      if (v < 1) throw ParseError(lineno, "dimension must be at least 1");
      doc.n = static_cast<std::size_t>(v);
      have_dim = true;
    } else if (kw == "tower") {
      std::string name = p.expect_ident();
      p.expect_symbol("=");
      FieldElement rad = p.parse_expr();
      p.expect_end();
      if (names.count(name)) throw ParseError(lineno, "name '" + name + "' already defined");
      try {
        doc.tower = doc.tower.adjoin_sqrt(rad.embed(doc.tower), name);
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
      names.emplace(name, doc.tower.radical(doc.tower.depth() - 1));
    } else if (kw == "let") {
      std::string name = p.expect_ident();
      p.expect_symbol("=");
      FieldElement v = p.parse_expr();
      p.expect_end();
      if (names.count(name)) throw ParseError(lineno, "name '" + name + "' already defined");
      names.emplace(name, v);
      doc.lets.emplace_back(name, v);
    } else if (kw == "generator") {
      need_dim();
      FieldVec v = p.parse_vector();
      p.expect_end();
      check_arity(v, "generator");
      doc.generators.push_back(std::move(v));
    } else if (kw == "facet") {
      need_dim();
      FieldVec normal = p.parse_vector();
      check_arity(normal, "facet normal");
      bool ge;
      if (p.accept_symbol(">=")) ge = true;
      else if (p.accept_symbol("<=")) ge = false;
      else p.fail("expected '>=' or '<='");
      FieldElement off = p.parse_expr();
      p.expect_end();
      if (!ge) {
        normal = vec_neg(normal);
        off = -off;
      }
      doc.polyhedron.facets.push_back(Facet{std::move(normal), std::move(off)});
    } else if (kw == "witness") {
      p.expect_symbol("(");
      IntVec w;
      if (!p.accept_symbol(")")) {
        w.push_back(detail::expr_integer(p));
        while (p.accept_symbol(",")) w.push_back(detail::expr_integer(p));
        p.expect_symbol(")");
      }
      p.expect_end();
      doc.witnesses.push_back(std::move(w));
    } else if (kw == "cut") {
      need_dim();
      if (doc.cut) throw ParseError(lineno, "duplicate 'cut'");
      p.expect_ident_kw("Y");
      FieldVec y = p.parse_vector();
      check_arity(y, "cut direction");
      p.expect_ident_kw("epsilon");
      FieldElement eps = p.parse_expr();
      CutSide side = CutSide::ge;
      if (p.accept_ident("side")) {
        if (p.accept_ident("ge")) side = CutSide::ge;
        else if (p.accept_ident("le")) side = CutSide::le;
        else p.fail("expected 'ge' or 'le'");
      }
      p.expect_end();
      doc.cut = CutSpec{std::move(y), std::move(eps), side};
    } else if (kw == "blowup") {
      need_dim();
      if (doc.blowup) throw ParseError(lineno, "duplicate 'blowup'");
      p.expect_ident_kw("vertex");
      FieldVec vtx = p.parse_vector();
      check_arity(vtx, "blow-up vertex");
      p.expect_ident_kw("Y");
      FieldVec y = p.parse_vector();
      check_arity(y, "blow-up direction");
      p.expect_ident_kw("epsilon");
      FieldElement eps = p.parse_expr();
      p.expect_end();
      doc.blowup = InputDocument::BlowupBlock{std::move(vtx), std::move(y), std::move(eps)};
    } else {
      throw ParseError(lineno, "unknown statement '" + kw + "'");
    }
  }

  if (!have_dim) throw ParseError(lineno, "document declares no 'dim'");
  if (doc.polyhedron.facets.empty()) throw ParseError(lineno, "document declares no facets");
  if (!doc.witnesses.empty() && doc.witnesses.size() != doc.polyhedron.facets.size())
    throw ParseError(lineno, "witness count " + std::to_string(doc.witnesses.size()) +
                                 " does not match facet count " +
                                 std::to_string(doc.polyhedron.facets.size()));
  if (!doc.witnesses.empty())
    for (const auto& w : doc.witnesses)
      if (w.size() != doc.generators.size())
        throw ParseError(lineno, "witness arity does not match the generator count");

  doc.polyhedron.n = doc.n;
  doc.polyhedron.tower = doc.tower;
  auto embed_vec = [&](FieldVec& v) {
    for (auto& c : v) c = c.embed(doc.tower);
  };
  for (auto& f : doc.polyhedron.facets) {
    embed_vec(f.normal);
    f.offset = f.offset.embed(doc.tower);
  }
  for (auto& g : doc.generators) embed_vec(g);
  if (doc.cut) {
    embed_vec(doc.cut->y);
    doc.cut->epsilon = doc.cut->epsilon.embed(doc.tower);
  }
  if (doc.blowup) {
    embed_vec(doc.blowup->vertex);
    embed_vec(doc.blowup->y);
    doc.blowup->epsilon = doc.blowup->epsilon.embed(doc.tower);
  }
  return doc;
}

/** Emit a document that parses back to the same objects, field-exact. */
inline std::string serialize(const InputDocument& doc) {
  std::ostringstream os;
  os << "dim " << doc.n << "\n";
  for (std::size_t i = 0; i < doc.tower.depth(); ++i) {
    FieldElement rad = doc.tower.prefix(i).element(doc.tower.level(i).radicand);
    os << "tower " << doc.tower.level(i).name << " = " << format_element(rad) << "\n";
  }
  for (const auto& [name, value] : doc.lets)
    os << "let " << name << " = " << format_element(value) << "\n";
  for (const auto& g : doc.generators) os << "generator " << format_vec(g) << "\n";
  for (const auto& f : doc.polyhedron.facets)
    os << "facet " << format_vec(f.normal) << " >= " << format_element(f.offset) << "\n";
  for (const auto& w : doc.witnesses) os << "witness " << format_int_vec(w) << "\n";
  if (doc.cut) {
    os << "cut Y " << format_vec(doc.cut->y) << " epsilon "
       << format_element(doc.cut->epsilon);
    if (doc.cut->side == CutSide::le) os << " side le";
    os << "\n";
  }
  if (doc.blowup)
    os << "blowup vertex " << format_vec(doc.blowup->vertex) << " Y "
       << format_vec(doc.blowup->y) << " epsilon " << format_element(doc.blowup->epsilon)
       << "\n";
  return os.str();
}

}  // namespace quasicut
