#include "toposcope/parse.hpp"

#include <algorithm>
#include <sstream>

namespace toposcope::cli {

using syntax::Context;
using syntax::Formula;
using syntax::FormulaPtr;
using syntax::Sequent;
using syntax::Signature;
using syntax::Term;
using syntax::TermPtr;
using syntax::Theory;

namespace {

struct Token {
  enum class Type { Ident, Int, Sym, End };
  Type type = Type::End;
  std::string text;
  int line = 0;
  int col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  bool at(const std::string& s) const {
    return current_.type != Token::Type::End && current_.text == s;
  }
  bool at_ident() const { return current_.type == Token::Type::Ident; }
  bool at_int() const { return current_.type == Token::Type::Int; }
  bool at_end() const { return current_.type == Token::Type::End; }

  Token expect(const std::string& s) {
    if (!at(s)) fail("expected '" + s + "', found '" + describe() + "'");
    return take();
  }
  Token expect_ident() {
    if (!at_ident()) fail("expected an identifier, found '" + describe() + "'");
    return take();
  }
  Token expect_int() {
    if (!at_int()) fail("expected an integer, found '" + describe() + "'");
    return take();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, current_.line, current_.col);
  }

 private:
  std::string describe() const {
    return current_.type == Token::Type::End ? "end of input" : current_.text;
  }

  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    current_ = {};
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= text_.size()) {
      current_.type = Token::Type::End;
      return;
    }
    char c = text_[pos_];
    auto is_ident_start = [](char ch) {
      return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_';
    };
    auto is_ident = [&](char ch) {
      return is_ident_start(ch) || (ch >= '0' && ch <= '9') || ch == '\'';
    };
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
      current_.type = Token::Type::Ident;
      current_.text = text_.substr(start, pos_ - start);
    } else if (c >= '0' && c <= '9') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
      current_.type = Token::Type::Int;
      current_.text = text_.substr(start, pos_ - start);
    } else {
      static const std::vector<std::string> symbols = {
          "|-", "/\\", "\\/", "<->", "->", "(", ")", "{", "}", "[", "]",
          ",",  ";",   ":",   ".",   "=",  "~", "@"};
      current_.type = Token::Type::Sym;
      for (const auto& s : symbols) {
        if (text_.compare(pos_, s.size(), s) == 0) {
          current_.text = s;
          pos_ += s.size();
          col_ += static_cast<int>(s.size());
          return;
        }
      }
      throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, col_);
    }
    col_ += static_cast<int>(current_.text.size());
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

// ---- formulas ----

class FormulaParser {
 public:
  FormulaParser(Lexer& lex, const Signature& sig) : lex_(lex), sig_(sig) {}

  FormulaPtr formula() { return imp(); }

  TermPtr term() {
    Token name = lex_.expect_ident();
    if (lex_.at("(")) {
      lex_.take();
      std::vector<TermPtr> args;
      if (!lex_.at(")")) {
        args.push_back(term());
        while (lex_.at(",")) {
          lex_.take();
          args.push_back(term());
        }
      }
      lex_.expect(")");
      return Term::app(name.text, std::move(args));
    }
    return resolve_bare(name.text);
  }

 private:
  TermPtr resolve_bare(const std::string& name) {
    // a bare identifier is a constant when declared, a variable otherwise
    if (sig_.functions.count(name)) return Term::app(name);
    return Term::var(name);
  }

  FormulaPtr imp() {
    FormulaPtr lhs = disj();
    if (lex_.at("->")) {
      lex_.take();
      return syntax::implies(std::move(lhs), imp());
    }
    if (lex_.at("<->")) {
      lex_.take();
      FormulaPtr rhs = imp();
      return syntax::conj({syntax::implies(lhs, rhs), syntax::implies(rhs, lhs)});
    }
    return lhs;
  }

  FormulaPtr disj() {
    FormulaPtr first = conj();
    if (!lex_.at("\\/")) return first;
    std::vector<FormulaPtr> parts{std::move(first)};
    while (lex_.at("\\/")) {
      lex_.take();
      parts.push_back(conj());
    }
    return syntax::disj(std::move(parts));
  }

  FormulaPtr conj() {
    FormulaPtr first = unary();
    if (!lex_.at("/\\")) return first;
    std::vector<FormulaPtr> parts{std::move(first)};
    while (lex_.at("/\\")) {
      lex_.take();
      parts.push_back(unary());
    }
    return syntax::conj(std::move(parts));
  }

  FormulaPtr unary() {
    if (lex_.at("~")) {
      lex_.take();
      return syntax::neg(unary());
    }
    if (lex_.at("exists") || lex_.at("forall")) return quantifier();
    return atom();
  }

  FormulaPtr quantifier() {
    bool existential = lex_.take().text == "exists";
    std::vector<std::pair<std::string, std::string>> binders;
    while (true) {
      Token var = lex_.expect_ident();
      lex_.expect(":");
      Token sort = lex_.expect_ident();
      binders.emplace_back(var.text, sort.text);
      if (lex_.at(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    lex_.expect(".");
    FormulaPtr body = imp();
    return existential ? syntax::exists(std::move(binders), std::move(body))
                       : syntax::forall(std::move(binders), std::move(body));
  }

  FormulaPtr family(bool conjunctive) {
    lex_.expect("{");
    std::vector<FormulaPtr> parts;
    parts.push_back(formula());
    while (lex_.at(";")) {
      lex_.take();
      parts.push_back(formula());
    }
    lex_.expect("}");
    return conjunctive ? syntax::big_conj(std::move(parts))
                       : syntax::big_disj(std::move(parts));
  }

  FormulaPtr atom() {
    if (lex_.at("top")) {
      lex_.take();
      return syntax::truth();
    }
    if (lex_.at("bot")) {
      lex_.take();
      return syntax::falsity();
    }
    if (lex_.at("\\/")) {
      lex_.take();
      return family(false);
    }
    if (lex_.at("/\\")) {
      lex_.take();
      return family(true);
    }
    if (lex_.at("(")) {
      lex_.take();
      FormulaPtr f = formula();
      lex_.expect(")");
      return f;
    }
    Token name = lex_.expect_ident();
    if (lex_.at("(")) {
      lex_.take();
      std::vector<TermPtr> args;
      if (!lex_.at(")")) {
        args.push_back(term());
        while (lex_.at(",")) {
          lex_.take();
          args.push_back(term());
        }
      }
      lex_.expect(")");
      if (lex_.at("=")) {
        lex_.take();
        return syntax::eq(Term::app(name.text, std::move(args)), term());
      }
      return syntax::rel(name.text, std::move(args));
    }
    if (lex_.at("=")) {
      lex_.take();
      return syntax::eq(resolve_bare(name.text), term());
    }
    return syntax::rel(name.text);
  }

  Lexer& lex_;
  const Signature& sig_;
};

Context parse_context(Lexer& lex) {
  Context ctx;
  while (true) {
    Token var = lex.expect_ident();
    lex.expect(":");
    Token sort = lex.expect_ident();
    ctx.vars.emplace_back(var.text, sort.text);
    if (lex.at(",")) {
      lex.take();
      continue;
    }
    break;
  }
  ctx.validate();
  return ctx;
}

Sequent parse_sequent(Lexer& lex, const Signature& sig) {
  FormulaParser fp(lex, sig);
  FormulaPtr lhs = fp.formula();
  lex.expect("|-");
  Context ctx;
  if (lex.at("[")) {
    lex.take();
    ctx = parse_context(lex);
    lex.expect("]");
  }
  FormulaPtr rhs = fp.formula();
  return {std::move(ctx), std::move(lhs), std::move(rhs)};
}

}  // namespace

// ---- theory files ----

Theory parse_theory(const std::string& text) {
  Lexer lex(text);
  Theory t;
  bool fragment_declared = false;

  while (!lex.at_end()) {
    if (lex.at("sort")) {
      lex.take();
      while (lex.at_ident()) t.signature.add_sort(lex.take().text);
      lex.expect(".");
    } else if (lex.at("rel")) {
      lex.take();
      Token name = lex.expect_ident();
      std::vector<std::string> args;
      if (lex.at("(")) {
        lex.take();
        if (!lex.at(")")) {
          args.push_back(lex.expect_ident().text);
          while (lex.at(",")) {
            lex.take();
            args.push_back(lex.expect_ident().text);
          }
        }
        lex.expect(")");
      }
      t.signature.add_relation(name.text, std::move(args));
      lex.expect(".");
    } else if (lex.at("fun")) {
      lex.take();
      Token name = lex.expect_ident();
      std::vector<std::string> args;
      if (lex.at("(")) {
        lex.take();
        if (!lex.at(")")) {
          args.push_back(lex.expect_ident().text);
          while (lex.at(",")) {
            lex.take();
            args.push_back(lex.expect_ident().text);
          }
        }
        lex.expect(")");
      }
      lex.expect(":");
      Token result = lex.expect_ident();
      t.signature.add_function(name.text, std::move(args), result.text);
      lex.expect(".");
    } else if (lex.at("atoms")) {
      lex.take();
      while (lex.at_ident()) t.signature.add_atom(lex.take().text);
      lex.expect(".");
    } else if (lex.at("fragment")) {
      lex.take();
      Token tag = lex.expect_ident();
      if (tag.text == "geometric") t.fragment = syntax::FragmentTag::Geometric;
      else if (tag.text == "sfo") t.fragment = syntax::FragmentTag::SubFirstOrder;
      else if (tag.text == "fo") t.fragment = syntax::FragmentTag::FirstOrder;
      else lex.fail("unknown fragment tag: " + tag.text);
      fragment_declared = true;
      lex.expect(".");
    } else if (lex.at("axiom")) {
      lex.take();
      t.axioms.push_back(parse_sequent(lex, t.signature));
      lex.expect(".");
    } else {
      lex.fail("expected a declaration");
    }
  }

  if (!fragment_declared) t.fragment = t.computed_fragment();
  t.validate();
  return t;
}

FormulaPtr parse_formula(const std::string& text, const Signature& sig, const Context& ctx) {
  Lexer lex(text);
  FormulaParser fp(lex, sig);
  FormulaPtr f = fp.formula();
  if (!lex.at_end()) lex.fail("trailing input after formula");
  syntax::check_well_formed(*f, sig, ctx);
  return f;
}

std::string print_theory(const Theory& t) {
  std::ostringstream out;
  if (!t.signature.sorts.empty()) {
    out << "sort";
    for (const auto& s : t.signature.sorts) out << " " << s;
    out << ".\n";
  }
  for (const auto& [name, args] : t.signature.relations) {
    out << "rel " << name;
    if (!args.empty()) {
      out << "(";
      for (std::size_t i = 0; i < args.size(); ++i) out << (i ? ", " : "") << args[i];
      out << ")";
    }
    out << ".\n";
  }
  for (const auto& [name, decl] : t.signature.functions) {
    out << "fun " << name;
    if (!decl.args.empty()) {
      out << "(";
      for (std::size_t i = 0; i < decl.args.size(); ++i)
        out << (i ? ", " : "") << decl.args[i];
      out << ")";
    }
    out << " : " << decl.result << ".\n";
  }
  switch (t.fragment) {
    case syntax::FragmentTag::Geometric: out << "fragment geometric.\n"; break;
    case syntax::FragmentTag::SubFirstOrder: out << "fragment sfo.\n"; break;
    case syntax::FragmentTag::FirstOrder: out << "fragment fo.\n"; break;
  }
  for (const auto& ax : t.axioms) out << "axiom " << syntax::to_text(ax) << ".\n";
  return out.str();
}

// ---- category files ----

const fincat::Presheaf* CategoryDocument::find_presheaf(const std::string& name) const {
  for (const auto& [n, p] : presheaves)
    if (n == name) return &p;
  return nullptr;
}

namespace {

struct RawPresheaf {
  std::string name;
  std::vector<std::pair<std::string, std::vector<std::string>>> carriers;  // object -> names
  // arrow name -> (from-element, to-element) pairs
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> acts;
};

CategoryDocument build_category(Lexer& lex, bool braced) {
  std::vector<std::string> objects;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  std::vector<std::tuple<std::string, std::string, std::string>> composites;
  std::vector<RawPresheaf> raw_presheaves;

  auto at_end = [&] { return braced ? lex.at("}") : lex.at_end(); };

  while (!at_end()) {
    if (lex.at("objects")) {
      lex.take();
      while (lex.at_ident()) objects.push_back(lex.take().text);
      lex.expect(".");
    } else if (lex.at("arrow")) {
      lex.take();
      Token name = lex.expect_ident();
      lex.expect(":");
      Token src = lex.expect_ident();
      lex.expect("->");
      Token tgt = lex.expect_ident();
      lex.expect(".");
      arrows.emplace_back(name.text, src.text, tgt.text);
    } else if (lex.at("compose")) {
      lex.take();
      Token g = lex.expect_ident();
      Token o = lex.expect_ident();
      if (o.text != "o") lex.fail("expected 'o' in composition");
      Token f = lex.expect_ident();
      lex.expect("=");
      Token h = lex.expect_ident();
      lex.expect(".");
      composites.emplace_back(g.text, f.text, h.text);
    } else if (lex.at("presheaf")) {
      lex.take();
      RawPresheaf rp;
      rp.name = lex.expect_ident().text;
      lex.expect("{");
      while (!lex.at("}")) {
        if (lex.at("on")) {
          lex.take();
          Token obj = lex.expect_ident();
          lex.expect(":");
          std::vector<std::string> names;
          while (lex.at_ident()) names.push_back(lex.take().text);
          lex.expect(".");
          rp.carriers.emplace_back(obj.text, std::move(names));
        } else if (lex.at("act")) {
          lex.take();
          Token arrow = lex.expect_ident();
          lex.expect(":");
          std::vector<std::pair<std::string, std::string>> pairs;
          while (true) {
            Token from = lex.expect_ident();
            lex.expect("->");
            Token to = lex.expect_ident();
            pairs.emplace_back(from.text, to.text);
            if (lex.at(",")) {
              lex.take();
              continue;
            }
            break;
          }
          lex.expect(".");
          rp.acts.emplace_back(arrow.text, std::move(pairs));
        } else {
          lex.fail("expected 'on' or 'act' in presheaf block");
        }
      }
      lex.expect("}");
      raw_presheaves.push_back(std::move(rp));
    } else {
      lex.fail("expected 'objects', 'arrow', 'compose' or 'presheaf'");
    }
  }

  fincat::FinCategory::Builder builder;
  std::map<std::string, int> object_id;
  for (const auto& o : objects) object_id[o] = builder.add_object(o);
  std::map<std::string, int> arrow_id;
  for (const auto& [name, src, tgt] : arrows) {
    if (!object_id.count(src) || !object_id.count(tgt))
      throw WellFormednessError("arrow " + name + " uses an undeclared object");
    arrow_id[name] = builder.add_arrow(name, object_id[src], object_id[tgt]);
  }
  // identity names become available after build; composites may cite them
  auto lookup = [&](const std::string& name) -> int {
    auto it = arrow_id.find(name);
    if (it != arrow_id.end()) return it->second;
    if (name.rfind("id_", 0) == 0) {
      auto oit = object_id.find(name.substr(3));
      if (oit != object_id.end())
        return static_cast<int>(arrows.size()) + oit->second;
    }
    throw WellFormednessError("unknown arrow: " + name);
  };
  for (const auto& [g, f, h] : composites)
    builder.set_compose(lookup(g), lookup(f), lookup(h));

  CategoryDocument doc;
  doc.category = std::make_unique<fincat::FinCategory>(builder.build());
  const fincat::FinCategory& cat = *doc.category;

  for (const auto& rp : raw_presheaves) {
    fincat::Presheaf p;
    p.cat = &cat;
    p.elems.resize(cat.num_objects());
    for (const auto& [obj, names] : rp.carriers) {
      int c = cat.find_object(obj);
      if (c < 0) throw WellFormednessError("presheaf " + rp.name + " on unknown object " + obj);
      p.elems[c] = names;
    }
    auto element_index = [&](int obj, const std::string& name) -> int {
      const auto& names = p.elems[obj];
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end())
        throw WellFormednessError("unknown element " + name + " of presheaf " + rp.name);
      return static_cast<int>(it - names.begin());
    };
    p.action.resize(cat.num_arrows());
    for (std::size_t f = 0; f < cat.num_arrows(); ++f) {
      const auto& a = cat.arrow(static_cast<int>(f));
      if (cat.is_identity(static_cast<int>(f))) {
        p.action[f].resize(p.elems[a.tgt].size());
        for (std::size_t i = 0; i < p.action[f].size(); ++i)
          p.action[f][i] = static_cast<int>(i);
        continue;
      }
      p.action[f].assign(p.elems[a.tgt].size(), -1);
      for (const auto& [arrow_name, pairs] : rp.acts) {
        if (cat.find_arrow(arrow_name) != static_cast<int>(f)) continue;
        for (const auto& [from, to] : pairs)
          p.action[f][element_index(a.tgt, from)] = element_index(a.src, to);
      }
      for (int v : p.action[f])
        if (v < 0)
          throw WellFormednessError("presheaf " + rp.name + " is missing the action of " +
                                    a.name);
    }
    p.validate();
    doc.presheaves.emplace_back(rp.name, std::move(p));
  }
  return doc;
}

}  // namespace

CategoryDocument parse_category(const std::string& text) {
  Lexer lex(text);
  CategoryDocument doc = build_category(lex, false);
  return doc;
}

std::string print_category(const fincat::FinCategory& c) {
  std::ostringstream out;
  out << "objects";
  for (std::size_t o = 0; o < c.num_objects(); ++o) out << " " << c.object_name(static_cast<int>(o));
  out << ".\n";
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    if (c.is_identity(static_cast<int>(f))) continue;
    const auto& a = c.arrow(static_cast<int>(f));
    out << "arrow " << a.name << " : " << c.object_name(a.src) << " -> "
        << c.object_name(a.tgt) << ".\n";
  }
  for (std::size_t g = 0; g < c.num_arrows(); ++g) {
    if (c.is_identity(static_cast<int>(g))) continue;
    for (std::size_t f = 0; f < c.num_arrows(); ++f) {
      if (c.is_identity(static_cast<int>(f))) continue;
      const auto& af = c.arrow(static_cast<int>(f));
      const auto& ag = c.arrow(static_cast<int>(g));
      if (af.tgt != ag.src) continue;
      out << "compose " << ag.name << " o " << af.name << " = "
          << c.arrow(c.compose(static_cast<int>(g), static_cast<int>(f))).name << ".\n";
    }
  }
  return out.str();
}

// ---- structure files ----

namespace {

std::string parse_tuple_name(Lexer& lex) {
  // "(a, b)" or "()" or a bare identifier (rank-1 shorthand)
  if (lex.at_ident()) return "(" + lex.take().text + ")";
  lex.expect("(");
  std::string out = "(";
  bool first = true;
  while (!lex.at(")")) {
    if (!first) {
      lex.expect(",");
      out += ",";
    }
    out += lex.expect_ident().text;
    first = false;
  }
  lex.expect(")");
  return out + ")";
}

int tuple_index(const fincat::ProductPresheaf& domain, int obj, const std::string& name) {
  const auto& names = domain.presheaf.elems[obj];
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw WellFormednessError("unknown tuple element " + name);
  return static_cast<int>(it - names.begin());
}

}  // namespace

semantics::PropStructure StructureDocument::prop_structure() const {
  if (is_presheaf()) throw WellFormednessError("structure is not propositional");
  semantics::PropStructure m;
  m.target = heyting.get();
  m.assignment = assignment;
  return m;
}

StructureDocument parse_structure(const std::string& text, const Signature& sig) {
  Lexer lex(text);
  StructureDocument doc;
  std::map<std::string, std::string> sort_to_presheaf;
  // raw relation/function tables: name -> per-object entries
  std::map<std::string, std::vector<std::tuple<std::string, std::string, std::string>>> raw_funs;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> raw_rels;

  while (!lex.at_end()) {
    if (lex.at("algebra")) {
      lex.take();
      if (lex.at("chain")) {
        lex.take();
        int n = std::stoi(lex.expect_int().text);
        doc.heyting = std::make_unique<algebra::FinHeyting>(algebra::FinHeyting::chain(n));
      } else if (lex.at("boolean")) {
        lex.take();
        int k = std::stoi(lex.expect_int().text);
        doc.heyting =
            std::make_unique<algebra::FinHeyting>(algebra::FinHeyting::boolean_powerset(k));
      } else {
        lex.fail("expected 'chain' or 'boolean'");
      }
      lex.expect(".");
    } else if (lex.at("assign")) {
      lex.take();
      Token atom = lex.expect_ident();
      lex.expect("=");
      int value = std::stoi(lex.expect_int().text);
      lex.expect(".");
      doc.assignment[atom.text] = value;
    } else if (lex.at("category")) {
      lex.take();
      lex.expect("{");
      doc.catdoc = std::make_unique<CategoryDocument>(build_category(lex, true));
      lex.expect("}");
    } else if (lex.at("sort")) {
      lex.take();
      Token sort = lex.expect_ident();
      lex.expect("=");
      Token presheaf = lex.expect_ident();
      lex.expect(".");
      sort_to_presheaf[sort.text] = presheaf.text;
    } else if (lex.at("rel")) {
      lex.take();
      Token name = lex.expect_ident();
      lex.expect("{");
      while (lex.at("on")) {
        lex.take();
        Token obj = lex.expect_ident();
        lex.expect(":");
        while (!lex.at(".")) {
          raw_rels[name.text].emplace_back(obj.text, parse_tuple_name(lex));
          if (lex.at(",")) lex.take();
        }
        lex.expect(".");
      }
      lex.expect("}");
    } else if (lex.at("fun")) {
      lex.take();
      Token name = lex.expect_ident();
      lex.expect("{");
      while (lex.at("on")) {
        lex.take();
        Token obj = lex.expect_ident();
        lex.expect(":");
        while (!lex.at(".")) {
          std::string from = parse_tuple_name(lex);
          lex.expect("->");
          std::string to = lex.expect_ident().text;
          raw_funs[name.text].emplace_back(obj.text, from, to);
          if (lex.at(",")) lex.take();
        }
        lex.expect(".");
      }
      lex.expect("}");
    } else {
      lex.fail("expected a structure declaration");
    }
  }

  if (doc.heyting) {
    // propositional mode: atoms must be declared 0-ary relations
    for (const auto& [atom, value] : doc.assignment) {
      auto it = sig.relations.find(atom);
      if (it == sig.relations.end() || !it->second.empty())
        throw WellFormednessError("assign: " + atom + " is not a propositional atom");
      if (value < 0 || value >= static_cast<int>(doc.heyting->size()))
        throw WellFormednessError("assign: element out of range for " + atom);
    }
    return doc;
  }

  if (!doc.catdoc) throw WellFormednessError("structure file declares no target");

  auto structure = std::make_unique<semantics::PresheafStructure>();
  structure->cat = doc.catdoc->category.get();
  structure->signature = &sig;
  for (const auto& s : sig.sorts) {
    auto it = sort_to_presheaf.find(s);
    if (it == sort_to_presheaf.end())
      throw WellFormednessError("sort " + s + " has no presheaf");
    const fincat::Presheaf* p = doc.catdoc->find_presheaf(it->second);
    if (!p) throw WellFormednessError("unknown presheaf " + it->second);
    structure->sorts[s] = p;
  }

  for (const auto& [name, argsorts] : sig.relations) {
    std::vector<const fincat::Presheaf*> factors;
    for (const auto& s : argsorts) factors.push_back(structure->sorts.at(s));
    doc.domains.push_back(std::make_unique<fincat::ProductPresheaf>(
        fincat::product(*structure->cat, factors)));
    const auto& domain = *doc.domains.back();
    fincat::Subpresheaf s = fincat::Subpresheaf::none(domain.presheaf);
    auto it = raw_rels.find(name);
    if (it != raw_rels.end()) {
      for (const auto& [obj, tuple] : it->second) {
        int c = structure->cat->find_object(obj);
        if (c < 0) throw WellFormednessError("unknown object " + obj);
        s.sets[c].set(tuple_index(domain, c, tuple));
      }
    }
    s.validate();
    structure->relations.emplace(name, std::move(s));
  }

  for (const auto& [name, decl] : sig.functions) {
    std::vector<const fincat::Presheaf*> factors;
    for (const auto& s : decl.args) factors.push_back(structure->sorts.at(s));
    doc.domains.push_back(std::make_unique<fincat::ProductPresheaf>(
        fincat::product(*structure->cat, factors)));
    const auto& domain = *doc.domains.back();
    const fincat::Presheaf& result = *structure->sorts.at(decl.result);
    fincat::NatTrans h;
    h.src = &domain.presheaf;
    h.dst = &result;
    h.component.resize(structure->cat->num_objects());
    for (std::size_t o = 0; o < h.component.size(); ++o)
      h.component[o].assign(domain.presheaf.carrier(static_cast<int>(o)), -1);
    auto it = raw_funs.find(name);
    if (it != raw_funs.end()) {
      for (const auto& [obj, from, to] : it->second) {
        int c = structure->cat->find_object(obj);
        if (c < 0) throw WellFormednessError("unknown object " + obj);
        const auto& names = result.elems[c];
        auto eit = std::find(names.begin(), names.end(), to);
        if (eit == names.end()) throw WellFormednessError("unknown element " + to);
        h.component[c][tuple_index(domain, c, from)] =
            static_cast<int>(eit - names.begin());
      }
    }
    for (const auto& comp : h.component)
      for (int v : comp)
        if (v < 0)
          throw WellFormednessError("function " + name + " is not total in the structure");
    h.validate();
    structure->functions.emplace(name, std::move(h));
  }

  structure->validate();
  doc.presheaf = std::move(structure);
  return doc;
}

// ---- proof files ----

kernel::ProofTree parse_proof(const std::string& text, const Theory& theory) {
  Lexer lex(text);
  std::map<std::string, kernel::ProofTree> steps;
  std::string root_name;

  while (!lex.at_end()) {
    if (lex.at("step")) {
      lex.take();
      Token name = lex.expect_ident();
      lex.expect("=");
      Token rule_name = lex.expect_ident();
      auto rule = kernel::rule_by_name(rule_name.text);
      if (!rule) lex.fail("unknown rule: " + rule_name.text);

      kernel::ProofTree node;
      node.rule = *rule;

      std::vector<std::string> raw_args;
      if (lex.at("@")) {
        lex.take();
        while (true) {
          if (lex.at_int()) {
            raw_args.push_back(lex.take().text);
          } else {
            // parse a term and re-serialize it for the side data
            FormulaParser fp(lex, theory.signature);
            node.side.terms.push_back(fp.term());
          }
          if (lex.at(",")) {
            lex.take();
            continue;
          }
          break;
        }
      }
      for (const auto& a : raw_args) node.side.index = std::stoul(a);

      if (lex.at("from")) {
        lex.take();
        while (true) {
          Token premise = lex.expect_ident();
          auto it = steps.find(premise.text);
          if (it == steps.end()) lex.fail("unknown premise step: " + premise.text);
          node.premises.push_back(it->second);
          if (lex.at(",")) {
            lex.take();
            continue;
          }
          break;
        }
      }

      lex.expect(":");
      node.conclusion = parse_sequent(lex, theory.signature);
      lex.expect(".");
      steps[name.text] = std::move(node);
    } else if (lex.at("root")) {
      lex.take();
      root_name = lex.expect_ident().text;
      lex.expect(".");
    } else {
      lex.fail("expected 'step' or 'root'");
    }
  }

  if (root_name.empty()) throw WellFormednessError("proof file has no root");
  auto it = steps.find(root_name);
  if (it == steps.end()) throw WellFormednessError("root step not found: " + root_name);
  return it->second;
}

}  // namespace toposcope::cli
