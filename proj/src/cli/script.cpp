#include "infinireg/cli/script.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace infinireg {

std::string_view value_kind_name(ValueKind k) {
  switch (k) {
    case ValueKind::Ring: return "ring";
    case ValueKind::Elem: return "elem";
    case ValueKind::Splitting: return "splitting";
    case ValueKind::Hom: return "hom";
    case ValueKind::Bloch: return "bloch";
    case ValueKind::InfBloch: return "infbloch";
    case ValueKind::FWedge: return "fwedge";
    case ValueKind::Cech: return "cech";
  }
  return "?";
}

NamedSplitting CommandScript::splitting(const std::string& name, const std::string& ring_name) const {
  if (name == "tau0") return {ring_name, Splitting::zero(rings.at(ring_name))};
  const auto it = splittings.find(name);
  if (it == splittings.end()) throw Error(ErrorCode::UnknownIdent, "no splitting named '" + name + "'");
  return it->second;
}

NamedHom CommandScript::hom(const std::string& name) const {
  if (name == "id") return {primary, primary, AlgebraHom::identity(ring())};
  const auto it = homs.find(name);
  if (it == homs.end()) throw Error(ErrorCode::UnknownIdent, "no hom named '" + name + "'");
  return it->second;
}

namespace {

enum class Tok { Ident, Number, Punct, Arrow, Flag, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

[[noreturn]] void fail(ErrorCode code, SourcePos pos, const std::string& msg) {
  throw Error(code, std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t s = 0; s < k; ++s) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
    } else if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", pos});
      advance(2);
    } else if (c == '-' && i + 2 < text.size() && text[i + 1] == '-' && ident_start(text[i + 2])) {
      std::size_t j = i + 2;
      while (j < text.size() && (ident_char(text[j]) || text[j] == '-')) ++j;
      out.push_back({Tok::Flag, std::string(text.substr(i + 2, j - i - 2)), pos});
      advance(j - i);
    } else if (std::string_view("{}[]();,=+-*/^:").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), pos});
      advance(1);
    } else {
      fail(ErrorCode::ParseError, pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "end of input", pos});
  return out;
}

const std::set<std::string> kKeywords = {"ring", "elem", "splitting", "hom", "bloch", "infbloch", "fwedge", "cech",
                                         "cmd", "G1", "G2", "BASE", "tau0", "id", "opens", "consistent", "raw",
                                         "perturb", "xvars", "tvars"};

std::string strip_code(const Error& e) {
  const std::string w = e.what();
  const auto p = w.find(": ");
  return p == std::string::npos ? w : w.substr(p + 2);
}

/// Which arguments a command takes; checked at parse time.
struct CommandShape {
  std::vector<std::vector<ValueKind>> args;
  std::set<std::string> options;
};

const std::map<std::string, CommandShape>& command_shapes() {
  using K = ValueKind;
  static const std::map<std::string, CommandShape> shapes = {
      {"li2", {{{K::Splitting}, {K::Bloch, K::InfBloch}}, {"method"}}},
      {"delta", {{{K::Bloch, K::InfBloch}}, {}}},
      {"fiveterm", {{{K::Elem}, {K::Elem}}, {}}},
      {"logdlog", {{{K::FWedge, K::Bloch, K::InfBloch}}, {}}},
      {"homotopy", {{{K::Hom}, {K::Splitting}, {K::Splitting}, {K::FWedge, K::InfBloch}}, {}}},
      {"eqhom", {{{K::Hom}, {K::Splitting}, {K::Splitting}, {K::InfBloch}}, {}}},
  };
  return shapes;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  CommandScript run() {
    while (peek().kind != Tok::End) statement();
    if (script_.primary.empty()) fail(ErrorCode::ParseError, peek().pos, "script declares no ring");
    return std::move(script_);
  }

 private:
  // --- token helpers ---
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(at_ + k, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (at_ < toks_.size() - 1) ++at_;
    return t;
  }
  bool is_punct(const char* p, std::size_t k = 0) const { return peek(k).kind == Tok::Punct && peek(k).text == p; }
  bool accept(const char* p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }
  void expect(const char* p) {
    if (!accept(p)) fail(ErrorCode::ParseError, peek().pos, std::string("expected '") + p + "', found '" + peek().text + "'");
  }
  Token expect_ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail(ErrorCode::ParseError, peek().pos, "expected " + what + ", found '" + peek().text + "'");
    return next();
  }
  bool is_word(const char* w, std::size_t k = 0) const { return peek(k).kind == Tok::Ident && peek(k).text == w; }
  long expect_small_int(const std::string& what) {
    if (peek().kind != Tok::Number || peek().text.size() > 6) {
      fail(ErrorCode::ParseError, peek().pos, "expected " + what);
    }
    return std::stol(next().text);
  }

  // --- names ---
  bool reserved(const std::string& name) const {
    if (kKeywords.contains(name)) return true;
    for (const auto& [rn, spec] : script_.rings) {
      for (const auto& v : spec.xnames) if (v == name) return true;
      for (const auto& v : spec.tnames) if (v == name) return true;
    }
    return false;
  }
  void define(const Token& name, ValueKind kind) {
    if (reserved(name.text) || script_.kinds.contains(name.text)) {
      fail(ErrorCode::NameClash, name.pos, "name '" + name.text + "' is already in use");
    }
    script_.kinds[name.text] = kind;
  }
  ValueKind kind_of(const Token& name) const {
    const auto it = script_.kinds.find(name.text);
    if (it == script_.kinds.end()) fail(ErrorCode::UnknownIdent, name.pos, "unknown identifier '" + name.text + "'");
    return it->second;
  }
  const RingSpec& ring_named(const Token& name) const {
    if (kind_of(name) != ValueKind::Ring) fail(ErrorCode::ParseError, name.pos, "'" + name.text + "' is not a ring");
    return script_.rings.at(name.text);
  }
  void require_ring(SourcePos pos) const {
    if (script_.primary.empty()) fail(ErrorCode::ParseError, pos, "declare a ring first");
  }

  // Runs fn, attaching the position to evaluation errors.
  template <typename Fn>
  auto at(SourcePos pos, Fn&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const Error& e) {
      const ErrorCode c = e.code();
      if (c == ErrorCode::ParseError || c == ErrorCode::NameClash || c == ErrorCode::UnknownIdent) throw;
      fail(c, pos, strip_code(e));
    }
  }

  // --- statements ---
  void statement() {
    const Token kw = expect_ident("a statement keyword");
    if (kw.text != "ring") require_ring(kw.pos);
    if (kw.text == "ring") {
      ring_block();
    } else if (kw.text == "elem") {
      const Token name = expect_ident("a name");
      define(name, ValueKind::Elem);
      expect("=");
      script_.elems[name.text] = expr(script_.primary);
      expect(";");
    } else if (kw.text == "splitting") {
      const Token name = expect_ident("a name");
      define(name, ValueKind::Splitting);
      std::string ring = script_.primary;
      if (accept(":")) {
        const Token r = expect_ident("a ring name");
        ring_named(r);
        ring = r.text;
      }
      script_.splittings[name.text] = {ring, splitting_body(ring)};
      accept(";");
    } else if (kw.text == "hom") {
      hom_block();
    } else if (kw.text == "bloch") {
      const Token name = expect_ident("a name");
      define(name, ValueKind::Bloch);
      expect("=");
      script_.blochs[name.text] = bloch_sum();
      expect(";");
    } else if (kw.text == "infbloch") {
      const Token name = expect_ident("a name");
      define(name, ValueKind::InfBloch);
      expect("=");
      script_.infblochs[name.text] = inf_bloch_sum();
      expect(";");
    } else if (kw.text == "fwedge") {
      const Token name = expect_ident("a name");
      define(name, ValueKind::FWedge);
      expect("=");
      script_.fwedges[name.text] = fwedge_sum();
      expect(";");
    } else if (kw.text == "cech") {
      cech_block(kw.pos);
    } else if (kw.text == "cmd") {
      command(kw.pos);
    } else {
      fail(ErrorCode::ParseError, kw.pos, "unknown statement '" + kw.text + "'");
    }
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> names;
    expect("[");
    if (!accept("]")) {
      do {
        const Token v = expect_ident("a variable name");
        if (reserved(v.text) || script_.kinds.contains(v.text)) {
          fail(ErrorCode::NameClash, v.pos, "variable name '" + v.text + "' is already in use");
        }
        for (const auto& seen : names) {
          if (seen == v.text) fail(ErrorCode::NameClash, v.pos, "variable '" + v.text + "' listed twice");
        }
        names.push_back(v.text);
      } while (accept(","));
      expect("]");
    }
    return names;
  }

  void ring_block() {
    std::string name;
    if (peek().kind == Tok::Ident) {
      const Token t = next();
      define(t, ValueKind::Ring);
      name = t.text;
    } else {
      name = "ring" + std::to_string(script_.rings.size() + 1);
      define({Tok::Ident, name, peek().pos}, ValueKind::Ring);
    }
    const SourcePos pos = peek().pos;
    expect("{");
    std::optional<std::vector<std::string>> xs;
    std::optional<std::vector<std::string>> ts;
    while (!accept("}")) {
      const Token key = expect_ident("'xvars' or 'tvars'");
      if (key.text != "xvars" && key.text != "tvars") fail(ErrorCode::ParseError, key.pos, "expected 'xvars' or 'tvars'");
      auto& slot = key.text == "xvars" ? xs : ts;
      if (slot) fail(ErrorCode::ParseError, key.pos, key.text + " given twice");
      expect("=");
      slot = name_list();
      expect(";");
    }
    if (!xs || !ts) fail(ErrorCode::ParseError, pos, "a ring needs both xvars and tvars");
    for (const auto& x : *xs) {
      for (const auto& t : *ts) {
        if (x == t) fail(ErrorCode::NameClash, pos, "variable '" + x + "' is both an x and a t variable");
      }
    }
    RingSpec spec = at(pos, [&] { return RingSpec::make(static_cast<int>(xs->size()), static_cast<int>(ts->size())); });
    spec.xnames = *xs;
    spec.tnames = *ts;
    script_.rings[name] = spec;
    if (script_.primary.empty()) script_.primary = name;
  }

  // --- expressions in A = Q(x) + I ---
  SqZeroElement expr(const std::string& ring) {
    SqZeroElement acc = term(ring);
    while (is_punct("+") || is_punct("-")) {
      const Token op = next();
      const SqZeroElement rhs = term(ring);
      acc = op.text == "+" ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  SqZeroElement term(const std::string& ring) {
    SqZeroElement acc = unary(ring);
    while (is_punct("*") || is_punct("/")) {
      const Token op = next();
      const SqZeroElement rhs = unary(ring);
      acc = op.text == "*" ? acc * rhs : at(op.pos, [&] { return acc / rhs; });
    }
    return acc;
  }

  SqZeroElement unary(const std::string& ring) {
    if (accept("-")) return -unary(ring);
    if (accept("+")) return unary(ring);
    return power(ring);
  }

  SqZeroElement power(const std::string& ring) {
    SqZeroElement base = atom(ring);
    if (!is_punct("^")) return base;
    const Token op = next();
    const bool negative = accept("-");
    const long k = expect_small_int("an integer exponent");
    if (k > 64) fail(ErrorCode::ParseError, op.pos, "exponent too large");
    const int m = script_.rings.at(ring).m;
    SqZeroElement out = SqZeroElement::base(RatFunc(1), m);
    for (long s = 0; s < k; ++s) out = out * base;
    return negative ? at(op.pos, [&] { return sq_inv(out); }) : out;
  }

  SqZeroElement atom(const std::string& ring) {
    const RingSpec& spec = script_.rings.at(ring);
    if (accept("(")) {
      SqZeroElement e = expr(ring);
      expect(")");
      return e;
    }
    if (peek().kind == Tok::Number) {
      return SqZeroElement::base(RatFunc(Rational(next().text)), spec.m);
    }
    const Token id = expect_ident("an expression");
    for (int j = 0; j < spec.n; ++j) {
      if (spec.xname(j) == id.text) return SqZeroElement::base(RatFunc::variable(j), spec.m);
    }
    for (int i = 0; i < spec.m; ++i) {
      if (spec.tname(i) == id.text) {
        IVec v = ivec_zero(spec.m);
        v[static_cast<std::size_t>(i)] = RatFunc(1);
        return SqZeroElement::infinitesimal(v);
      }
    }
    if (kind_of(id) != ValueKind::Elem) {
      fail(ErrorCode::ParseError, id.pos, "'" + id.text + "' is a " + std::string(value_kind_name(kind_of(id))) +
                                              ", not an element");
    }
    if (ring != script_.primary) fail(ErrorCode::ParseError, id.pos, "elements live in the primary ring");
    return script_.elems.at(id.text);
  }

  RatFunc base_expr(const std::string& ring, const char* what) {
    const SourcePos pos = peek().pos;
    const SqZeroElement e = expr(ring);
    if (!ivec_is_zero(e.v)) fail(ErrorCode::ParseError, pos, std::string(what) + " must lie in the base");
    return e.u;
  }

  IVec ideal_expr(const std::string& ring, const char* what) {
    const SourcePos pos = peek().pos;
    const SqZeroElement e = expr(ring);
    if (!e.u.is_zero()) fail(ErrorCode::ParseError, pos, std::string(what) + " must lie in I");
    return e.v;
  }

  // --- splittings and homs ---
  Splitting splitting_body(const std::string& ring) {
    const RingSpec& spec = script_.rings.at(ring);
    std::vector<IVec> images(static_cast<std::size_t>(spec.n), ivec_zero(spec.m));
    std::vector<bool> seen(static_cast<std::size_t>(spec.n), false);
    expect("{");
    while (!accept("}")) {
      const Token v = expect_ident("a base variable");
      const int j = xvar_index(spec, v);
      if (seen[static_cast<std::size_t>(j)]) fail(ErrorCode::ParseError, v.pos, "image of '" + v.text + "' given twice");
      seen[static_cast<std::size_t>(j)] = true;
      if (peek().kind != Tok::Arrow) fail(ErrorCode::ParseError, peek().pos, "expected '->'");
      next();
      images[static_cast<std::size_t>(j)] = ideal_expr(ring, "a splitting image");
      expect(";");
    }
    return Splitting(std::move(images));
  }

  static int index_in(const VarNames& names, const std::string& v) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (names[j] == v) return static_cast<int>(j);
    }
    return -1;
  }

  int xvar_index(const RingSpec& spec, const Token& v) const {
    const int j = index_in(spec.xnames, v.text);
    if (j < 0) fail(ErrorCode::UnknownIdent, v.pos, "'" + v.text + "' is not a base variable of the ring");
    return j;
  }

  void hom_block() {
    const Token name = expect_ident("a name");
    define(name, ValueKind::Hom);
    std::string source = script_.primary;
    std::string target = script_.primary;
    if (accept(":")) {
      const Token s = expect_ident("a ring name");
      ring_named(s);
      if (peek().kind != Tok::Arrow) fail(ErrorCode::ParseError, peek().pos, "expected '->'");
      next();
      const Token t = expect_ident("a ring name");
      ring_named(t);
      source = s.text;
      target = t.text;
    }
    const RingSpec& src = script_.rings.at(source);
    const RingSpec& tgt = script_.rings.at(target);
    AlgebraHom f;
    f.source = src;
    f.target = tgt;
    std::vector<std::optional<SqZeroElement>> ximg(static_cast<std::size_t>(src.n));
    std::vector<std::optional<IVec>> timg(static_cast<std::size_t>(src.m));
    const SourcePos open = peek().pos;
    expect("{");
    while (!accept("}")) {
      const Token v = expect_ident("a generator of the source");
      if (peek().kind != Tok::Arrow) fail(ErrorCode::ParseError, peek().pos, "expected '->'");
      next();
      if (const int j = index_in(src.xnames, v.text); j >= 0) {
        if (ximg[static_cast<std::size_t>(j)]) fail(ErrorCode::ParseError, v.pos, "image of '" + v.text + "' given twice");
        ximg[static_cast<std::size_t>(j)] = expr(target);
      } else if (const int i = index_in(src.tnames, v.text); i >= 0) {
        if (timg[static_cast<std::size_t>(i)]) fail(ErrorCode::ParseError, v.pos, "image of '" + v.text + "' given twice");
        timg[static_cast<std::size_t>(i)] = ideal_expr(target, "the image of a t variable");
      } else {
        fail(ErrorCode::UnknownIdent, v.pos, "'" + v.text + "' is not a generator of the source ring");
      }
      expect(";");
    }
    for (int j = 0; j < src.n; ++j) {
      const auto& img = ximg[static_cast<std::size_t>(j)];
      if (!img && source != target) fail(ErrorCode::ParseError, open, "missing image of '" + src.xname(j) + "'");
      const SqZeroElement e = img ? *img : SqZeroElement::base(RatFunc::variable(j), tgt.m);
      f.px.push_back(e.u);
      f.phix.push_back(e.v);
    }
    for (int i = 0; i < src.m; ++i) {
      const auto& img = timg[static_cast<std::size_t>(i)];
      if (!img && source != target) fail(ErrorCode::ParseError, open, "missing image of '" + src.tname(i) + "'");
      IVec unit = ivec_zero(tgt.m);
      if (!img) unit[static_cast<std::size_t>(i)] = RatFunc(1);
      f.psit.push_back(img ? *img : unit);
    }
    at(open, [&] { f.validate(); });
    script_.homs[name.text] = {source, target, std::move(f)};
    accept(";");
  }

  // --- formal sums ---
  // sum := [sign] term (sign term)*, term := [p[/q] [*]] atom | named sum.
  template <typename Sum>
  Sum formal_sum(ValueKind kind, const std::map<std::string, Sum>& named,
                 const std::function<void(Sum&, const Rational&)>& atom_fn) {
    Sum total;
    bool first = true;
    while (true) {
      Rational sign = 1;
      if (accept("-")) {
        sign = -1;
      } else if (!accept("+") && !first) {
        break;
      }
      first = false;
      Rational c = 1;
      if (peek().kind == Tok::Number) {
        c = Rational(next().text);
        if (accept("/")) {
          const Token d = peek();
          if (d.kind != Tok::Number || d.text.find_first_not_of('0') == std::string::npos) {
            fail(ErrorCode::ParseError, d.pos, "expected a nonzero denominator");
          }
          c /= Rational(next().text);
        }
        if (!accept("*") && c == 0 && (is_punct(";") || is_punct("}"))) break;
      }
      c *= sign;
      if (peek().kind == Tok::Ident && script_.kinds.contains(peek().text)) {
        const Token id = next();
        if (kind_of(id) != kind) {
          fail(ErrorCode::ParseError, id.pos, "'" + id.text + "' is a " + std::string(value_kind_name(kind_of(id))) +
                                                  ", expected a " + std::string(value_kind_name(kind)));
        }
        total += named.at(id.text).scaled(c);
      } else {
        atom_fn(total, c);
      }
    }
    return total;
  }

  BlochSum bloch_sum() {
    return formal_sum<BlochSum>(ValueKind::Bloch, script_.blochs, [&](BlochSum& total, const Rational& c) {
      const SourcePos pos = peek().pos;
      expect("[");
      const SqZeroElement a = expr(script_.primary);
      expect("]");
      at(pos, [&] { total += BlochSum::generator(a, c); });
    });
  }

  InfBlochSum inf_bloch_sum() {
    return formal_sum<InfBlochSum>(ValueKind::InfBloch, script_.infblochs, [&](InfBlochSum& total, const Rational& c) {
      const SourcePos pos = peek().pos;
      const bool paren = accept("(");
      expect("[");
      const RatFunc u = base_expr(script_.primary, "the base point");
      expect(",");
      const IVec alpha = ideal_expr(script_.primary, "the infinitesimal shift");
      expect("]");
      if (paren) expect(")");
      at(pos, [&] { total.add(u, alpha, c); });
    });
  }

  FWedgeSum fwedge_sum() {
    return formal_sum<FWedgeSum>(ValueKind::FWedge, script_.fwedges, [&](FWedgeSum& total, const Rational& c) {
      const Token kind = expect_ident("G1, G2 or BASE");
      const std::string& ring = script_.primary;
      expect("(");
      WedgeTerm t;
      if (kind.text == "G1") {
        const IVec a = ideal_expr(ring, "a G1 argument");
        expect(",");
        t = WedgeTerm::g1(a, ideal_expr(ring, "a G1 argument"));
      } else if (kind.text == "G2") {
        const IVec a = ideal_expr(ring, "the first G2 argument");
        expect(",");
        t = WedgeTerm::g2(a, base_expr(ring, "the second G2 argument"));
      } else if (kind.text == "BASE") {
        const RatFunc u = base_expr(ring, "a BASE argument");
        expect(",");
        t = WedgeTerm::base(u, base_expr(ring, "a BASE argument"));
      } else {
        fail(ErrorCode::ParseError, kind.pos, "expected G1, G2 or BASE");
      }
      expect(")");
      at(kind.pos, [&] { total.add(t, c); });
    });
  }

  // --- cech blocks ---
  // Index words: c1 (section), b1 (wedge), a1_2 (pair).
  static std::optional<std::pair<int, int>> index_word(const std::string& w, char letter) {
    static const std::regex single("([a-z])([0-9]+)");
    static const std::regex pair("([a-z])([0-9]+)_([0-9]+)");
    std::smatch m;
    if (std::regex_match(w, m, single) && m[1].str()[0] == letter && m[2].length() < 6) {
      return std::pair{std::stoi(m[2].str()), 0};
    }
    if (std::regex_match(w, m, pair) && m[1].str()[0] == letter && m[2].length() < 6 && m[3].length() < 6) {
      return std::pair{std::stoi(m[2].str()), std::stoi(m[3].str())};
    }
    return std::nullopt;
  }

  int open_index(int k, int r, SourcePos pos) const {
    if (k < 1 || k > r) fail(ErrorCode::ParseError, pos, "open index " + std::to_string(k) + " outside 1.." + std::to_string(r));
    return k - 1;
  }

  void cech_block(SourcePos kw_pos) {
    std::string name;
    if (peek().kind == Tok::Ident) {
      const Token t = next();
      define(t, ValueKind::Cech);
      name = t.text;
    } else {
      name = "cech" + std::to_string(script_.cech_order.size() + 1);
      define({Tok::Ident, name, kw_pos}, ValueKind::Cech);
    }
    const RingSpec& spec = script_.ring();
    expect("{");
    if (!is_word("opens")) fail(ErrorCode::ParseError, peek().pos, "a cech block starts with 'opens = r'");
    next();
    expect("=");
    const SourcePos rpos = peek().pos;
    const int r = static_cast<int>(expect_small_int("the number of opens"));
    if (r < 2) fail(ErrorCode::ParseError, rpos, "a cover needs at least two opens");
    expect(";");
    CoverSetup cover{spec, std::vector<Splitting>(static_cast<std::size_t>(r), Splitting::zero(spec))};
    std::vector<InfBlochSum> sections(static_cast<std::size_t>(r));
    std::map<OpenPair, InfBlochSum> raw_a;
    std::vector<FWedgeSum> raw_b(static_cast<std::size_t>(r));
    std::vector<std::pair<int, FWedgeSum>> perturbations;
    bool consistent = false;
    bool raw = false;
    while (!accept("}")) {
      const Token kw = expect_ident("'splitting', 'consistent', 'raw' or 'perturb'");
      if (kw.text == "splitting") {
        const SourcePos ipos = peek().pos;
        const int i = open_index(static_cast<int>(expect_small_int("an open index")), r, ipos);
        if (accept("=")) {
          const Token ref = expect_ident("a splitting name");
          if (ref.text != "tau0" && kind_of(ref) != ValueKind::Splitting) {
            fail(ErrorCode::ParseError, ref.pos, "'" + ref.text + "' is not a splitting");
          }
          const NamedSplitting s = script_.splitting(ref.text, script_.primary);
          if (s.ring != script_.primary) fail(ErrorCode::ParseError, ref.pos, "splitting is not on the primary ring");
          cover.splittings[static_cast<std::size_t>(i)] = s.value;
          expect(";");
        } else {
          cover.splittings[static_cast<std::size_t>(i)] = splitting_body(script_.primary);
          accept(";");
        }
      } else if (kw.text == "consistent") {
        const Token w = expect_ident("a section name such as c1");
        const auto idx = index_word(w.text, 'c');
        if (!idx || idx->second != 0) fail(ErrorCode::ParseError, w.pos, "expected a section name such as c1");
        const int i = open_index(idx->first, r, w.pos);
        expect("=");
        sections[static_cast<std::size_t>(i)] = inf_bloch_sum();
        expect(";");
        consistent = true;
      } else if (kw.text == "raw" || kw.text == "perturb") {
        const Token w = expect_ident("a name such as a1_2 or b1");
        expect("=");
        if (const auto ia = index_word(w.text, 'a'); ia && ia->second != 0 && kw.text == "raw") {
          const int i = open_index(ia->first, r, w.pos);
          const int j = open_index(ia->second, r, w.pos);
          if (i == j) fail(ErrorCode::ParseError, w.pos, "a_ii is zero by definition");
          raw_a[{i, j}] = inf_bloch_sum();
          raw = true;
        } else if (const auto ib = index_word(w.text, 'b'); ib && ib->second == 0) {
          const int i = open_index(ib->first, r, w.pos);
          if (kw.text == "raw") {
            raw_b[static_cast<std::size_t>(i)] = fwedge_sum();
            raw = true;
          } else {
            perturbations.emplace_back(i, fwedge_sum());
          }
        } else {
          fail(ErrorCode::ParseError, w.pos, "expected a name such as a1_2 or b1");
        }
        expect(";");
      } else {
        fail(ErrorCode::ParseError, kw.pos, "unknown cech statement '" + kw.text + "'");
      }
      if (consistent && raw) fail(ErrorCode::ParseError, kw.pos, "a cech block is either consistent or raw");
    }
    CechBlock block{cover, raw ? CechDatum::raw(raw_a, raw_b) : CechDatum::consistent(sections)};
    for (const auto& [i, delta] : perturbations) block.data.perturb_b(i, delta);
    script_.cechs.emplace(name, std::move(block));
    script_.cech_order.push_back(name);
    accept(";");
  }

  // --- commands ---
  void command(SourcePos pos) {
    CommandRecord rec;
    rec.pos = pos;
    const Token name = expect_ident("a command name");
    rec.name = name.text;
    std::vector<Token> words;
    while (!accept(";")) {
      const Token t = next();
      if (t.kind == Tok::End) fail(ErrorCode::ParseError, t.pos, "expected ';'");
      if (t.kind == Tok::Flag) {
        std::string value;
        if (peek().kind == Tok::Ident || peek().kind == Tok::Number) value = next().text;
        rec.options[t.text] = value;
      } else if (t.kind == Tok::Ident || t.kind == Tok::Number) {
        words.push_back(t);
        rec.args.push_back(t.text);
      } else {
        fail(ErrorCode::ParseError, t.pos, "unexpected '" + t.text + "' in a command");
      }
    }
    check_command(name, words, rec.options);
    script_.commands.push_back(std::move(rec));
  }

  void check_option_value(const std::map<std::string, std::string>& options, SourcePos pos) const {
    if (const auto it = options.find("method"); it != options.end()) {
      if (it->second != "first" && it->second != "second" && it->second != "both") {
        fail(ErrorCode::ParseError, pos, "--method takes first, second or both");
      }
    }
    if (const auto it = options.find("cap"); it != options.end()) {
      if (it->second.empty() || it->second.find_first_not_of("0123456789") != std::string::npos || it->second.size() > 4) {
        fail(ErrorCode::ParseError, pos, "--cap takes a small non-negative integer");
      }
    }
  }

  void check_name_kind(const Token& w, const std::vector<ValueKind>& allowed) const {
    if (w.kind != Tok::Ident) fail(ErrorCode::ParseError, w.pos, "expected a name, found '" + w.text + "'");
    ValueKind k;
    if (w.text == "tau0") {
      k = ValueKind::Splitting;
    } else if (w.text == "id") {
      k = ValueKind::Hom;
    } else {
      k = kind_of(w);
    }
    for (const auto a : allowed) {
      if (a == k) return;
    }
    std::string expected;
    for (const auto a : allowed) expected += (expected.empty() ? "" : " or ") + std::string(value_kind_name(a));
    fail(ErrorCode::ParseError, w.pos,
         "'" + w.text + "' is a " + std::string(value_kind_name(k)) + ", expected " + expected);
  }

  void check_command(const Token& name, const std::vector<Token>& words,
                     const std::map<std::string, std::string>& options) const {
    check_option_value(options, name.pos);
    if (name.text == "print") {
      if (words.size() != 1) fail(ErrorCode::ParseError, name.pos, "print takes one name");
      if (words[0].text != "tau0" && words[0].text != "id") kind_of(words[0]);
      return;
    }
    if (name.text == "cech") {
      if (words.empty() || (words[0].text != "verify" && words[0].text != "rho1")) {
        fail(ErrorCode::ParseError, name.pos, "cech takes 'verify' or 'rho1'");
      }
      if (words.size() > 2) fail(ErrorCode::ParseError, words[2].pos, "too many arguments");
      if (words.size() == 2) check_name_kind(words[1], {ValueKind::Cech});
      for (const auto& [opt, v] : options) {
        if (opt != "cap" || words[0].text != "rho1") fail(ErrorCode::ParseError, name.pos, "unknown option --" + opt);
      }
      return;
    }
    const auto it = command_shapes().find(name.text);
    if (it == command_shapes().end()) fail(ErrorCode::ParseError, name.pos, "unknown command '" + name.text + "'");
    const CommandShape& shape = it->second;
    if (words.size() != shape.args.size()) {
      fail(ErrorCode::ParseError, name.pos,
           name.text + " takes " + std::to_string(shape.args.size()) + " arguments, got " + std::to_string(words.size()));
    }
    for (std::size_t k = 0; k < words.size(); ++k) check_name_kind(words[k], shape.args[k]);
    for (const auto& [opt, v] : options) {
      if (!shape.options.contains(opt)) fail(ErrorCode::ParseError, name.pos, "unknown option --" + opt);
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  CommandScript script_;
};

}  // namespace

CommandScript parse_script(std::string_view text) { return Parser(text).run(); }

CommandScript parse_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Precondition, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

}  // namespace infinireg
