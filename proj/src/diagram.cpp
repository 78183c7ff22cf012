#include "weakhopf/diagram.hpp"

#include <cctype>

namespace weakhopf {

std::string format_word(const ObjWord& w) {
  if (w.empty()) return "⊤";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += w[i];
  }
  return out;
}

SyntaxError::SyntaxError(std::size_t offset, const std::string& what)
    : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

TypeMismatch::TypeMismatch(ObjWord expected, ObjWord found)
    : Error("type mismatch: " + format_word(expected) + " vs " + format_word(found)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

UnboundGenerator::UnboundGenerator(const std::string& name) : Error("unbound generator '" + name + "'") {}

UnboundObject::UnboundObject(const std::string& name) : Error("unbound object '" + name + "'") {}

namespace {

TermPtr make(MorTerm t) { return std::make_shared<const MorTerm>(std::move(t)); }

}  // namespace

TermPtr gen(std::string name) { return make({MorTerm::Kind::Gen, std::move(name), {}, {}, nullptr, nullptr}); }
TermPtr id(ObjWord w) { return make({MorTerm::Kind::Id, "", std::move(w), {}, nullptr, nullptr}); }
TermPtr seq(TermPtr f, TermPtr g) {
  return make({MorTerm::Kind::Compose, "", {}, {}, std::move(f), std::move(g)});
}
TermPtr tensor(TermPtr f, TermPtr g) {
  return make({MorTerm::Kind::Tensor, "", {}, {}, std::move(f), std::move(g)});
}
TermPtr braid_term(ObjWord a, ObjWord b) {
  return make({MorTerm::Kind::Braid, "", std::move(a), std::move(b), nullptr, nullptr});
}
TermPtr braid_inv_term(ObjWord a, ObjWord b) {
  return make({MorTerm::Kind::BraidInv, "", std::move(a), std::move(b), nullptr, nullptr});
}

bool same_term(const MorTerm& a, const MorTerm& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case MorTerm::Kind::Gen:
      return a.name == b.name;
    case MorTerm::Kind::Id:
      return a.word == b.word;
    case MorTerm::Kind::Braid:
    case MorTerm::Kind::BraidInv:
      return a.word == b.word && a.other == b.other;
    case MorTerm::Kind::Compose:
    case MorTerm::Kind::Tensor:
      return same_term(*a.first, *b.first) && same_term(*a.second, *b.second);
  }
  return false;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  TermPtr parse() {
    TermPtr t = parse_seq();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return t;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  bool at_ident() {
    skip_ws();
    return pos_ < src_.size() && ident_start(src_[pos_]);
  }

  std::string ident() {
    if (!at_ident()) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  TermPtr parse_seq() {
    TermPtr t = parse_tensor();
    while (peek(';')) {
      ++pos_;
      t = seq(t, parse_tensor());
    }
    return t;
  }

  TermPtr parse_tensor() {
    TermPtr t = parse_atom();
    while (peek('*')) {
      ++pos_;
      t = tensor(t, parse_atom());
    }
    return t;
  }

  ObjWord parse_word(char stop_a, char stop_b) {
    ObjWord w;
    while (true) {
      skip_ws();
      if (pos_ < src_.size() && (src_[pos_] == stop_a || src_[pos_] == stop_b)) return w;
      w.push_back(ident());
    }
  }

  TermPtr parse_atom() {
    skip_ws();
    if (peek('(')) {
      ++pos_;
      TermPtr t = parse_seq();
      expect(')');
      return t;
    }
    if (!at_ident()) fail(pos_ < src_.size() ? "expected a term" : "unexpected end of input");
    std::size_t start = pos_;
    std::string name = ident();
    if (name == "id" || name == "braid" || name == "braid_inv") {
      if (!peek('(')) {
        pos_ = start;
        fail("'" + name + "' must be followed by '('");
      }
      ++pos_;
      if (name == "id") {
        ObjWord w = parse_word(')', ')');
        expect(')');
        return id(std::move(w));
      }
      ObjWord a = parse_word(',', ',');
      expect(',');
      ObjWord b = parse_word(')', ')');
      expect(')');
      return name == "braid" ? braid_term(std::move(a), std::move(b))
                             : braid_inv_term(std::move(a), std::move(b));
    }
    return gen(std::move(name));
  }
};

std::string word_text(const ObjWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += w[i];
  }
  return out;
}

std::string print_rec(const MorTerm& t, int context) {
  // context 0: top level or left of ';'. 1: right of ';' or left of '*'. 2: right of '*'.
  using K = MorTerm::Kind;
  switch (t.kind) {
    case K::Gen:
      return t.name;
    case K::Id:
      return "id(" + word_text(t.word) + ")";
    case K::Braid:
      return "braid(" + word_text(t.word) + "," + word_text(t.other) + ")";
    case K::BraidInv:
      return "braid_inv(" + word_text(t.word) + "," + word_text(t.other) + ")";
    case K::Compose: {
      std::string s = print_rec(*t.first, 0) + " ; " + print_rec(*t.second, 1);
      return context >= 1 ? "(" + s + ")" : s;
    }
    case K::Tensor: {
      std::string s = print_rec(*t.first, 1) + " * " + print_rec(*t.second, 2);
      return context >= 2 ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace

TermPtr parse_term(std::string_view src) { return Parser(src).parse(); }

std::string print_term(const MorTerm& t) { return print_rec(t, 0); }

// ---------------------------------------------------------------- environment

void GenEnv::bind_object(const std::string& name, std::size_t dim) { objects_[name] = dim; }

std::size_t GenEnv::dim(const std::string& object) const {
  auto it = objects_.find(object);
  if (it == objects_.end()) throw UnboundObject(object);
  return it->second;
}

std::size_t GenEnv::dim(const ObjWord& w) const {
  std::size_t d = 1;
  for (const auto& x : w) d *= dim(x);
  return d;
}

void GenEnv::bind(const std::string& name, ObjWord dom, ObjWord cod, Mat m) {
  std::size_t dd = dim(dom), dc = dim(cod);
  if (m.rows() != dc || m.cols() != dd)
    throw ShapeError("generator '" + name + "' has shape " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected " + std::to_string(dc) + "x" +
                     std::to_string(dd));
  gens_[name] = Generator{std::move(dom), std::move(cod), std::move(m)};
}

const Generator& GenEnv::generator(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw UnboundGenerator(name);
  return it->second;
}

// ---------------------------------------------------------------- typing and evaluation

namespace {

ObjWord concat(ObjWord a, const ObjWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void check_objects(const ObjWord& w, const GenEnv& env) {
  for (const auto& x : w) env.dim(x);
}

}  // namespace

Boundary typecheck(const MorTerm& t, const GenEnv& env) {
  using K = MorTerm::Kind;
  switch (t.kind) {
    case K::Gen: {
      const auto& g = env.generator(t.name);
      return {g.dom, g.cod};
    }
    case K::Id:
      check_objects(t.word, env);
      return {t.word, t.word};
    case K::Braid:
      check_objects(t.word, env);
      check_objects(t.other, env);
      return {concat(t.word, t.other), concat(t.other, t.word)};
    case K::BraidInv:
      check_objects(t.word, env);
      check_objects(t.other, env);
      return {concat(t.other, t.word), concat(t.word, t.other)};
    case K::Compose: {
      Boundary f = typecheck(*t.first, env);
      Boundary g = typecheck(*t.second, env);
      if (f.cod != g.dom) throw TypeMismatch(f.cod, g.dom);
      return {f.dom, g.cod};
    }
    case K::Tensor: {
      Boundary f = typecheck(*t.first, env);
      Boundary g = typecheck(*t.second, env);
      return {concat(f.dom, g.dom), concat(f.cod, g.cod)};
    }
  }
  return {};
}

namespace {

// Computes (I_left (x) t (x) I_right) * m, or with t replaced by its transpose
// when `transposed` is set. Terms are walked structurally so that identities and
// braidings never materialize as large matrices.
Mat apply(const MorTerm& t, const GenEnv& env, std::size_t left, std::size_t right, const Mat& m,
          bool transposed) {
  using K = MorTerm::Kind;
  switch (t.kind) {
    case K::Gen: {
      const auto& g = env.generator(t.name);
      return apply_on_factor(transposed ? g.mat.transpose() : g.mat, left, right, m);
    }
    case K::Id:
      return m;
    case K::Braid:
    case K::BraidInv: {
      std::size_t a = env.dim(t.word), b = env.dim(t.other);
      // Input factor order: Braid consumes (a, b); BraidInv consumes (b, a).
      // Transposition of a permutation is its inverse, which swaps the roles.
      bool input_ab = (t.kind == K::Braid) != transposed;
      std::vector<std::size_t> dims = input_ab ? std::vector<std::size_t>{left, a, b, right}
                                               : std::vector<std::size_t>{left, b, a, right};
      return permute_row_factors(m, dims, {0, 2, 1, 3});
    }
    case K::Compose: {
      const MorTerm& inner = transposed ? *t.second : *t.first;
      const MorTerm& outer = transposed ? *t.first : *t.second;
      return apply(outer, env, left, right, apply(inner, env, left, right, m, transposed), transposed);
    }
    case K::Tensor: {
      Boundary f = typecheck(*t.first, env);
      Boundary g = typecheck(*t.second, env);
      std::size_t f_in = env.dim(transposed ? f.cod : f.dom);
      std::size_t g_out = env.dim(transposed ? g.dom : g.cod);
      Mat mid = apply(*t.second, env, left * f_in, right, m, transposed);
      return apply(*t.first, env, left, g_out * right, mid, transposed);
    }
  }
  return m;
}

}  // namespace

Mat evaluate(const MorTerm& t, const GenEnv& env) {
  Boundary b = typecheck(t, env);
  std::size_t dd = env.dim(b.dom), dc = env.dim(b.cod);
  if (dc < dd) return apply(t, env, 1, 1, Mat::identity(dc), true).transpose();
  return apply(t, env, 1, 1, Mat::identity(dd), false);
}

EquationVerdict equation_holds(const MorTerm& lhs, const MorTerm& rhs, const GenEnv& env) {
  Boundary bl = typecheck(lhs, env);
  Boundary br = typecheck(rhs, env);
  if (!(bl == br))
    throw BoundaryMismatch("boundary mismatch: " + format_word(bl.dom) + " -> " + format_word(bl.cod) +
                           " vs " + format_word(br.dom) + " -> " + format_word(br.cod));
  Mat l = evaluate(lhs, env);
  Mat r = evaluate(rhs, env);
  auto d = first_difference(l, r);
  return {!d.has_value(), bl, d};
}

EquationVerdict equation_holds(std::string_view lhs, std::string_view rhs, const GenEnv& env) {
  return equation_holds(*parse_term(lhs), *parse_term(rhs), env);
}

}  // namespace weakhopf
