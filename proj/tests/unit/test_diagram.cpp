#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "weakhopf/diagram.hpp"

using namespace weakhopf;
using testsupport::random_mat;

namespace {

// kZ/2 in the basis (e, g): μ(a ⊗ b) = a + b mod 2.
GenEnv z2_env() {
  GenEnv env;
  env.bind_object("H", 2);
  Mat mu(2, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) mu((a + b) % 2, a * 2 + b) = 1;
  env.bind("mu", {"H", "H"}, {"H"}, mu);
  env.bind("eta", {}, {"H"}, Mat::from_ints({{1}, {0}}));
  return env;
}

}  // namespace

TEST_CASE("parse examples") {
  TermPtr t = parse_term("mu ; delta");
  REQUIRE(t->kind == MorTerm::Kind::Compose);
  CHECK(t->first->name == "mu");
  CHECK(t->second->name == "delta");

  TermPtr u = parse_term("(id(H) * eta) ; mu");
  REQUIRE(u->kind == MorTerm::Kind::Compose);
  CHECK(u->second->name == "mu");
  REQUIRE(u->first->kind == MorTerm::Kind::Tensor);
  CHECK(u->first->first->kind == MorTerm::Kind::Id);
  CHECK(u->first->first->word == ObjWord{"H"});
  CHECK(u->first->second->name == "eta");

  try {
    parse_term("mu ;; delta");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("tensor binds tighter than composition") {
  TermPtr t = parse_term("a * b ; c");
  REQUIRE(t->kind == MorTerm::Kind::Compose);
  CHECK(t->first->kind == MorTerm::Kind::Tensor);
}

TEST_CASE("further syntax errors carry offsets") {
  auto offset_of = [](const char* src) {
    try {
      parse_term(src);
    } catch (const SyntaxError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("(mu") == 3);
  CHECK(offset_of("mu )") == 3);
  CHECK(offset_of("braid(H H)") == 9);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("mu *") == 4);
}

TEST_CASE("typecheck examples") {
  GenEnv env = z2_env();
  Boundary b = typecheck(*id({}), env);
  CHECK(b.dom.empty());
  CHECK(b.cod.empty());
  Boundary mm = typecheck(*parse_term("mu * mu"), env);
  CHECK(mm.dom == ObjWord{"H", "H", "H", "H"});
  CHECK(mm.cod == ObjWord{"H", "H"});
  try {
    typecheck(*parse_term("eta ; eta"), env);
    FAIL("expected a type mismatch");
  } catch (const TypeMismatch& e) {
    CHECK(e.expected() == ObjWord{"H"});
    CHECK(e.found().empty());
  }
  CHECK_THROWS_AS(typecheck(*parse_term("nope"), env), UnboundGenerator);
  CHECK_THROWS_AS(typecheck(*parse_term("id(K)"), env), UnboundObject);
}

TEST_CASE("evaluate examples") {
  GenEnv env;
  env.bind_object("H", 3);
  CHECK(evaluate(*parse_term("id(H)"), env) == Mat::identity(3));
  GenEnv e2;
  e2.bind_object("X", 2);
  e2.bind("f", {"X"}, {"X"}, Mat::from_ints({{1, 2}, {3, 4}}));
  CHECK(evaluate(*parse_term("f ; f"), e2) == Mat::from_ints({{7, 10}, {15, 22}}));
  CHECK(evaluate(*parse_term("braid(X,X)"), e2) == braid(2, 2));
  CHECK(evaluate(*parse_term("id()"), e2) == Mat::identity(1));
}

TEST_CASE("equation_holds examples") {
  GenEnv env = z2_env();
  auto v = equation_holds("(mu * id(H)) ; mu", "(id(H) * mu) ; mu", env);
  CHECK(v.holds);
  CHECK(equation_holds("mu", "mu", env).holds);

  GenEnv bad = env;
  Mat mu = env.generator("mu").mat;
  mu(0, 1) = 1;  // e·g now returns e
  mu(1, 1) = 0;
  bad.bind("mu", {"H", "H"}, {"H"}, mu);
  auto w = equation_holds("(mu * id(H)) ; mu", "(id(H) * mu) ; mu", bad);
  CHECK_FALSE(w.holds);
  REQUIRE(w.difference.has_value());
  Mat l = evaluate(*parse_term("(mu * id(H)) ; mu"), bad), r = evaluate(*parse_term("(id(H) * mu) ; mu"), bad);
  CHECK(l(w.difference->row, w.difference->col) == w.difference->lhs);
  CHECK(r(w.difference->row, w.difference->col) == w.difference->rhs);
  CHECK(w.difference->lhs != w.difference->rhs);

  CHECK_THROWS_AS(equation_holds("mu", "eta", env), BoundaryMismatch);
}

TEST_CASE("property: evaluation is functorial on random terms") {
  std::mt19937 rng(2024);
  GenEnv env;
  env.bind_object("A", 2);
  env.bind_object("B", 3);
  env.bind("f", {"A"}, {"B"}, random_mat(rng, 3, 2));
  env.bind("g", {"B"}, {"A", "A"}, random_mat(rng, 4, 3));
  env.bind("h", {"A", "B"}, {"B"}, random_mat(rng, 3, 6));
  env.bind("u", {}, {"A"}, random_mat(rng, 2, 1));
  env.bind("c", {"A"}, {}, random_mat(rng, 1, 2));
  const std::vector<std::string> atoms = {"f", "g", "h", "u", "c", "id(A)", "id(B)", "braid(A,B)", "braid_inv(A,B)",
                                          "braid(A B,A)", "id()"};
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    TermPtr x = parse_term(atoms[rng() % atoms.size()]);
    TermPtr y = parse_term(atoms[rng() % atoms.size()]);
    TermPtr z = parse_term(atoms[rng() % atoms.size()]);
    TermPtr xy = tensor(x, y);
    Mat ex = evaluate(*x, env), ey = evaluate(*y, env), ez = evaluate(*z, env);
    CHECK(evaluate(*xy, env) == kron(ex, ey));
    TermPtr t = tensor(xy, z);
    Mat et = evaluate(*t, env);
    CHECK(et == kron(kron(ex, ey), ez));
    // composition when boundaries meet
    for (const TermPtr& first : {x, t}) {
      for (const TermPtr& second : {y, z, xy}) {
        if (typecheck(*first, env).cod != typecheck(*second, env).dom) continue;
        CHECK(evaluate(*seq(first, second), env) == evaluate(*second, env) * evaluate(*first, env));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("property: print then parse is the identity") {
  const std::vector<std::string> corpus = {
      "mu ; delta",
      "(mu * id(H)) ; mu",
      "eta * eta ; delta * delta ; id(H) * braid_inv(H,H) * id(H) ; id(H) * mu * id(H)",
      "a * (b * c)",
      "(a ; b) * c",
      "a ; (b ; c)",
      "a * (b ; c) * d",
      "id() ; braid(H K,L) ; braid_inv(L,H K)",
      "((f))",
  };
  for (const auto& src : corpus) {
    TermPtr t = parse_term(src);
    std::string printed = print_term(*t);
    TermPtr again = parse_term(printed);
    CHECK_MESSAGE(same_term(*t, *again), printed);
    CHECK(print_term(*again) == printed);
  }
  std::mt19937 rng(77);
  const std::vector<std::string> leaves = {"a", "b", "id(H)", "braid(H,K)", "id()"};
  for (int trial = 0; trial < 100; ++trial) {
    std::function<TermPtr(int)> build = [&](int depth) -> TermPtr {
      if (depth == 0 || rng() % 3 == 0) return parse_term(leaves[rng() % leaves.size()]);
      return rng() % 2 ? seq(build(depth - 1), build(depth - 1)) : tensor(build(depth - 1), build(depth - 1));
    };
    TermPtr t = build(4);
    CHECK(same_term(*t, *parse_term(print_term(*t))));
  }
}

TEST_CASE("braid followed by its inverse is the identity") {
  GenEnv env;
  env.bind_object("A", 2);
  env.bind_object("B", 3);
  for (const char* a : {"A", "B"})
    for (const char* b : {"A", "B"}) {
      std::string src = std::string("braid(") + a + "," + b + ") ; braid_inv(" + a + "," + b + ")";
      Mat m = evaluate(*parse_term(src), env);
      CHECK(m.is_identity());
    }
}

TEST_CASE("transposed evaluation path agrees with direct evaluation") {
  std::mt19937 rng(4);
  GenEnv env;
  env.bind_object("H", 3);
  env.bind("m", {"H", "H"}, {"H"}, random_mat(rng, 3, 9));
  env.bind("e", {"H"}, {}, random_mat(rng, 1, 3));
  // codomain smaller than domain triggers the transposed path
  Mat m = env.generator("m").mat, e = env.generator("e").mat;
  Mat expected = e * m * kron(m, Mat::identity(3)) * kron(kron(Mat::identity(1), Mat::identity(3)), braid(3, 3));
  CHECK(evaluate(*parse_term("id(H) * braid(H,H) ; m * id(H) ; m ; e"), env) == expected);
}
