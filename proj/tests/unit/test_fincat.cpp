#include <doctest.h>

#include "weakhopf/fincat.hpp"

using namespace weakhopf;

TEST_CASE("discrete group functors are strong") {
  for (const auto& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}) {
    FunctorData f = discrete_group_functor(g);
    CHECK(f.count() == g.order());
    CHECK(f.tensor == g.table());
    Report rep = validate_functor_data(f);
    CHECK(rep.all_pass());
    CHECK(is_strong(rep));
  }
}

TEST_CASE("delooping a separable Frobenius algebra") {
  FunctorData f = deloop(diagonal_frobenius(2));
  CHECK(f.count() == 1);
  CHECK(f.dim(0) == 2);
  Report rep = validate_functor_data(f);
  CHECK(is_separable_frobenius(rep));
  CHECK_FALSE(is_strong(rep));
  CHECK_FALSE(rep.passed("strong/nullary-retraction"));
  CHECK((f.psi0 * f.phi0)(0, 0) == 2);  // ε η = n on kⁿ
  CHECK(rep.passed("strong/binary-section(i,i)"));
  CHECK(rep.passed("duals/snake-object(i)"));
  CHECK(rep.passed("duals/snake-dual(i)"));

  Report trivial = validate_functor_data(deloop(diagonal_frobenius(1)));
  CHECK(trivial.all_pass());

  CHECK_THROWS_AS(deloop(FrobeniusAlgebra{group_algebra(FiniteGroup::cyclic(2)).wba().alg(),
                                          group_algebra(FiniteGroup::cyclic(2)).wba().coalg()}),
                  NotSeparableFrobenius);
  // Matrix algebras are separable Frobenius; the delooping validates.
  CHECK(is_separable_frobenius(validate_functor_data(deloop(matrix_frobenius(2)))));
}

TEST_CASE("round trip through the unit Frobenius algebra") {
  FrobeniusAlgebra c = diagonal_frobenius(3);
  FrobeniusAlgebra back = unit_frobenius(deloop(c));
  CHECK(back.alg.mu() == c.alg.mu());
  CHECK(back.alg.eta() == c.alg.eta());
  CHECK(back.coalg.delta() == c.coalg.delta());
  CHECK(back.coalg.eps() == c.coalg.eps());
}

TEST_CASE("corrupted structure maps fail validation") {
  FunctorData f = deloop(diagonal_frobenius(2));
  f.phi[0][0](0, 0) = 2;
  Report rep = validate_functor_data(f);
  CHECK_FALSE(rep.passed("monoidal/left-unit(i)"));
  CHECK_FALSE(rep.passed("separable(i,i)"));
  CHECK_FALSE(is_separable_frobenius(rep));

  FunctorData g = deloop(diagonal_frobenius(2));
  g.psi[0][0] = g.psi[0][0].scaled(2);
  g.psi0 = g.psi0.scaled(Scalar(1, 2));
  Report rg = validate_functor_data(g);
  CHECK_FALSE(rg.passed("separable(i,i)"));
  CHECK(rg.passed("frobenius-left(i,i,i)"));
  CHECK(rg.passed("comonoidal/left-counit(i)"));
}

TEST_CASE("naturality is checked on generators that are tensor products") {
  // id(e) ⊗ id(g) presented as an explicit generator on g.
  FunctorData f = discrete_group_functor(FiniteGroup::cyclic(2));
  f.generators.push_back({"idg", 1, 1, Mat::identity(1), std::make_pair(std::string("id(e)"), std::string("id(g)"))});
  Report rep = validate_functor_data(f);
  CHECK(rep.passed("naturality/phi/idg"));
  CHECK(rep.passed("naturality/psi/idg"));
  f.generators.back().mat(0, 0) = 2;
  Report bad = validate_functor_data(f);
  CHECK_FALSE(bad.passed("naturality/phi/idg"));
  f.generators.back().tensor_of = std::make_pair(std::string("id(g)"), std::string("id(g)"));
  CHECK_FALSE(validate_functor_data(f).passed("naturality/endpoints/idg"));
}

TEST_CASE("shape errors") {
  FunctorData f = deloop(diagonal_frobenius(2));
  f.phi0 = Mat(3, 1);
  CHECK_THROWS_AS(validate_functor_data(f), ShapeError);
  FunctorData g = discrete_group_functor(FiniteGroup::cyclic(2));
  g.tensor[0].pop_back();
  CHECK_THROWS_AS(check_shapes(g), ShapeError);
}

TEST_CASE("probe functors from modules") {
  WeakBialgebra h = groupoid_algebra(Groupoid::pair(2)).wba();
  Shape s = probe_functor_from_modules(h, {regular_module(h)});
  CHECK(s.count() == 1);
  CHECK(s.dims[0] == 4);
  CHECK(s.arrows.size() == 4);
  WeakBialgebra g = group_algebra(FiniteGroup::cyclic(2)).wba();
  CHECK(probe_functor_from_modules(g, {regular_module(g)}).arrows.size() == 2);
  Shape z = probe_functor_from_modules(g, {zero_module(g)});
  CHECK(z.dims[0] == 0);
  CHECK(z.arrows.empty());
}

TEST_CASE("square shape") {
  WeakBialgebra g = group_algebra(FiniteGroup::cyclic(2)).wba();
  Shape s = probe_functor_from_modules(g, {regular_module(g)});
  Shape sq = square_shape(s);
  CHECK(sq.count() == 1);
  CHECK(sq.dims[0] == 4);
  CHECK(sq.arrows.size() == 2 * s.arrows.size());
}
