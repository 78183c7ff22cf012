#include <doctest.h>

#include "weakhopf/duality.hpp"

using namespace weakhopf;

namespace {

ModuleQ z3_rotation(const WeakBialgebra& h) {
  Mat g = Mat::from_ints({{0, -1}, {1, -1}});
  return ModuleQ(h, hstack({Mat::identity(2), g, g * g}));
}

ModuleQ trivial_character(const WeakBialgebra& group_alg) {
  return ModuleQ(group_alg, group_alg.eps());
}

}  // namespace

TEST_CASE("adjunction unit on regular probes") {
  for (const WeakBialgebra& h :
       {groupoid_algebra(Groupoid::pair(2)).wba(), group_algebra(FiniteGroup::cyclic(2)).wba()}) {
    AdjunctionUnit u = adjunction_unit(h, {regular_module(h)});
    CHECK(u.unit.rows() == h.dim());
    CHECK(rank(u.unit) == h.dim());
    CHECK(check_adjunction_unit(h, u).all_pass());
  }
  WeakBialgebra g = group_algebra(FiniteGroup::cyclic(2)).wba();
  AdjunctionUnit z = adjunction_unit(g, {zero_module(g)});
  CHECK(z.end.dim == 0);
  CHECK(z.unit.rows() == 0);
  CHECK(check_adjunction_unit(g, z).all_pass());
}

TEST_CASE("triangle one") {
  WeakBialgebra pair = groupoid_algebra(Groupoid::pair(2)).wba();
  CHECK(triangle_one(pair, {regular_module(pair)}).all_pass());
  CHECK(triangle_one(pair, {regular_module(pair), unit_object(pair)}).all_pass());
  WeakBialgebra z3 = group_algebra(FiniteGroup::cyclic(3)).wba();
  CHECK(triangle_one(z3, {trivial_character(z3), z3_rotation(z3), regular_module(z3)}).all_pass());
  CHECK(triangle_one(z3, {zero_module(z3)}).all_pass());
}

TEST_CASE("adjunction counit") {
  for (const FunctorData& f : {deloop(diagonal_frobenius(2)), discrete_group_functor(FiniteGroup::cyclic(2)),
                               deloop(diagonal_frobenius(3))}) {
    TannakaResult t = tannaka(f, false);
    AdjunctionCounit c = adjunction_counit(t);
    Report rep = check_adjunction_counit(t, c);
    for (const auto& ch : rep.checks()) CHECK_MESSAGE(ch.pass, ch.id);
  }
  TannakaResult t = tannaka(deloop(diagonal_frobenius(2)), false);
  AdjunctionCounit c = adjunction_counit(t);
  CHECK(c.modules[0].dim() == 2);
  CHECK(rank(c.section * c.retraction) == 2);
  TannakaResult z2 = tannaka(discrete_group_functor(FiniteGroup::cyclic(2)), false);
  AdjunctionCounit cz = adjunction_counit(z2);
  CHECK(nabla(cz.modules[0], cz.modules[1], z2.wba()) == Mat::identity(1));
}

TEST_CASE("triangle two") {
  for (const FunctorData& f : {deloop(diagonal_frobenius(2)), deloop(diagonal_frobenius(1)),
                               discrete_group_functor(FiniteGroup::cyclic(2))}) {
    TannakaResult t = tannaka(f, false);
    auto [rep, composite] = triangle_two(t);
    CHECK(rep.all_pass());
    CHECK(composite == Mat::identity(t.dim()));
  }
}

TEST_CASE("split Frobenius structure coincides with the image structure") {
  for (const FunctorData& f : {deloop(diagonal_frobenius(2)), deloop(diagonal_frobenius(3)),
                               discrete_group_functor(FiniteGroup::cyclic(2))}) {
    Report rep = chikhladze_check(tannaka(f, false));
    for (const auto& ch : rep.checks()) CHECK_MESSAGE(ch.pass, ch.id);
  }
}

TEST_CASE("Frobenius endofunctors") {
  FrobEndofunctor k1(diagonal_frobenius(1)), k2(diagonal_frobenius(2));
  CHECK(check_frob_endofunctor(k1, {1, 2}).all_pass());
  CHECK(check_frob_endofunctor(k2, {1, 2}).all_pass());
  CHECK_THROWS_AS(FrobEndofunctor(matrix_frobenius(2)), NotBraided);
  FrobeniusAlgebra group2{group_algebra(FiniteGroup::cyclic(2)).wba().alg(),
                          group_algebra(FiniteGroup::cyclic(2)).wba().coalg()};
  CHECK_THROWS_AS(FrobEndofunctor{group2}, NotSeparableFrobenius);
}

TEST_CASE("bow lemma") {
  FrobEndofunctor k1(diagonal_frobenius(1)), k2(diagonal_frobenius(2));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 1; x <= 3; ++x)
    for (std::size_t y = 1; y <= 3; ++y) pairs.push_back({x, y});
  CHECK(bow_lemma_check(k1, pairs).all_pass());
  CHECK(bow_lemma_check(k2, pairs).all_pass());
  // With C = k both sides are the plain swap.
  CHECK(k1.phi(2, 3) * braid(2, 3) * k1.psi(2, 3) == braid(2, 3));
}

TEST_CASE("transport of weak bialgebras") {
  FrobEndofunctor k1(diagonal_frobenius(1)), k2(diagonal_frobenius(2)), k3(diagonal_frobenius(3));
  WeakBialgebra z2 = group_algebra(FiniteGroup::cyclic(2)).wba();
  WeakBialgebra same = wba_transport(k1, z2);
  CHECK(same.mu() == z2.mu());
  CHECK(same.delta() == z2.delta());
  WeakBialgebra t = wba_transport(k2, z2);
  CHECK(t.dim() == 4);
  CHECK(barbell(t) == 2);
  CHECK(check_weak_bialgebra(t).all_pass());
  for (const WeakBialgebra& b : {z2, groupoid_algebra(Groupoid::pair(2)).wba()})
    for (const FrobEndofunctor* phi : {&k1, &k2, &k3}) {
      WeakBialgebra tr = wba_transport(*phi, b);
      CHECK(check_weak_bialgebra(tr).all_pass());
      CHECK(barbell(tr) == barbell(b) * Scalar(static_cast<long>(phi->carrier())));
    }
}

TEST_CASE("rho is a strict morphism") {
  FrobEndofunctor k1(diagonal_frobenius(1)), k2(diagonal_frobenius(2));
  FunctorData z2 = discrete_group_functor(FiniteGroup::cyclic(2));
  TannakaResult t = tannaka(z2, false);
  TannakaResult same = tannaka(phi_functor(k1, z2), false);
  CHECK(rho(k1, t, same) == Mat::identity(2));
  TannakaResult tp = tannaka(phi_functor(k2, z2), false);
  Mat r = rho(k2, t, tp);
  CHECK(r.rows() == 8);
  CHECK(r.cols() == 4);
  CHECK(check_rho(k2, t, tp).all_pass());

  FunctorData k2f = deloop(diagonal_frobenius(2));
  TannakaResult tk = tannaka(k2f, false);
  TannakaResult tkp = tannaka(phi_functor(k2, k2f), false);
  CHECK(check_rho(k2, tk, tkp).all_pass());
}

TEST_CASE("gamma transports modules") {
  FrobEndofunctor k1(diagonal_frobenius(1)), k2(diagonal_frobenius(2));
  WeakBialgebra z2 = group_algebra(FiniteGroup::cyclic(2)).wba();
  ModuleQ reg = regular_module(z2);
  CHECK(gamma(k1, z2, reg).action() == reg.action());
  ModuleQ m = gamma(k2, z2, reg);
  CHECK(m.dim() == 4);
  CHECK(check_module(wba_transport(k2, z2), m.action(), m.idem()).all_pass());
  CHECK(gamma(k2, z2, zero_module(z2)).dim() == 0);
}
