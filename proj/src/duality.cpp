#include "weakhopf/duality.hpp"

#include <string>

namespace weakhopf {

namespace {

Shape probe_shape_check(const Shape& shape, const std::vector<ModuleQ>& probe) {
  if (shape.count() != probe.size()) throw ShapeError("probe shape and module list differ in length");
  for (std::size_t i = 0; i < probe.size(); ++i)
    if (shape.dims[i] != probe[i].dim() || shape.idems[i] != probe[i].idem())
      throw ShapeError("probe shape object " + std::to_string(i) + " does not match its module");
  return shape;
}

}  // namespace

AdjunctionUnit adjunction_unit(const WeakBialgebra& h, const std::vector<ModuleQ>& probe) {
  return adjunction_unit(h, probe, probe_functor_from_modules(h, probe));
}

AdjunctionUnit adjunction_unit(const WeakBialgebra& h, const std::vector<ModuleQ>& probe, const Shape& shape) {
  AdjunctionUnit u;
  u.end = compute_end(probe_shape_check(shape, probe));
  u.mu = end_multiplication(u.end);
  u.eta = end_unit(u.end);
  DischargedFamily fam{h.dim(), 1, {}};
  for (const auto& m : probe) fam.components.push_back(m.dim() == 0 ? Mat(0, 0) : m.action());
  u.unit = solve_discharged(fam, u.end);
  return u;
}

Report check_adjunction_unit(const WeakBialgebra& h, const AdjunctionUnit& u) {
  Report rep;
  rep.add_equal("preserves-multiplication", "η_H μ = μ (η_H ⊗ η_H)", u.unit * h.mu(), u.mu * kron(u.unit, u.unit));
  rep.add_equal("preserves-unit", "η_H η = η", u.unit * h.eta(), u.eta);
  return rep;
}

AdjunctionCounit adjunction_counit(const TannakaResult& t) {
  const FunctorData& f = t.source;
  const EndData& e = t.end;
  WeakBialgebra b = t.wba();
  AdjunctionCounit c;
  for (std::size_t x = 0; x < f.count(); ++x)
    c.modules.push_back(f.dim(x) == 0 ? zero_module(b) : ModuleQ(b, e.alpha[x], Mat::identity(f.dim(x))));
  c.retraction = e.alpha[f.unit] * kron(Mat::identity(e.dim), f.phi0);
  DischargedFamily fam{f.dim(f.unit), 1, {}};
  for (std::size_t x = 0; x < f.count(); ++x) fam.components.push_back(f.phi[f.unit][x]);
  c.section = solve_discharged(fam, e);
  return c;
}

Report check_adjunction_counit(const TannakaResult& t, const AdjunctionCounit& c) {
  const FunctorData& f = t.source;
  WeakBialgebra b = t.wba();
  Report rep;
  for (std::size_t x = 0; x < f.count(); ++x)
    for (std::size_t y = 0; y < f.count(); ++y) {
      const ModuleQ& xy = c.modules[f.tensor[x][y]];
      ModuleQ prod = tensor_H(c.modules[x], c.modules[y], b);
      const std::string tag = "pair-" + f.objects[x].id + "-" + f.objects[y].id + "/";
      rep.append(check_mod_morphism(f.phi[x][y], prod, xy), tag + "phi/");
      rep.append(check_mod_morphism(f.psi[x][y], xy, prod), tag + "psi/");
      rep.add_equal(tag + "phi-psi", "φ ψ = ε(x ⊗ y)", f.phi[x][y] * f.psi[x][y], xy.idem());
      rep.add_equal(tag + "psi-phi", "ψ φ = ∇", f.psi[x][y] * f.phi[x][y], prod.idem());
    }
  ModuleQ top = unit_object(b);
  const ModuleQ& unit_mod = c.modules[f.unit];
  rep.append(check_mod_morphism(c.retraction, top, unit_mod), "nullary/phi0/");
  rep.append(check_mod_morphism(c.section, unit_mod, top), "nullary/psi0/");
  rep.add_equal("nullary/splits-t", "ψ₀ φ₀ = t", c.section * c.retraction, canonical_idempotents(b).t);
  rep.add_equal("nullary/retraction-section", "φ₀ ψ₀ = F⊤", c.retraction * c.section, Mat::identity(f.dim(f.unit)));
  return rep;
}

Report triangle_one(const WeakBialgebra& h, const std::vector<ModuleQ>& samples) {
  AdjunctionUnit u = adjunction_unit(h, samples);
  Report rep = check_adjunction_unit(h, u);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ModuleQ& m = samples[i];
    const std::string tag = "module-" + std::to_string(i) + "/";
    Mat restricted = u.end.alpha[i] * kron(u.unit, Mat::identity(m.dim()));
    rep.add_equal(tag + "action", "α (η_H ⊗ a) = γ", restricted, m.dim() == 0 ? Mat(0, 0) : m.action());
    rep.add_equal(tag + "idempotent", "a′ unchanged", u.end.shape.idems[i], m.idem());
  }
  return rep;
}

std::pair<Report, Mat> triangle_two(const TannakaResult& t) {
  const FunctorData& f = t.source;
  AdjunctionCounit c = adjunction_counit(t);
  Shape image;
  for (std::size_t x = 0; x < f.count(); ++x) {
    image.names.push_back("eps(" + f.objects[x].id + ")");
    image.dims.push_back(f.dim(x));
    image.idems.push_back(Mat::identity(f.dim(x)));
  }
  image.arrows = f.generators;
  Report rep;
  for (const auto& g : f.generators)
    rep.append(check_mod_morphism(g.mat, c.modules[g.src], c.modules[g.tgt]), "generator-" + g.name + "/");
  AdjunctionUnit u = adjunction_unit(t.wba(), c.modules, image);
  std::vector<std::size_t> same(f.count());
  for (std::size_t x = 0; x < f.count(); ++x) same[x] = x;
  Mat composite = tan_on_morphism(u.end, t.end, same) * u.unit;
  rep.add_equal("triangle-2", "tan ε_F η_tan F = tan F", composite, Mat::identity(t.dim()));
  return {rep, composite};
}

Report chikhladze_check(const TannakaResult& t) {
  AdjunctionCounit c = adjunction_counit(t);
  FrobeniusAlgebra split = frobenius_from_splitting(t.wba(), c.retraction, c.section);
  const FunctorData& f = t.source;
  const std::size_t u = f.unit;
  Report rep;
  rep.add_equal("multiplication", "split μ = φ_{ι,ι}", split.alg.mu(), f.phi[u][u]);
  rep.add_equal("unit", "split η = φ₀", split.alg.eta(), f.phi0);
  rep.add_equal("comultiplication", "split Δ = ψ_{ι,ι}", split.coalg.delta(), f.psi[u][u]);
  rep.add_equal("counit", "split ε = ψ₀", split.coalg.eps(), f.psi0);
  return rep;
}

FrobEndofunctor::FrobEndofunctor(FrobeniusAlgebra c) : c_(std::move(c)) {
  Report fr = check_frobenius(c_.alg, c_.coalg);
  for (const auto& ch : fr.checks())
    if (!ch.pass) throw NotSeparableFrobenius("not a separable Frobenius algebra: " + ch.id);
  const std::size_t n = c_.dim();
  if (c_.alg.mu() * braid(n, n) != c_.alg.mu()) throw NotBraided("the algebra is not commutative");
  if (braid(n, n) * c_.coalg.delta() != c_.coalg.delta()) throw NotBraided("the coalgebra is not cocommutative");
}

Mat FrobEndofunctor::phi(std::size_t v, std::size_t w) const {
  const std::size_t c = c_.dim();
  return kron_all({Mat::identity(v * w), c_.alg.mu()}) *
         kron_all({Mat::identity(v), braid(c, w), Mat::identity(c)});
}

Mat FrobEndofunctor::psi(std::size_t v, std::size_t w) const {
  const std::size_t c = c_.dim();
  return kron_all({Mat::identity(v), braid(w, c), Mat::identity(c)}) *
         kron_all({Mat::identity(v * w), c_.coalg.delta()});
}

Report check_frob_endofunctor(const FrobEndofunctor& phi, const std::vector<std::size_t>& dims) {
  Report rep;
  auto I = [&](std::size_t d) { return Mat::identity(phi.apply(d)); };
  for (std::size_t u : dims) {
    const std::string tag = "(" + std::to_string(u) + ")";
    rep.add_equal("left-unit" + tag, "φ(φ₀ ⊗ ΦV) = ΦV", phi.phi(1, u) * kron(phi.phi0(), I(u)), I(u));
    rep.add_equal("right-unit" + tag, "φ(ΦV ⊗ φ₀) = ΦV", phi.phi(u, 1) * kron(I(u), phi.phi0()), I(u));
    rep.add_equal("left-counit" + tag, "(ψ₀ ⊗ ΦV)ψ = ΦV", kron(phi.psi0(), I(u)) * phi.psi(1, u), I(u));
    rep.add_equal("right-counit" + tag, "(ΦV ⊗ ψ₀)ψ = ΦV", kron(I(u), phi.psi0()) * phi.psi(u, 1), I(u));
    for (std::size_t v : dims) {
      const std::string t2 = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
      rep.add_equal("separable" + t2, "φ ψ = Φ(V ⊗ W)", phi.phi(u, v) * phi.psi(u, v), I(u * v));
      rep.add_equal("braided-monoidal" + t2, "Φ(c) φ = φ c", phi.apply(braid(u, v)) * phi.phi(u, v),
                    phi.phi(v, u) * braid(phi.apply(u), phi.apply(v)));
      rep.add_equal("braided-comonoidal" + t2, "ψ Φ(c) = c ψ", phi.psi(v, u) * phi.apply(braid(u, v)),
                    braid(phi.apply(u), phi.apply(v)) * phi.psi(u, v));
      for (std::size_t w : dims) {
        const std::string t3 = "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")";
        rep.add_equal("associativity" + t3, "φ(φ ⊗ ΦW) = φ(ΦU ⊗ φ)", phi.phi(u * v, w) * kron(phi.phi(u, v), I(w)),
                      phi.phi(u, v * w) * kron(I(u), phi.phi(v, w)));
        rep.add_equal("coassociativity" + t3, "(ψ ⊗ ΦW)ψ = (ΦU ⊗ ψ)ψ", kron(phi.psi(u, v), I(w)) * phi.psi(u * v, w),
                      kron(I(u), phi.psi(v, w)) * phi.psi(u, v * w));
        rep.add_equal("frobenius-left" + t3, "(ΦU ⊗ φ)(ψ ⊗ ΦW) = ψ φ",
                      kron(I(u), phi.phi(v, w)) * kron(phi.psi(u, v), I(w)), phi.psi(u, v * w) * phi.phi(u * v, w));
        rep.add_equal("frobenius-right" + t3, "(φ ⊗ ΦW)(ΦU ⊗ ψ) = ψ φ",
                      kron(phi.phi(u, v), I(w)) * kron(I(u), phi.psi(v, w)), phi.psi(u * v, w) * phi.phi(u, v * w));
      }
    }
  }
  return rep;
}

Report bow_lemma_check(const FrobEndofunctor& phi, const std::vector<std::pair<std::size_t, std::size_t>>& dims) {
  Report rep;
  for (const auto& [x, y] : dims) {
    const std::string tag = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    Mat bow = phi.phi(y, x) * braid(phi.apply(x), phi.apply(y)) * phi.psi(x, y);
    Mat after = phi.apply(braid(x, y)) * phi.phi(x, y) * phi.psi(x, y);
    Mat before = phi.phi(y, x) * phi.psi(y, x) * phi.apply(braid(x, y));
    rep.add_equal("bow-after" + tag, "φ c ψ = Φ(c) φ ψ", bow, after);
    rep.add_equal("bow-before" + tag, "φ c ψ = φ ψ Φ(c)", bow, before);
  }
  return rep;
}

WeakBialgebra wba_transport(const FrobEndofunctor& phi, const WeakBialgebra& b) {
  const std::size_t n = b.dim();
  return WeakBialgebra::make_unchecked(phi.apply(b.mu()) * phi.phi(n, n), phi.apply(b.eta()) * phi.phi0(),
                                       phi.psi(n, n) * phi.apply(b.delta()), phi.psi0() * phi.apply(b.eps()));
}

FunctorData phi_functor(const FrobEndofunctor& phi, const FunctorData& f) {
  FunctorData g = f;
  for (auto& o : g.objects) o.dim = phi.apply(o.dim);
  for (auto& gen : g.generators) gen.mat = phi.apply(gen.mat);
  for (std::size_t x = 0; x < f.count(); ++x)
    for (std::size_t y = 0; y < f.count(); ++y) {
      g.phi[x][y] = phi.apply(f.phi[x][y]) * phi.phi(f.dim(x), f.dim(y));
      g.psi[x][y] = phi.psi(f.dim(x), f.dim(y)) * phi.apply(f.psi[x][y]);
    }
  g.phi0 = phi.apply(f.phi0) * phi.phi0();
  g.psi0 = phi.psi0() * phi.apply(f.psi0);
  if (g.duals) {
    for (auto& m : g.duals->coev) m = phi.apply(m);
    for (auto& m : g.duals->ev) m = phi.apply(m);
  }
  return g;
}

Mat rho(const FrobEndofunctor& phi, const TannakaResult& t, const TannakaResult& t_phi) {
  const FunctorData& f = t.source;
  if (t_phi.end.shape.count() != f.count()) throw ShapeError("rho: the two functors have different objects");
  DischargedFamily fam{phi.apply(t.dim()), 1, {}};
  for (std::size_t x = 0; x < f.count(); ++x)
    fam.components.push_back(phi.apply(t.end.alpha[x]) * phi.phi(t.dim(), f.dim(x)));
  return solve_discharged(fam, t_phi.end);
}

Report check_rho(const FrobEndofunctor& phi, const TannakaResult& t, const TannakaResult& t_phi) {
  Mat r = rho(phi, t, t_phi);
  return check_strict_morphism(r, wba_transport(phi, t.wba()), t_phi.wba());
}

ModuleQ gamma(const FrobEndofunctor& phi, const WeakBialgebra& b, const ModuleQ& m) {
  WeakBialgebra trans = wba_transport(phi, b);
  if (m.dim() == 0) return zero_module(trans);
  return ModuleQ(trans, phi.apply(m.action()) * phi.phi(b.dim(), m.dim()), phi.apply(m.idem()));
}

}  // namespace weakhopf
