#include "weakhopf/rep.hpp"

#include <optional>
#include <string>

namespace weakhopf {

namespace {

std::string first_failure(const Report& rep) {
  for (const auto& c : rep.checks())
    if (!c.pass) return c.id + (c.locus.empty() ? "" : " (" + c.locus + ")");
  return {};
}

// Σ_h coeffs[h] · kron(A_p, B_q) over the basis pairs h = (p, q) of H (x) H.
Mat diagonal_combination(const Mat& coeffs, const ModuleQ& a, const ModuleQ& b) {
  const std::size_t n = a.algebra_dim();
  Mat out(a.dim() * b.dim(), a.dim() * b.dim());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& c = coeffs(p * n + q, 0);
      if (sgn(c) == 0) continue;
      out = out + kron(a.block(p), b.block(q)).scaled(c);
    }
  return out;
}

void require_same_algebra(const ModuleQ& m, const WeakBialgebra& h) {
  if (m.algebra_dim() != h.dim()) throw ShapeError("module is over an algebra of a different dimension");
}

}  // namespace

Report check_module(const WeakBialgebra& h, const Mat& action, const Mat& idem) {
  const std::size_t n = h.dim(), a = idem.rows();
  if (!idem.square() || action.rows() != a || action.cols() != n * a)
    throw ShapeError("module action has shape " + std::to_string(action.rows()) + "x" +
                     std::to_string(action.cols()) + " for carrier " + std::to_string(a));
  Mat ia = Mat::identity(a);
  Report rep;
  rep.add_equal("associativity", "α(μ ⊗ a) = α(H ⊗ α)", action * kron(h.mu(), ia),
                action * kron(Mat::identity(n), action));
  rep.add_equal("unital-up-to-idem", "α(η ⊗ a) = a′", action * kron(h.eta(), ia), idem);
  rep.add_equal("idem-idempotent", "a′a′ = a′", idem * idem, idem);
  rep.add_equal("absorbs-right", "α(H ⊗ a′) = α", action * kron(Mat::identity(n), idem), action);
  rep.add_equal("absorbs-left", "a′α = α", idem * action, action);
  return rep;
}

ModuleQ::ModuleQ(const WeakBialgebra& h, Mat action)
    : ModuleQ(h, action, action.rows() == 0 ? Mat() : action * kron(h.eta(), Mat::identity(action.rows()))) {}

ModuleQ::ModuleQ(const WeakBialgebra& h, Mat action, Mat idem)
    : h_dim_(h.dim()), dim_(idem.rows()), action_(std::move(action)), idem_(std::move(idem)) {
  if (dim_ == 0) {
    action_ = Mat(0, 0);
    idem_ = Mat(0, 0);
    return;
  }
  Report rep = check_module(h, action_, idem_);
  if (!rep.all_pass()) throw InvalidModule("module invariant failed: " + first_failure(rep));
}

ModuleQ regular_module(const WeakBialgebra& h) { return ModuleQ(h, h.mu(), Mat::identity(h.dim())); }

ModuleQ zero_module(const WeakBialgebra& h) { return ModuleQ(h, Mat(0, 0), Mat(0, 0)); }

bool q_equal(const Mat& f, const Mat& g, const Mat& dom_idem, const Mat& cod_idem) {
  return cod_idem * f * dom_idem == cod_idem * g * dom_idem;
}

Report check_mod_morphism(const Mat& f, const ModuleQ& from, const ModuleQ& to) {
  if (f.rows() != to.dim() || f.cols() != from.dim()) throw ShapeError("module morphism has the wrong shape");
  Report rep;
  Mat lhs = f * from.action();
  Mat rhs = to.action() * kron(Mat::identity(from.algebra_dim()), f);
  rep.add_equal("intertwines", "f α = β (H ⊗ f)", lhs, rhs);
  rep.add_equal("respects-idems", "b′ f a′ = f", to.idem() * f * from.idem(), f);
  return rep;
}

std::vector<Mat> intertwiners(const ModuleQ& from, const ModuleQ& to) {
  const std::size_t a = from.dim(), b = to.dim(), n = from.algebra_dim();
  if (a == 0 || b == 0) return {};
  // vec(B f) = (B ⊗ I) vec f and vec(f A) = (I ⊗ Aᵀ) vec f, row-major.
  std::vector<Mat> rows;
  for (std::size_t h = 0; h < n; ++h)
    rows.push_back(kron(to.block(h), Mat::identity(a)) - kron(Mat::identity(b), from.block(h).transpose()));
  rows.push_back(kron(to.idem(), from.idem().transpose()) - Mat::identity(a * b));
  Mat k = kernel(vstack(rows));
  std::vector<Mat> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(unvec(k.col_block(c, 1), b, a));
  return out;
}

Mat nabla(const ModuleQ& a, const ModuleQ& b, const WeakBialgebra& h) {
  require_same_algebra(a, h);
  require_same_algebra(b, h);
  return diagonal_combination(h.delta() * h.eta(), a, b);
}

ModuleQ tensor_H(const ModuleQ& a, const ModuleQ& b, const WeakBialgebra& h) {
  require_same_algebra(a, h);
  require_same_algebra(b, h);
  if (a.dim() == 0 || b.dim() == 0) return zero_module(h);
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < h.dim(); ++i)
    blocks.push_back(diagonal_combination(h.delta().col_block(i, 1), a, b));
  return ModuleQ(h, hstack(blocks), nabla(a, b, h));
}

ModuleQ unit_object(const WeakBialgebra& h) {
  Mat t = canonical_idempotents(h).t;
  return ModuleQ(h, t * h.mu(), t);
}

UnitConstraints unit_constraints(const ModuleQ& m, const WeakBialgebra& h) {
  require_same_algebra(m, h);
  const std::size_t n = h.dim(), a = m.dim();
  CanonicalIdempotents e = canonical_idempotents(h);
  ModuleQ top = unit_object(h);
  Mat ia = Mat::identity(a);
  UnitConstraints u;
  u.left = m.action() * kron(e.t, ia);
  u.left_inverse = nabla(top, m, h) * kron(h.eta(), ia);
  u.right = m.action() * kron(e.s, ia) * braid(a, n);
  u.right_inverse = nabla(m, top, h) * kron(ia, h.eta());
  return u;
}

Report check_unit_constraints(const ModuleQ& m, const WeakBialgebra& h, const std::vector<Mat>& endomorphisms) {
  UnitConstraints u = unit_constraints(m, h);
  ModuleQ top = unit_object(h);
  ModuleQ left_obj = tensor_H(top, m, h), right_obj = tensor_H(m, top, h);
  Report rep;
  rep.add_equal("left-round-trip", "λ λ⁻¹ = a′", u.left * u.left_inverse, m.idem());
  rep.add_equal("left-inverse-round-trip", "λ⁻¹ λ = ∇(⊤_H, a)", u.left_inverse * u.left, left_obj.idem());
  rep.add_equal("right-round-trip", "ρ ρ⁻¹ = a′", u.right * u.right_inverse, m.idem());
  rep.add_equal("right-inverse-round-trip", "ρ⁻¹ ρ = ∇(a, ⊤_H)", u.right_inverse * u.right, right_obj.idem());
  rep.append(check_mod_morphism(u.left, left_obj, m), "left/");
  rep.append(check_mod_morphism(u.left_inverse, m, left_obj), "left-inverse/");
  rep.append(check_mod_morphism(u.right, right_obj, m), "right/");
  rep.append(check_mod_morphism(u.right_inverse, m, right_obj), "right-inverse/");
  CanonicalIdempotents e = canonical_idempotents(h);
  for (std::size_t i = 0; i < endomorphisms.size(); ++i) {
    const Mat& f = endomorphisms[i];
    std::string tag = "naturality-" + std::to_string(i);
    bool left_ok = q_equal(f * u.left, u.left * kron(e.t, f), left_obj.idem(), m.idem());
    bool right_ok = q_equal(f * u.right, u.right * kron(f, e.t), right_obj.idem(), m.idem());
    rep.add(tag + "/left", "f λ = λ (⊤_H ⊗ f)", left_ok, left_ok ? "" : "compressed composites differ");
    rep.add(tag + "/right", "f ρ = ρ (f ⊗ ⊤_H)", right_ok, right_ok ? "" : "compressed composites differ");
  }
  return rep;
}

Report forgetful_frobenius_check(const WeakBialgebra& h, const std::vector<ModuleQ>& probe) {
  Report rep;
  auto plain = [](const ModuleQ& a, const ModuleQ& b) { return kron(a.idem(), b.idem()); };
  auto add_q = [&rep](const std::string& id, const std::string& anchor, const Mat& lhs, const Mat& rhs,
                      const Mat& dom, const Mat& cod) {
    bool ok = q_equal(lhs, rhs, dom, cod);
    rep.add(id, anchor, ok, ok ? "" : "compressed composites differ");
  };
  for (std::size_t i = 0; i < probe.size(); ++i)
    for (std::size_t j = 0; j < probe.size(); ++j) {
      const ModuleQ &a = probe[i], &b = probe[j];
      Mat nab = nabla(a, b, h);
      std::string tag = "pair-" + std::to_string(i) + "-" + std::to_string(j) + "/";
      rep.add_equal(tag + "nabla-idempotent", "∇∇ = ∇", nab * nab, nab);
      rep.add_equal(tag + "separable", "φ ψ = U(a ⊗_H b)", nab * nab, nab);
      rep.add_equal(tag + "map-of-idempotents", "∇ ∇ (a′ ⊗ b′) = ∇", nab * nab * plain(a, b), nab);
      for (std::size_t k = 0; k < probe.size(); ++k) {
        const ModuleQ& c = probe[k];
        std::string t3 = "triple-" + std::to_string(i) + "-" + std::to_string(j) + "-" + std::to_string(k) + "/";
        std::optional<ModuleQ> ab_opt, bc_opt;
        try {
          ab_opt.emplace(tensor_H(a, b, h));
          bc_opt.emplace(tensor_H(b, c, h));
        } catch (const InvalidModule& e) {
          rep.add(t3 + "tensor-is-module", "a ⊗_H b is an H-module", false, e.what());
          continue;
        }
        const ModuleQ &ab = *ab_opt, &bc = *bc_opt;
        Mat nab_ab_c = nabla(ab, c, h), nab_a_bc = nabla(a, bc, h), nbc = nabla(b, c, h);
        Mat plain3 = kron(plain(a, b), c.idem());
        Mat ab_c = kron(nab, c.idem()), a_bc = kron(a.idem(), nbc);
        add_q(t3 + "monoidal-associativity", "φ(φ ⊗ c) = φ(a ⊗ φ)", nab_ab_c * ab_c, nab_a_bc * a_bc, plain3,
              nab_ab_c);
        add_q(t3 + "comonoidal-coassociativity", "(ψ ⊗ c)ψ = (a ⊗ ψ)ψ", ab_c * nab_ab_c, a_bc * nab_a_bc, nab_ab_c,
              plain3);
        // (a ⊗ φ)(ψ ⊗ c) = ψ φ : U(a⊗b) ⊗ Uc -> Ua ⊗ U(b⊗c)
        add_q(t3 + "frobenius-left", "(a ⊗ φ)(ψ ⊗ c) = ψ φ", a_bc * plain3 * ab_c, nab_a_bc * nab_ab_c, ab_c, a_bc);
        add_q(t3 + "frobenius-right", "(φ ⊗ c)(a ⊗ ψ) = ψ φ", ab_c * plain3 * a_bc, nab_ab_c * nab_a_bc, a_bc, ab_c);
      }
    }
  std::optional<ModuleQ> top_opt;
  try {
    top_opt.emplace(unit_object(h));
  } catch (const Error& e) {
    rep.add("unit-object", "(H, tμ, t) is an H-module", false, e.what());
    return rep;
  }
  const ModuleQ& top = *top_opt;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const ModuleQ& a = probe[i];
    if (a.dim() == 0) continue;
    UnitConstraints u = unit_constraints(a, h);
    Mat ia = a.idem();
    std::string tag = "module-" + std::to_string(i) + "/";
    rep.add_equal(tag + "left-unit", "λ φ(η ⊗ a) = a′", u.left * nabla(top, a, h) * kron(h.eta(), ia), ia);
    rep.add_equal(tag + "right-unit", "ρ φ(a ⊗ η) = a′", u.right * nabla(a, top, h) * kron(ia, h.eta()), ia);
    rep.add_equal(tag + "left-counit", "(ε ⊗ a)ψ λ⁻¹ = a′", kron(h.eps(), ia) * nabla(top, a, h) * u.left_inverse,
                  ia);
    rep.add_equal(tag + "right-counit", "(a ⊗ ε)ψ ρ⁻¹ = a′", kron(ia, h.eps()) * nabla(a, top, h) * u.right_inverse,
                  ia);
  }
  CanonicalIdempotents e = canonical_idempotents(h);
  rep.add_equal("unit-map-of-idempotents", "t η = η", e.t * h.eta(), h.eta());
  rep.add_equal("counit-map-of-idempotents", "ε t = ε", h.eps() * e.t, h.eps());
  return rep;
}

ModuleQ restrict_along(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j, const ModuleQ& m) {
  Report w = check_weak_morphism(f, h, j);
  if (!w.all_pass()) throw NotWeakMorphism("not a weak morphism: " + first_failure(w));
  require_same_algebra(m, j);
  if (m.dim() == 0) return zero_module(h);
  return ModuleQ(h, m.action() * kron(f, Mat::identity(m.dim())), m.idem());
}

RestrictionStructure structure_maps(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j, const ModuleQ& a,
                                    const ModuleQ& b) {
  Report w = check_weak_morphism(f, h, j);
  if (!w.all_pass()) throw NotWeakMorphism("not a weak morphism: " + first_failure(w));
  Mat nab = nabla(a, b, j);
  return {nab, nab};
}

RestrictionUnit restriction_unit(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j) {
  const std::size_t n = h.dim(), m = j.dim();
  CanonicalIdempotents e = canonical_idempotents(h);
  Mat pairing = j.eps() * j.mu() * kron(f, Mat::identity(m));  // x ⊗ y ↦ ε(f(x) y)
  Mat g = kron(pairing, Mat::identity(n)) * kron(Mat::identity(n), braid(n, m)) *
          kron(h.delta() * h.eta(), Mat::identity(m));
  return {f * e.t, g};
}

Report check_restriction(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j,
                         const std::vector<ModuleQ>& probe) {
  Report rep;
  std::vector<ModuleQ> pulled;
  for (const auto& m : probe) pulled.push_back(restrict_along(f, h, j, m));
  auto add_q = [&rep](const std::string& id, const std::string& anchor, const Mat& lhs, const Mat& rhs,
                      const Mat& dom, const Mat& cod) {
    bool ok = q_equal(lhs, rhs, dom, cod);
    rep.add(id, anchor, ok, ok ? "" : "compressed composites differ");
  };
  for (std::size_t i = 0; i < probe.size(); ++i)
    for (std::size_t k = 0; k < probe.size(); ++k) {
      Mat nj = nabla(probe[i], probe[k], j), nh = nabla(pulled[i], pulled[k], h);
      std::string tag = "pair-" + std::to_string(i) + "-" + std::to_string(k) + "/";
      rep.add_equal(tag + "separable", "φ ψ = f*(a ⊗_J b)", nj * nj, nj);
      rep.add_equal(tag + "monoidal-map-of-idempotents", "∇_J ∇_H = ∇_J", nj * nh, nj);
      rep.add_equal(tag + "comonoidal-map-of-idempotents", "∇_H ∇_J = ∇_J", nh * nj, nj);
    }
  for (std::size_t x = 0; x < probe.size(); ++x)
    for (std::size_t y = 0; y < probe.size(); ++y)
      for (std::size_t z = 0; z < probe.size(); ++z) {
        const ModuleQ &a = probe[x], &b = probe[y], &c = probe[z];
        ModuleQ ab_j = tensor_H(a, b, j), bc_j = tensor_H(b, c, j);
        ModuleQ fab = restrict_along(f, h, j, ab_j), fbc = restrict_along(f, h, j, bc_j);
        ModuleQ fa_fb = tensor_H(pulled[x], pulled[y], h);
        Mat dom_left = nabla(fab, pulled[z], h);
        Mat mid_left = nabla(fa_fb, pulled[z], h);
        Mat cod_left = nabla(pulled[x], fbc, h);
        Mat abc_j = nabla(ab_j, c, j);
        Mat lhs = kron(a.idem(), nabla(b, c, j)) * mid_left * kron(nabla(a, b, j), c.idem());
        Mat rhs = nabla(a, bc_j, j) * abc_j * nabla(ab_j, c, j);
        std::string t3 = "triple-" + std::to_string(x) + "-" + std::to_string(y) + "-" + std::to_string(z) + "/";
        add_q(t3 + "frobenius-left", "(a ⊗ φ)(ψ ⊗ c) = ψ φ for f*", lhs, rhs, dom_left, cod_left);
        ModuleQ fb_fc = tensor_H(pulled[y], pulled[z], h);
        Mat dom_right = nabla(pulled[x], fbc, h);
        Mat mid_right = nabla(pulled[x], fb_fc, h);
        Mat cod_right = nabla(fab, pulled[z], h);
        Mat lhs_r = kron(nabla(a, b, j), c.idem()) * mid_right * kron(a.idem(), nabla(b, c, j));
        Mat rhs_r = nabla(ab_j, c, j) * abc_j * nabla(a, bc_j, j);
        add_q(t3 + "frobenius-right", "(φ ⊗ c)(a ⊗ ψ) = ψ φ for f*", lhs_r, rhs_r, dom_right, cod_right);
      }
  RestrictionUnit u = restriction_unit(f, h, j);
  ModuleQ top_h = unit_object(h);
  ModuleQ f_top = restrict_along(f, h, j, unit_object(j));
  rep.append(check_mod_morphism(u.monoidal, top_h, f_top), "unit-monoidal/");
  rep.append(check_mod_morphism(u.comonoidal, f_top, top_h), "unit-comonoidal/");
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const ModuleQ &a = probe[i], &fa = pulled[i];
    if (a.dim() == 0) continue;
    UnitConstraints lj = unit_constraints(a, j), lh = unit_constraints(fa, h);
    ModuleQ top_j = unit_object(j);
    Mat dom = nabla(top_h, fa, h);
    Mat lhs = lj.left * nabla(top_j, a, j) * kron(u.monoidal, a.idem());
    std::string tag = "module-" + std::to_string(i) + "/";
    add_q(tag + "left-unit", "f*(λ) φ (φ₀ ⊗ a) = λ", lhs, lh.left, dom, a.idem());
    Mat lhs_c = kron(u.comonoidal, a.idem()) * nabla(top_j, a, j) * lj.left_inverse;
    add_q(tag + "left-counit", "(ψ₀ ⊗ a) ψ f*(λ⁻¹) = λ⁻¹", lhs_c, lh.left_inverse, a.idem(), dom);
  }
  return rep;
}

Report dual_module_check(const WeakHopf& h, const ModuleQ& m) {
  const std::size_t n = h.dim();
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    Mat s_i = h.antipode().col_block(i, 1);
    Mat acted(m.dim(), m.dim());
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(s_i(k, 0)) != 0) acted = acted + m.block(k).scaled(s_i(k, 0));
    blocks.push_back(acted.transpose());
  }
  Mat action = m.dim() == 0 ? Mat(0, 0) : hstack(blocks);
  Mat idem = m.dim() == 0 ? Mat(0, 0) : action * kron(h.wba().eta(), Mat::identity(m.dim()));
  if (m.dim() == 0) return Report{};
  return check_module(h.wba(), action, idem);
}

}  // namespace weakhopf
