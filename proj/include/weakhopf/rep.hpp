#pragma once

#include <cstddef>
#include <vector>

#include "weakhopf/algebra.hpp"
#include "weakhopf/exactla.hpp"
#include "weakhopf/report.hpp"

namespace weakhopf {

class InvalidModule : public Error {
 public:
  using Error::Error;
};

class NotWeakMorphism : public Error {
 public:
  using Error::Error;
};

// A module in the Karoubi envelope: carrier k^dim, action H (x) A -> A, and the
// idempotent α(η (x) A) it is unital up to.
class ModuleQ {
 public:
  // Validates every invariant against h; throws InvalidModule naming the first failure.
  ModuleQ(const WeakBialgebra& h, Mat action);
  ModuleQ(const WeakBialgebra& h, Mat action, Mat idem);

  std::size_t dim() const { return dim_; }
  std::size_t algebra_dim() const { return h_dim_; }
  const Mat& action() const { return action_; }
  const Mat& idem() const { return idem_; }
  // The a x a matrix by which the i-th basis element of H acts.
  Mat block(std::size_t i) const { return action_block(action_, i, dim_); }

 private:
  std::size_t h_dim_, dim_;
  Mat action_, idem_;
};

// Itemized module invariants; usable on data that would not construct.
Report check_module(const WeakBialgebra& h, const Mat& action, const Mat& idem);

ModuleQ regular_module(const WeakBialgebra& h);
ModuleQ zero_module(const WeakBialgebra& h);

// Idempotent-compressed equality: cod·f·dom = cod·g·dom.
bool q_equal(const Mat& f, const Mat& g, const Mat& dom_idem, const Mat& cod_idem);

// ModMorphism condition: intertwines the actions and satisfies b'·f·a' = f.
Report check_mod_morphism(const Mat& f, const ModuleQ& from, const ModuleQ& to);

// Basis of the space of ModMorphisms from -> to, as matrices.
std::vector<Mat> intertwiners(const ModuleQ& from, const ModuleQ& to);

// The idempotent by which Δη acts on a (x) b.
Mat nabla(const ModuleQ& a, const ModuleQ& b, const WeakBialgebra& h);
ModuleQ tensor_H(const ModuleQ& a, const ModuleQ& b, const WeakBialgebra& h);
// (H, t·μ, t).
ModuleQ unit_object(const WeakBialgebra& h);

struct UnitConstraints {
  Mat left;           // ⊤_H (x)_H a -> a : α(t (x) a)
  Mat left_inverse;   // a -> ⊤_H (x)_H a : ∇(η (x) a)
  Mat right;          // a (x)_H ⊤_H -> a : α(s (x) a)·c
  Mat right_inverse;  // a -> a (x)_H ⊤_H : ∇(a (x) η)
};

UnitConstraints unit_constraints(const ModuleQ& m, const WeakBialgebra& h);
// Round trips, ModMorphism conditions, and naturality against the given morphisms m -> m.
Report check_unit_constraints(const ModuleQ& m, const WeakBialgebra& h, const std::vector<Mat>& endomorphisms = {});

// Separable Frobenius structure of the forgetful functor: binary maps ∇,
// nullary maps η and ε. Checked on every pair and triple from the probe.
Report forgetful_frobenius_check(const WeakBialgebra& h, const std::vector<ModuleQ>& probe);

// f* m: the J-module m viewed over H through f. Throws NotWeakMorphism unless
// f passes the weak morphism checks.
ModuleQ restrict_along(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j, const ModuleQ& m);

struct RestrictionStructure {
  Mat monoidal;    // f*a (x)_H f*b -> f*(a (x)_J b): ∇_J
  Mat comonoidal;  // f*(a (x)_J b) -> f*a (x)_H f*b: ∇_J
};

RestrictionStructure structure_maps(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j, const ModuleQ& a,
                                    const ModuleQ& b);

struct RestrictionUnit {
  Mat monoidal;    // ⊤_H -> f*⊤_J : f·t
  Mat comonoidal;  // f*⊤_J -> ⊤_H : x ↦ ε(f(1₁)x)1₂
};

RestrictionUnit restriction_unit(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j);

// Frobenius squares, separability and nullary maps of f* on every triple from the probe.
Report check_restriction(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j,
                         const std::vector<ModuleQ>& probe);

// Dual carrier with action h ↦ (A_{S(h)})ᵀ, for a weak Hopf algebra.
Report dual_module_check(const WeakHopf& h, const ModuleQ& m);

}  // namespace weakhopf
