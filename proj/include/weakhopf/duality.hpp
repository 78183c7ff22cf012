#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "weakhopf/algebra.hpp"
#include "weakhopf/exactla.hpp"
#include "weakhopf/fincat.hpp"
#include "weakhopf/rep.hpp"
#include "weakhopf/report.hpp"
#include "weakhopf/tannaka.hpp"

namespace weakhopf {

class NotBraided : public Error {
 public:
  using Error::Error;
};

// ------------------------------------------------------------------ adjunction

struct AdjunctionUnit {
  EndData end;  // tan of the forgetful functor on the probe
  Mat mu, eta;  // algebra structure of the end
  Mat unit;     // H -> end, the map whose discharged form is the module actions
};

// The probe shape defaults to every module map between probe modules.
AdjunctionUnit adjunction_unit(const WeakBialgebra& h, const std::vector<ModuleQ>& probe);
AdjunctionUnit adjunction_unit(const WeakBialgebra& h, const std::vector<ModuleQ>& probe, const Shape& shape);
// Strict preservation of μ and η by the unit.
Report check_adjunction_unit(const WeakBialgebra& h, const AdjunctionUnit& u);

struct AdjunctionCounit {
  std::vector<ModuleQ> modules;  // εx = (Fx, α_x, Fx)
  Mat retraction;                // φ₀: tan F -> F⊤, α_ι (tan ⊗ φ₀)
  Mat section;                   // ψ₀: F⊤ -> tan F, discharged form φ_{ι,x}
};

AdjunctionCounit adjunction_counit(const TannakaResult& t);
// Module axioms, strong monoidality in the Karoubi envelope, and the splitting
// section·retraction = t, retraction·section = F⊤.
Report check_adjunction_counit(const TannakaResult& t, const AdjunctionCounit& c);

// Restricting the canonical action of the probe end along the unit gives back
// every sample module.
Report triangle_one(const WeakBialgebra& h, const std::vector<ModuleQ>& samples);
// tan ε_F · η_{tan F} = tan F; also returns the composite.
std::pair<Report, Mat> triangle_two(const TannakaResult& t);

// The split Frobenius structure on F⊤ coincides with (φ_{ι,ι}, φ₀, ψ_{ι,ι}, ψ₀).
Report chikhladze_check(const TannakaResult& t);

// ------------------------------------------------------------- change of base

// Φ = (−) ⊗ C for a commutative, cocommutative separable Frobenius algebra C.
class FrobEndofunctor {
 public:
  // Throws NotSeparableFrobenius or NotBraided.
  explicit FrobEndofunctor(FrobeniusAlgebra c);

  std::size_t carrier() const { return c_.dim(); }
  const FrobeniusAlgebra& algebra() const { return c_; }
  std::size_t apply(std::size_t dim) const { return dim * c_.dim(); }
  Mat apply(const Mat& f) const { return kron(f, Mat::identity(c_.dim())); }
  // φ_{V,W}: ΦV ⊗ ΦW -> Φ(V ⊗ W) and ψ_{V,W} back.
  Mat phi(std::size_t v, std::size_t w) const;
  Mat psi(std::size_t v, std::size_t w) const;
  Mat phi0() const { return c_.alg.eta(); }
  Mat psi0() const { return c_.coalg.eps(); }

 private:
  FrobeniusAlgebra c_;
};

// Frobenius monoidal axioms, separability and braidedness of Φ on sampled dims.
Report check_frob_endofunctor(const FrobEndofunctor& phi, const std::vector<std::size_t>& dims);

// φ_{Y,X} c ψ_{X,Y} = Φ(c) φ_{X,Y} ψ_{X,Y} = φ_{Y,X} ψ_{Y,X} Φ(c) for each pair.
Report bow_lemma_check(const FrobEndofunctor& phi, const std::vector<std::pair<std::size_t, std::size_t>>& dims);

// ΦB with μ' = Φμ·φ, η' = Φη·φ₀, Δ' = ψ·ΦΔ, ε' = ψ₀·Φε.
WeakBialgebra wba_transport(const FrobEndofunctor& phi, const WeakBialgebra& b);

// The composite ΦF as functor data.
FunctorData phi_functor(const FrobEndofunctor& phi, const FunctorData& f);

// Φ tan F -> tan ΦF with discharged form Φα · φ_{tan F, Fx}.
Mat rho(const FrobEndofunctor& phi, const TannakaResult& t, const TannakaResult& t_phi);
// Strict preservation of μ, η, Δ, ε from wba_transport(Φ, tan F) to tan ΦF.
Report check_rho(const FrobEndofunctor& phi, const TannakaResult& t, const TannakaResult& t_phi);

// (Φa, Φβ·φ, Φa′) over wba_transport(Φ, b).
ModuleQ gamma(const FrobEndofunctor& phi, const WeakBialgebra& b, const ModuleQ& m);

}  // namespace weakhopf
