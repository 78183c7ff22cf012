#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakhopf/algebra.hpp"
#include "weakhopf/exactla.hpp"
#include "weakhopf/report.hpp"
#include "weakhopf/rep.hpp"

namespace weakhopf {

class NotSeparableFrobenius : public Error {
 public:
  using Error::Error;
};

class MissingDuals : public Error {
 public:
  using Error::Error;
};

struct ObjectSpec {
  std::string id;
  std::size_t dim = 0;
};

// The image F(g): F(src) -> F(tgt) of a generating morphism. When the morphism is
// a tensor product g (x) h of two others, `tensor_of` names them ("id(x)" for an
// identity); naturality of φ and ψ is checked on exactly these.
struct MorphismImage {
  std::string name;
  std::size_t src = 0;
  std::size_t tgt = 0;
  Mat mat;
  std::optional<std::pair<std::string, std::string>> tensor_of;
};

struct DualData {
  std::vector<std::size_t> dual_of;  // x ↦ *x
  std::vector<Mat> coev;             // F(τ_x): F(ι) -> F(x ⊗ *x)
  std::vector<Mat> ev;               // F(γ_x): F(*x ⊗ x) -> F(ι)
};

// A finite strict monoidal category presented through its image under a functor
// F with monoidal (φ, φ₀) and comonoidal (ψ, ψ₀) structure.
struct FunctorData {
  std::vector<ObjectSpec> objects;
  std::size_t unit = 0;
  std::vector<std::vector<std::size_t>> tensor;  // tensor[x][y] = x ⊗ y
  std::vector<MorphismImage> generators;
  std::vector<std::vector<Mat>> phi;  // phi[x][y]: Fx ⊗ Fy -> F(x ⊗ y)
  std::vector<std::vector<Mat>> psi;  // psi[x][y]: F(x ⊗ y) -> Fx ⊗ Fy
  Mat phi0;                           // ⊤ -> F(ι)
  Mat psi0;                           // F(ι) -> ⊤
  std::optional<DualData> duals;

  std::size_t count() const { return objects.size(); }
  std::size_t dim(std::size_t x) const { return objects[x].dim; }
  std::size_t index_of(const std::string& id) const;
};

// Throws ShapeError when any table or matrix has the wrong size.
void check_shapes(const FunctorData& f);

// Itemized verdicts for coherence, naturality, the Frobenius and separability
// equations, the four strongness probes, and the snake identities of the induced
// duality data.
Report validate_functor_data(const FunctorData& f);
// Every verdict other than the strongness probes passes.
bool is_separable_frobenius(const Report& validation);
// Every strongness probe passes.
bool is_strong(const Report& validation);

// Induced duality in the image: c̃oev = ψ F(τ) φ₀ and ẽv = ψ₀ F(γ) φ.
Mat induced_coev(const FunctorData& f, std::size_t x);
Mat induced_ev(const FunctorData& f, std::size_t x);

// One object ι with F(ι) = C; φ = μ, ψ = Δ, φ₀ = η, ψ₀ = ε, *ι = ι.
FunctorData deloop(const FrobeniusAlgebra& c);
// Recovers (μ, η, Δ, ε) on F(ι) from the structure maps at the unit.
FrobeniusAlgebra unit_frobenius(const FunctorData& f);
// Objects are group elements, tensor is the group law, every F-image is k.
FunctorData discrete_group_functor(const FiniteGroup& g);

// A finite diagram of vector spaces, the input of the end computation. `idems`
// holds, per object, the idempotent of the Karoubi envelope the object lives on
// (the identity for plain functors).
struct Shape {
  std::vector<std::string> names;
  std::vector<std::size_t> dims;
  std::vector<MorphismImage> arrows;
  std::vector<Mat> idems;

  std::size_t count() const { return dims.size(); }
};

Shape shape_of(const FunctorData& f);
// Objects are the probe modules; arrows a basis of every space of module maps.
Shape probe_functor_from_modules(const WeakBialgebra& h, const std::vector<ModuleQ>& probe);
// The functor F² on pairs of objects, with arrows g ⊗ id and id ⊗ g.
Shape square_shape(const Shape& s);

}  // namespace weakhopf
