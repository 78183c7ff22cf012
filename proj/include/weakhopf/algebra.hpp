#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weakhopf/diagram.hpp"
#include "weakhopf/exactla.hpp"
#include "weakhopf/report.hpp"

namespace weakhopf {

// Raised when data fails the (co)associativity or (co)unitality checks that
// constructors perform eagerly.
class StructureError : public Error {
 public:
  using Error::Error;
};

class IdempotencyFailure : public Error {
 public:
  using Error::Error;
};

class NotASplittingOfT : public Error {
 public:
  using Error::Error;
};

struct Unchecked {};
inline constexpr Unchecked unchecked{};

class AlgebraData {
 public:
  AlgebraData(Mat mu, Mat eta);
  AlgebraData(Mat mu, Mat eta, Unchecked);
  std::size_t dim() const { return dim_; }
  const Mat& mu() const { return mu_; }
  const Mat& eta() const { return eta_; }

 private:
  std::size_t dim_;
  Mat mu_, eta_;
};

class CoalgebraData {
 public:
  CoalgebraData(Mat delta, Mat eps);
  CoalgebraData(Mat delta, Mat eps, Unchecked);
  std::size_t dim() const { return dim_; }
  const Mat& delta() const { return delta_; }
  const Mat& eps() const { return eps_; }

 private:
  std::size_t dim_;
  Mat delta_, eps_;
};

Report check_algebra(const Mat& mu, const Mat& eta);
Report check_coalgebra(const Mat& delta, const Mat& eps);

// An algebra and a coalgebra on the same carrier. Whether the weak axioms hold is
// decided by check_weak_bialgebra, not by construction.
class WeakBialgebra {
 public:
  WeakBialgebra(AlgebraData alg, CoalgebraData coalg);
  WeakBialgebra(Mat mu, Mat eta, Mat delta, Mat eps);
  // Shape checks only; for deliberately broken data.
  static WeakBialgebra make_unchecked(Mat mu, Mat eta, Mat delta, Mat eps);

  std::size_t dim() const { return alg_.dim(); }
  const AlgebraData& alg() const { return alg_; }
  const CoalgebraData& coalg() const { return coalg_; }
  const Mat& mu() const { return alg_.mu(); }
  const Mat& eta() const { return alg_.eta(); }
  const Mat& delta() const { return coalg_.delta(); }
  const Mat& eps() const { return coalg_.eps(); }

 private:
  AlgebraData alg_;
  CoalgebraData coalg_;
};

class WeakHopf {
 public:
  WeakHopf(WeakBialgebra wba, Mat antipode);
  const WeakBialgebra& wba() const { return wba_; }
  const Mat& antipode() const { return antipode_; }
  std::size_t dim() const { return wba_.dim(); }

 private:
  WeakBialgebra wba_;
  Mat antipode_;
};

struct FrobeniusAlgebra {
  AlgebraData alg;
  CoalgebraData coalg;
  std::size_t dim() const { return alg.dim(); }
};

// Environment with object H and generators mu, eta, delta, eps (and S when given).
GenEnv structure_env(const WeakBialgebra& b, const Mat* antipode = nullptr);
GenEnv structure_env(const WeakHopf& h);
GenEnv structure_env(const FrobeniusAlgebra& c);

// f * g = mu (f (x) g) delta for maps from the coalgebra to the algebra.
Mat convolution(const Mat& f, const Mat& g, const CoalgebraData& src, const AlgebraData& dst);

// Product of two elements of the k-fold tensor power algebra of (mu, dim).
Mat tensor_power_product(const Mat& mu, std::size_t k, const Mat& x, const Mat& y);

Report check_frobenius(const AlgebraData& a, const CoalgebraData& c);
Scalar barbell(const WeakBialgebra& b);
Report check_bialgebra_strong(const WeakBialgebra& b);
Report check_weak_bialgebra(const WeakBialgebra& b);

struct CanonicalIdempotents {
  Mat s, t, z, r;
};

CanonicalIdempotents canonical_idempotents(const WeakBialgebra& b);
Report check_idempotent_isos(const WeakBialgebra& b);

Report is_grouplike(const Mat& c, const WeakBialgebra& b);
Report is_almost_grouplike(const Mat& c, const WeakBialgebra& b);

Report check_weak_hopf(const WeakHopf& h);
bool has_inverse(const Mat& antipode);

// Checks for a candidate morphism f: H -> J of weak bialgebras.
Report check_weak_morphism(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j);
// Strict preservation of mu, eta, delta, eps, and of the antipodes when both are given.
Report check_strict_morphism(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j,
                             const Mat* s_h = nullptr, const Mat* s_j = nullptr);

WeakBialgebra dual(const WeakBialgebra& b);
WeakHopf dual(const WeakHopf& h);
WeakBialgebra tensor_product(const WeakBialgebra& a, const WeakBialgebra& b);
WeakHopf tensor_product(const WeakHopf& a, const WeakHopf& b);

// ------------------------------------------------------------ fixture families

class FiniteGroup {
 public:
  // table[a][b] = index of a*b. Validated: associativity, identity, inverses.
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);
  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup symmetric(std::size_t n);

  std::size_t order() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

struct GroupoidMorphism {
  std::string name;
  std::size_t src;
  std::size_t tgt;
};

class Groupoid {
 public:
  // compose[f][g] = index of f∘g (g first), required exactly when src(f) = tgt(g).
  // inverse[f] = index of the inverse. Validated on construction.
  Groupoid(std::vector<std::string> objects, std::vector<GroupoidMorphism> morphisms,
           std::vector<std::vector<std::optional<std::size_t>>> compose, std::vector<std::size_t> inverse);

  static Groupoid pair(std::size_t n);
  static Groupoid discrete(std::size_t n);
  static Groupoid of_group(const FiniteGroup& g);
  static Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<GroupoidMorphism>& morphisms() const { return morphisms_; }
  std::optional<std::size_t> compose(std::size_t f, std::size_t g) const { return compose_[f][g]; }
  std::size_t inverse(std::size_t f) const { return inverse_[f]; }
  std::size_t identity_of(std::size_t object) const { return identities_[object]; }

 private:
  std::vector<std::string> objects_;
  std::vector<GroupoidMorphism> morphisms_;
  std::vector<std::vector<std::optional<std::size_t>>> compose_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> identities_;
};

WeakHopf groupoid_algebra(const Groupoid& g);
WeakHopf group_algebra(const FiniteGroup& g);
WeakHopf function_hopf(const FiniteGroup& g);

// Diagonal algebra k^n with Δ(e_i) = e_i (x) e_i, ε(e_i) = 1.
FrobeniusAlgebra diagonal_frobenius(std::size_t n);
// Full matrix algebra M_n with trace form ε = n·tr and Δ(E_ij) = (1/n) Σ_k E_ik (x) E_kj.
FrobeniusAlgebra matrix_frobenius(std::size_t n);

// Structure transported to the image of a splitting (retraction, section) of an
// idempotent of b: μ' = r μ (s (x) s), δ' = (r (x) r) Δ s, ε' = ε s, η' = r η.
FrobeniusAlgebra frobenius_from_splitting(const WeakBialgebra& b, const Mat& retraction, const Mat& section);

}  // namespace weakhopf
