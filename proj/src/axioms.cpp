#include "weakhopf/axioms.hpp"

namespace weakhopf {

const std::string& idempotent_t() {
  static const std::string t = "(eta * id(H)) ; (delta * id(H)) ; (id(H) * braid(H,H)) ; ((mu ; eps) * id(H))";
  return t;
}

const std::string& idempotent_r() {
  static const std::string r = "(id(H) * eta) ; (id(H) * delta) ; (braid(H,H) * id(H)) ; (id(H) * (mu ; eps))";
  return r;
}

const std::string& idempotent_s() {
  static const std::string s = "(eta * id(H)) ; (delta * id(H)) ; (id(H) * (mu ; eps))";
  return s;
}

const std::string& idempotent_z() {
  static const std::string z = "(id(H) * eta) ; (id(H) * delta) ; ((mu ; eps) * id(H))";
  return z;
}

const std::vector<AxiomEquation>& algebra_axioms() {
  static const std::vector<AxiomEquation> v = {
      {"associativity", "μ(μ ⊗ H) = μ(H ⊗ μ)", "(mu * id(H)) ; mu", "(id(H) * mu) ; mu"},
      {"left-unit", "μ(η ⊗ H) = H", "(eta * id(H)) ; mu", "id(H)"},
      {"right-unit", "μ(H ⊗ η) = H", "(id(H) * eta) ; mu", "id(H)"},
  };
  return v;
}

const std::vector<AxiomEquation>& coalgebra_axioms() {
  static const std::vector<AxiomEquation> v = {
      {"coassociativity", "(Δ ⊗ H)Δ = (H ⊗ Δ)Δ", "delta ; (delta * id(H))", "delta ; (id(H) * delta)"},
      {"left-counit", "(ε ⊗ H)Δ = H", "delta ; (eps * id(H))", "id(H)"},
      {"right-counit", "(H ⊗ ε)Δ = H", "delta ; (id(H) * eps)", "id(H)"},
  };
  return v;
}

const std::vector<AxiomEquation>& frobenius_axioms() {
  static const std::vector<AxiomEquation> v = {
      {"frobenius-left", "(H ⊗ μ)(Δ ⊗ H) = Δμ", "(delta * id(H)) ; (id(H) * mu)", "mu ; delta"},
      {"frobenius-right", "(μ ⊗ H)(H ⊗ Δ) = Δμ", "(id(H) * delta) ; (mu * id(H))", "mu ; delta"},
      {"separable", "μΔ = H", "delta ; mu", "id(H)"},
  };
  return v;
}

const std::vector<AxiomEquation>& strong_bialgebra_axioms() {
  static const std::vector<AxiomEquation> v = {
      {"barbell", "εη = 1", "eta ; eps", "id()"},
      {"strong-unit", "Δη = η ⊗ η", "eta ; delta", "eta * eta"},
      {"strong-counit", "εμ = ε ⊗ ε", "mu ; eps", "eps * eps"},
      {"bialgebra", "Δμ = (μ ⊗ μ)(H ⊗ c ⊗ H)(Δ ⊗ Δ)", "mu ; delta",
       "(delta * delta) ; (id(H) * braid(H,H) * id(H)) ; (mu * mu)"},
  };
  return v;
}

const std::vector<AxiomEquation>& weak_bialgebra_axioms() {
  static const std::vector<AxiomEquation> v = {
      {"weak-unit-1", "Δ²(1) = (Δ(1) ⊗ 1)(1 ⊗ Δ(1))", "eta ; delta ; (delta * id(H))",
       "(eta * eta) ; (delta * delta) ; (id(H) * mu * id(H))"},
      {"weak-unit-2", "Δ²(1) = (1 ⊗ Δ(1))(Δ(1) ⊗ 1)", "eta ; delta ; (delta * id(H))",
       "(eta * eta) ; (delta * delta) ; (id(H) * braid_inv(H,H) * id(H)) ; (id(H) * mu * id(H))"},
      {"weak-counit-1", "ε(xyz) = ε(xy₁)ε(y₂z)", "(mu * id(H)) ; mu ; eps",
       "(id(H) * delta * id(H)) ; (mu * mu) ; (eps * eps)"},
      {"weak-counit-2", "ε(xyz) = ε(xy₂)ε(y₁z)", "(mu * id(H)) ; mu ; eps",
       "(id(H) * (delta ; braid_inv(H,H)) * id(H)) ; (mu * mu) ; (eps * eps)"},
      {"bialgebra", "Δμ = (μ ⊗ μ)(H ⊗ c ⊗ H)(Δ ⊗ Δ)", "mu ; delta",
       "(delta * delta) ; (id(H) * braid(H,H) * id(H)) ; (mu * mu)"},
  };
  return v;
}

const std::vector<AxiomEquation>& weak_antipode_axioms() {
  static const std::vector<AxiomEquation> v = {
      {"antipode-left", "S ⋆ id = r", "delta ; (S * id(H)) ; mu", idempotent_r()},
      {"antipode-right", "id ⋆ S = t", "delta ; (id(H) * S) ; mu", idempotent_t()},
      {"antipode-middle", "S ⋆ id ⋆ S = S", "delta ; (delta * id(H)) ; (S * id(H) * S) ; (mu * id(H)) ; mu", "S"},
  };
  return v;
}

}  // namespace weakhopf
