#pragma once

#include <string>
#include <vector>

namespace weakhopf {

// The single transcription point of every structural equation, written in the
// term language over the generators mu, eta, delta, eps, S on the object H.
struct AxiomEquation {
  std::string id;
  std::string anchor;
  std::string lhs;
  std::string rhs;
};

const std::vector<AxiomEquation>& algebra_axioms();
const std::vector<AxiomEquation>& coalgebra_axioms();
const std::vector<AxiomEquation>& frobenius_axioms();
const std::vector<AxiomEquation>& strong_bialgebra_axioms();
const std::vector<AxiomEquation>& weak_bialgebra_axioms();
const std::vector<AxiomEquation>& weak_antipode_axioms();

// Terms for the four canonical idempotents H -> H.
//   t(x) = ε(1₁x)1₂   one braiding (c, read as c⁻¹ in a non-symmetric base: no test)
//   r(x) = 1₁ε(x1₂)   one braiding (same remark)
//   s(x) = 1₁ε(1₂x)   no braiding needed in this presentation
//   z(x) = ε(x1₁)1₂   no braiding needed in this presentation
const std::string& idempotent_s();
const std::string& idempotent_t();
const std::string& idempotent_z();
const std::string& idempotent_r();

}  // namespace weakhopf
