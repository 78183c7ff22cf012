#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "weakhopf/algebra.hpp"
#include "weakhopf/diagram.hpp"
#include "weakhopf/exactla.hpp"
#include "weakhopf/fincat.hpp"
#include "weakhopf/rep.hpp"
#include "weakhopf/report.hpp"

namespace weakhopf {

using Json = nlohmann::json;

// Malformed or mistyped fixture content.
class FixtureError : public Error {
 public:
  using Error::Error;
};

// Matrices are arrays of rows of "p/q" strings; integers are accepted as numbers too.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);
// As mat_from_json, but an empty array reads as a rows x cols zero-size matrix.
Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string fixture_kind(const Json& j);

Json to_json(const WeakBialgebra& b, const std::string& name);
Json to_json(const WeakHopf& h, const std::string& name);
Json to_json(const FrobeniusAlgebra& c, const std::string& name);
Json to_json(const FunctorData& f, const std::string& name);

// Shapes only; the axioms are left to the checkers.
WeakBialgebra wba_from_json(const Json& j);
// Reads kinds wha, group and groupoid.
WeakHopf wha_from_json(const Json& j);
FrobeniusAlgebra frobalg_from_json(const Json& j);
FunctorData functor_from_json(const Json& j);
FiniteGroup group_from_json(const Json& j);
Groupoid groupoid_from_json(const Json& j);

// {kind: module, algebra: <algebra fixture>, modules: [{action, idem?}]}. The
// idempotent defaults to α(η ⊗ a); module axioms are left to check_module.
struct ModuleSpec {
  Mat action;
  Mat idem;
};
struct ModuleFixture {
  WeakBialgebra algebra;
  std::vector<ModuleSpec> modules;
};
ModuleFixture modules_from_json(const Json& j);

// A generator environment: the structure maps of any algebra fixture, or an
// explicit {kind: env, objects: {x: dim}, generators: {g: {dom, cod, mat}}}.
GenEnv env_from_json(const Json& j);

Json report_to_json(const Report& r);

}  // namespace weakhopf
