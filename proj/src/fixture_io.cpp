#include "weakhopf/fixture_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace weakhopf {

namespace {

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw FixtureError("missing field '" + key + "'");
  return j.at(key);
}

std::size_t count_field(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw FixtureError("field '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_field(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw FixtureError("field '" + key + "' must be a string");
  return v.get<std::string>();
}

Scalar scalar_from_json(const Json& v) {
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const std::exception&) {
      throw FixtureError("malformed scalar '" + v.get<std::string>() + "'");
    }
  }
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw FixtureError("scalars must be \"p/q\" strings or integers");
}

const Json& payload(const Json& j, const std::vector<std::string>& kinds) {
  std::string k = fixture_kind(j);
  for (const auto& want : kinds)
    if (k == want) return j;
  std::string list;
  for (const auto& want : kinds) list += (list.empty() ? "" : "|") + want;
  throw FixtureError("fixture kind '" + k + "' where " + list + " was expected");
}

Json base(const std::string& kind, const std::string& name) { return Json{{"kind", kind}, {"name", name}}; }

std::size_t object_index(const std::map<std::string, std::size_t>& ids, const Json& v) {
  if (!v.is_string()) throw FixtureError("object references must be ids");
  auto it = ids.find(v.get<std::string>());
  if (it == ids.end()) throw FixtureError("unknown object '" + v.get<std::string>() + "'");
  return it->second;
}

}  // namespace

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) throw FixtureError("a matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw FixtureError("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (j.is_array() && j.empty() && (rows == 0 || cols == 0)) return Mat(rows, cols);
  Mat m = mat_from_json(j);
  if (m.rows() == 0 && (rows == 0 || cols == 0)) return Mat(rows, cols);
  return m;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw FixtureError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FixtureError("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string fixture_kind(const Json& j) { return string_field(j, "kind"); }

Json to_json(const WeakBialgebra& b, const std::string& name) {
  Json j = base("wba", name);
  j["dim"] = b.dim();
  j["mu"] = mat_to_json(b.mu());
  j["eta"] = mat_to_json(b.eta());
  j["delta"] = mat_to_json(b.delta());
  j["eps"] = mat_to_json(b.eps());
  return j;
}

Json to_json(const WeakHopf& h, const std::string& name) {
  Json j = to_json(h.wba(), name);
  j["kind"] = "wha";
  j["antipode"] = mat_to_json(h.antipode());
  return j;
}

Json to_json(const FrobeniusAlgebra& c, const std::string& name) {
  Json j = base("frobalg", name);
  j["dim"] = c.dim();
  j["mu"] = mat_to_json(c.alg.mu());
  j["eta"] = mat_to_json(c.alg.eta());
  j["delta"] = mat_to_json(c.coalg.delta());
  j["eps"] = mat_to_json(c.coalg.eps());
  return j;
}

Json to_json(const FunctorData& f, const std::string& name) {
  Json j = base("functor", name);
  const std::size_t n = f.count();
  auto id = [&](std::size_t x) { return f.objects[x].id; };
  Json objects = Json::array();
  for (const auto& o : f.objects) objects.push_back({{"id", o.id}, {"dim", o.dim}});
  j["objects"] = objects;
  j["unit"] = id(f.unit);
  Json table = Json::array(), phi = Json::array(), psi = Json::array();
  for (std::size_t x = 0; x < n; ++x) {
    Json trow = Json::array(), prow = Json::array(), srow = Json::array();
    for (std::size_t y = 0; y < n; ++y) {
      trow.push_back(id(f.tensor[x][y]));
      prow.push_back(mat_to_json(f.phi[x][y]));
      srow.push_back(mat_to_json(f.psi[x][y]));
    }
    table.push_back(trow);
    phi.push_back(prow);
    psi.push_back(srow);
  }
  j["tensor_table"] = table;
  Json gens = Json::array();
  for (const auto& g : f.generators) {
    Json gj = {{"name", g.name}, {"src", id(g.src)}, {"tgt", id(g.tgt)}, {"mat", mat_to_json(g.mat)}};
    if (g.tensor_of) gj["tensor_of"] = {g.tensor_of->first, g.tensor_of->second};
    gens.push_back(gj);
  }
  j["generators"] = gens;
  j["phi"] = phi;
  j["psi"] = psi;
  j["phi0"] = mat_to_json(f.phi0);
  j["psi0"] = mat_to_json(f.psi0);
  if (f.duals) {
    Json d;
    Json dual_of = Json::array(), coev = Json::array(), ev = Json::array();
    for (std::size_t x = 0; x < n; ++x) {
      dual_of.push_back(id(f.duals->dual_of[x]));
      coev.push_back(mat_to_json(f.duals->coev[x]));
      ev.push_back(mat_to_json(f.duals->ev[x]));
    }
    j["duals"] = {{"dual_of", dual_of}, {"coev", coev}, {"ev", ev}};
  }
  return j;
}

WeakBialgebra wba_from_json(const Json& j) {
  const std::string k = fixture_kind(j);
  if (k == "group" || k == "groupoid" || k == "wha") return wha_from_json(j).wba();
  payload(j, {"wba", "frobalg"});
  const std::size_t n = count_field(j, "dim");
  try {
    return WeakBialgebra::make_unchecked(mat_from_json(field(j, "mu"), n, n * n), mat_from_json(field(j, "eta"), n, 1),
                                         mat_from_json(field(j, "delta"), n * n, n),
                                         mat_from_json(field(j, "eps"), 1, n));
  } catch (const ShapeError& e) {
    throw FixtureError(e.what());
  }
}

WeakHopf wha_from_json(const Json& j) {
  const std::string k = fixture_kind(j);
  if (k == "group") return group_algebra(group_from_json(j));
  if (k == "groupoid") return groupoid_algebra(groupoid_from_json(j));
  payload(j, {"wha"});
  Json as_wba = j;
  as_wba["kind"] = "wba";
  WeakBialgebra b = wba_from_json(as_wba);
  try {
    return WeakHopf(b, mat_from_json(field(j, "antipode"), b.dim(), b.dim()));
  } catch (const ShapeError& e) {
    throw FixtureError(e.what());
  }
}

FrobeniusAlgebra frobalg_from_json(const Json& j) {
  payload(j, {"frobalg"});
  const std::size_t n = count_field(j, "dim");
  try {
    return {AlgebraData(mat_from_json(field(j, "mu"), n, n * n), mat_from_json(field(j, "eta"), n, 1), unchecked),
            CoalgebraData(mat_from_json(field(j, "delta"), n * n, n), mat_from_json(field(j, "eps"), 1, n), unchecked)};
  } catch (const ShapeError& e) {
    throw FixtureError(e.what());
  }
}

FunctorData functor_from_json(const Json& j) {
  payload(j, {"functor"});
  FunctorData f;
  std::map<std::string, std::size_t> ids;
  for (const auto& o : field(j, "objects")) {
    f.objects.push_back({string_field(o, "id"), count_field(o, "dim")});
    if (!ids.emplace(f.objects.back().id, f.objects.size() - 1).second)
      throw FixtureError("duplicate object id '" + f.objects.back().id + "'");
  }
  const std::size_t n = f.count();
  f.unit = object_index(ids, field(j, "unit"));
  const Json& table = field(j, "tensor_table");
  const Json& phi = field(j, "phi");
  const Json& psi = field(j, "psi");
  if (!table.is_array() || table.size() != n || !phi.is_array() || phi.size() != n || !psi.is_array() ||
      psi.size() != n)
    throw FixtureError("tensor_table, phi and psi need one row per object");
  f.tensor.assign(n, std::vector<std::size_t>(n));
  f.phi.assign(n, std::vector<Mat>(n));
  f.psi.assign(n, std::vector<Mat>(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n || phi[x].size() != n || psi[x].size() != n)
      throw FixtureError("tensor_table, phi and psi rows need one entry per object");
    for (std::size_t y = 0; y < n; ++y) {
      f.tensor[x][y] = object_index(ids, table[x][y]);
      const std::size_t dxy = f.dim(f.tensor[x][y]), dx_dy = f.dim(x) * f.dim(y);
      f.phi[x][y] = mat_from_json(phi[x][y], dxy, dx_dy);
      f.psi[x][y] = mat_from_json(psi[x][y], dx_dy, dxy);
    }
  }
  if (j.contains("generators"))
    for (const auto& g : field(j, "generators")) {
      MorphismImage m;
      m.name = string_field(g, "name");
      m.src = object_index(ids, field(g, "src"));
      m.tgt = object_index(ids, field(g, "tgt"));
      m.mat = mat_from_json(field(g, "mat"), f.dim(m.tgt), f.dim(m.src));
      if (g.contains("tensor_of")) {
        const Json& t = g.at("tensor_of");
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
          throw FixtureError("tensor_of must name two morphisms");
        m.tensor_of = std::make_pair(t[0].get<std::string>(), t[1].get<std::string>());
      }
      f.generators.push_back(m);
    }
  f.phi0 = mat_from_json(field(j, "phi0"), f.dim(f.unit), 1);
  f.psi0 = mat_from_json(field(j, "psi0"), 1, f.dim(f.unit));
  if (j.contains("duals") && !j.at("duals").is_null()) {
    const Json& d = j.at("duals");
    DualData dd;
    const Json& dual_of = field(d, "dual_of");
    const Json& coev = field(d, "coev");
    const Json& ev = field(d, "ev");
    if (dual_of.size() != n || coev.size() != n || ev.size() != n)
      throw FixtureError("duals need one entry per object");
    for (std::size_t x = 0; x < n; ++x) {
      dd.dual_of.push_back(object_index(ids, dual_of[x]));
      dd.coev.push_back(mat_from_json(coev[x]));
      dd.ev.push_back(mat_from_json(ev[x]));
    }
    f.duals = dd;
  }
  try {
    check_shapes(f);
  } catch (const ShapeError& e) {
    throw FixtureError(e.what());
  }
  return f;
}

FiniteGroup group_from_json(const Json& j) {
  payload(j, {"group"});
  try {
    if (j.contains("family")) {
      const std::string fam = string_field(j, "family");
      const std::size_t n = count_field(j, "n");
      if (fam == "cyclic") return FiniteGroup::cyclic(n);
      if (fam == "symmetric") return FiniteGroup::symmetric(n);
      throw FixtureError("unknown group family '" + fam + "'");
    }
    std::vector<std::string> names = field(j, "names").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < names.size(); ++i) ids[names[i]] = i;
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : field(j, "table")) {
      table.emplace_back();
      for (const auto& v : row) table.back().push_back(object_index(ids, v));
    }
    return FiniteGroup(names, table);
  } catch (const Json::exception& e) {
    throw FixtureError(e.what());
  } catch (const FixtureError&) {
    throw;
  } catch (const Error& e) {
    throw FixtureError(e.what());
  }
}

Groupoid groupoid_from_json(const Json& j) {
  payload(j, {"groupoid"});
  try {
    if (j.contains("family")) {
      const std::string fam = string_field(j, "family");
      const std::size_t n = count_field(j, "n");
      if (fam == "pair") return Groupoid::pair(n);
      if (fam == "discrete") return Groupoid::discrete(n);
      throw FixtureError("unknown groupoid family '" + fam + "'");
    }
    std::vector<std::string> objects = field(j, "objects").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < objects.size(); ++i) ids[objects[i]] = i;
    std::vector<GroupoidMorphism> mors;
    std::map<std::string, std::size_t> mor_ids;
    for (const auto& m : field(j, "morphisms")) {
      mors.push_back({string_field(m, "name"), object_index(ids, field(m, "src")), object_index(ids, field(m, "tgt"))});
      mor_ids[mors.back().name] = mors.size() - 1;
    }
    std::vector<std::vector<std::optional<std::size_t>>> compose;
    for (const auto& row : field(j, "compose")) {
      compose.emplace_back();
      for (const auto& v : row)
        compose.back().push_back(v.is_null() ? std::nullopt : std::optional<std::size_t>(object_index(mor_ids, v)));
    }
    std::vector<std::size_t> inverse;
    for (const auto& v : field(j, "inverse")) inverse.push_back(object_index(mor_ids, v));
    return Groupoid(objects, mors, compose, inverse);
  } catch (const Json::exception& e) {
    throw FixtureError(e.what());
  } catch (const FixtureError&) {
    throw;
  } catch (const Error& e) {
    throw FixtureError(e.what());
  }
}

ModuleFixture modules_from_json(const Json& j) {
  payload(j, {"module"});
  ModuleFixture m{wba_from_json(field(j, "algebra")), {}};
  const std::size_t n = m.algebra.dim();
  for (const auto& spec : field(j, "modules")) {
    Mat action = mat_from_json(field(spec, "action"));
    const std::size_t a = action.rows();
    if (action.cols() != n * a) throw FixtureError("module action must be a x (dim H · a)");
    Mat idem = spec.contains("idem") ? mat_from_json(spec.at("idem"), a, a)
                                     : (a == 0 ? Mat(0, 0) : action * kron(m.algebra.eta(), Mat::identity(a)));
    if (idem.rows() != a || idem.cols() != a) throw FixtureError("module idempotent must be a x a");
    m.modules.push_back({action, idem});
  }
  return m;
}

GenEnv env_from_json(const Json& j) {
  const std::string k = fixture_kind(j);
  try {
    if (k == "frobalg") return structure_env(frobalg_from_json(j));
    if (k == "wha" || k == "group" || k == "groupoid") return structure_env(wha_from_json(j));
    if (k == "wba") return structure_env(wba_from_json(j));
    payload(j, {"env"});
    GenEnv env;
    for (const auto& [name, dim] : field(j, "objects").items()) env.bind_object(name, dim.get<std::size_t>());
    for (const auto& [name, g] : field(j, "generators").items())
      env.bind(name, field(g, "dom").get<ObjWord>(), field(g, "cod").get<ObjWord>(), mat_from_json(field(g, "mat")));
    return env;
  } catch (const Json::exception& e) {
    throw FixtureError(e.what());
  } catch (const ShapeError& e) {
    throw FixtureError(e.what());
  }
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json cj = {{"id", c.id}, {"anchor", c.anchor}, {"pass", c.pass}};
    if (!c.locus.empty()) cj["locus"] = c.locus;
    checks.push_back(cj);
  }
  return {{"checks", checks}, {"passed", r.checks().size() - r.failures()}, {"failed", r.failures()}};
}

}  // namespace weakhopf
