#include "weakhopf/fincat.hpp"

#include <string>

namespace weakhopf {

namespace {

std::string shape_str(const Mat& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void expect_shape(const Mat& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeError(what + " has shape " + shape_str(m) + ", expected " + std::to_string(rows) + "x" +
                     std::to_string(cols));
}

struct Resolved {
  std::size_t src, tgt;
  Mat mat;
};

// A generator by name, or "id(x)" for the identity on object x.
Resolved resolve(const FunctorData& f, const std::string& name) {
  if (name.size() > 4 && name.compare(0, 3, "id(") == 0 && name.back() == ')') {
    std::size_t x = f.index_of(name.substr(3, name.size() - 4));
    return {x, x, Mat::identity(f.dim(x))};
  }
  for (const auto& g : f.generators)
    if (g.name == name) return {g.src, g.tgt, g.mat};
  throw ShapeError("unknown generator '" + name + "' in tensor_of");
}

std::string obj_tag(const FunctorData& f, std::initializer_list<std::size_t> xs) {
  std::string s;
  for (std::size_t x : xs) s += (s.empty() ? "" : ",") + f.objects[x].id;
  return "(" + s + ")";
}

}  // namespace

std::size_t FunctorData::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i].id == id) return i;
  throw ShapeError("unknown object '" + id + "'");
}

void check_shapes(const FunctorData& f) {
  const std::size_t n = f.count();
  if (n == 0) throw ShapeError("functor data has no objects");
  if (f.unit >= n) throw ShapeError("unit object out of range");
  if (f.tensor.size() != n) throw ShapeError("tensor table has the wrong number of rows");
  for (const auto& row : f.tensor) {
    if (row.size() != n) throw ShapeError("tensor table row has the wrong length");
    for (std::size_t z : row)
      if (z >= n) throw ShapeError("tensor table entry out of range");
  }
  for (const auto& g : f.generators) {
    if (g.src >= n || g.tgt >= n) throw ShapeError("generator " + g.name + " has an endpoint out of range");
    expect_shape(g.mat, f.dim(g.tgt), f.dim(g.src), "generator " + g.name);
  }
  if (f.phi.size() != n || f.psi.size() != n) throw ShapeError("phi/psi tables have the wrong number of rows");
  for (std::size_t x = 0; x < n; ++x) {
    if (f.phi[x].size() != n || f.psi[x].size() != n) throw ShapeError("phi/psi table row has the wrong length");
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = f.tensor[x][y];
      expect_shape(f.phi[x][y], f.dim(xy), f.dim(x) * f.dim(y), "phi" + obj_tag(f, {x, y}));
      expect_shape(f.psi[x][y], f.dim(x) * f.dim(y), f.dim(xy), "psi" + obj_tag(f, {x, y}));
    }
  }
  expect_shape(f.phi0, f.dim(f.unit), 1, "phi0");
  expect_shape(f.psi0, 1, f.dim(f.unit), "psi0");
  if (f.duals) {
    const DualData& d = *f.duals;
    if (d.dual_of.size() != n || d.coev.size() != n || d.ev.size() != n)
      throw ShapeError("duals tables have the wrong length");
    for (std::size_t x = 0; x < n; ++x) {
      if (d.dual_of[x] >= n) throw ShapeError("dual object out of range");
      const std::size_t dx = d.dual_of[x];
      expect_shape(d.coev[x], f.dim(f.tensor[x][dx]), f.dim(f.unit), "coev" + obj_tag(f, {x}));
      expect_shape(d.ev[x], f.dim(f.unit), f.dim(f.tensor[dx][x]), "ev" + obj_tag(f, {x}));
    }
  }
}

Mat induced_coev(const FunctorData& f, std::size_t x) {
  if (!f.duals) throw MissingDuals("functor data has no duals");
  const std::size_t dx = f.duals->dual_of[x];
  return f.psi[x][dx] * f.duals->coev[x] * f.phi0;
}

Mat induced_ev(const FunctorData& f, std::size_t x) {
  if (!f.duals) throw MissingDuals("functor data has no duals");
  const std::size_t dx = f.duals->dual_of[x];
  return f.psi0 * f.duals->ev[x] * f.phi[dx][x];
}

Report validate_functor_data(const FunctorData& f) {
  check_shapes(f);
  const std::size_t n = f.count(), u = f.unit;
  const auto& T = f.tensor;
  Report rep;

  bool assoc = true, unital = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (T[u][x] != x || T[x][u] != x) unital = false;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (T[T[x][y]][z] != T[x][T[y][z]]) assoc = false;
  }
  rep.add("tensor-table/associative", "(x ⊗ y) ⊗ z = x ⊗ (y ⊗ z)", assoc, assoc ? "" : "object table");
  rep.add("tensor-table/unital", "ι ⊗ x = x = x ⊗ ι", unital, unital ? "" : "object table");
  if (!assoc || !unital) return rep;

  auto I = [&](std::size_t x) { return Mat::identity(f.dim(x)); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::string tag = obj_tag(f, {x, y, z});
        const std::size_t xy = T[x][y], yz = T[y][z];
        rep.add_equal("monoidal/associativity" + tag, "φ(φ ⊗ z) = φ(x ⊗ φ)", f.phi[xy][z] * kron(f.phi[x][y], I(z)),
                      f.phi[x][yz] * kron(I(x), f.phi[y][z]));
        rep.add_equal("comonoidal/coassociativity" + tag, "(ψ ⊗ z)ψ = (x ⊗ ψ)ψ",
                      kron(f.psi[x][y], I(z)) * f.psi[xy][z], kron(I(x), f.psi[y][z]) * f.psi[x][yz]);
        rep.add_equal("frobenius-left" + tag, "(x ⊗ φ)(ψ ⊗ z) = ψ φ", kron(I(x), f.phi[y][z]) * kron(f.psi[x][y], I(z)),
                      f.psi[x][yz] * f.phi[xy][z]);
        rep.add_equal("frobenius-right" + tag, "(φ ⊗ z)(x ⊗ ψ) = ψ φ",
                      kron(f.phi[x][y], I(z)) * kron(I(x), f.psi[y][z]), f.psi[xy][z] * f.phi[x][yz]);
      }
  for (std::size_t x = 0; x < n; ++x) {
    const std::string tag = obj_tag(f, {x});
    rep.add_equal("monoidal/left-unit" + tag, "φ(φ₀ ⊗ x) = x", f.phi[u][x] * kron(f.phi0, I(x)), I(x));
    rep.add_equal("monoidal/right-unit" + tag, "φ(x ⊗ φ₀) = x", f.phi[x][u] * kron(I(x), f.phi0), I(x));
    rep.add_equal("comonoidal/left-counit" + tag, "(ψ₀ ⊗ x)ψ = x", kron(f.psi0, I(x)) * f.psi[u][x], I(x));
    rep.add_equal("comonoidal/right-counit" + tag, "(x ⊗ ψ₀)ψ = x", kron(I(x), f.psi0) * f.psi[x][u], I(x));
  }

  for (const auto& g : f.generators) {
    if (!g.tensor_of) continue;
    Resolved a = resolve(f, g.tensor_of->first), b = resolve(f, g.tensor_of->second);
    const bool endpoints = T[a.src][b.src] == g.src && T[a.tgt][b.tgt] == g.tgt;
    rep.add("naturality/endpoints/" + g.name, "g = a ⊗ b on objects", endpoints,
            endpoints ? "" : "tensor_of does not match the generator's endpoints");
    if (!endpoints) continue;
    rep.add_equal("naturality/phi/" + g.name, "φ (Fa ⊗ Fb) = F(a ⊗ b) φ", f.phi[a.tgt][b.tgt] * kron(a.mat, b.mat),
                  g.mat * f.phi[a.src][b.src]);
    rep.add_equal("naturality/psi/" + g.name, "(Fa ⊗ Fb) ψ = ψ F(a ⊗ b)", kron(a.mat, b.mat) * f.psi[a.src][b.src],
                  f.psi[a.tgt][b.tgt] * g.mat);
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::string tag = obj_tag(f, {x, y});
      Mat phipsi = f.phi[x][y] * f.psi[x][y], psiphi = f.psi[x][y] * f.phi[x][y];
      rep.add_equal("separable" + tag, "φ ψ = F(x ⊗ y)", phipsi, I(T[x][y]));
      rep.add_equal("strong/binary-section" + tag, "φ ψ = F(x ⊗ y)", phipsi, I(T[x][y]));
      rep.add_equal("strong/binary-retraction" + tag, "ψ φ = Fx ⊗ Fy", psiphi, Mat::identity(f.dim(x) * f.dim(y)));
    }
  rep.add_equal("strong/nullary-section", "φ₀ ψ₀ = Fι", f.phi0 * f.psi0, I(u));
  rep.add_equal("strong/nullary-retraction", "ψ₀ φ₀ = 1", f.psi0 * f.phi0, Mat::identity(1));

  if (f.duals) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t dx = f.duals->dual_of[x];
      Mat coev = induced_coev(f, x), ev = induced_ev(f, x);
      const std::string tag = obj_tag(f, {x});
      rep.add_equal("duals/snake-object" + tag, "(Fx ⊗ ẽv)(c̃oev ⊗ Fx) = Fx", kron(I(x), ev) * kron(coev, I(x)), I(x));
      rep.add_equal("duals/snake-dual" + tag, "(ẽv ⊗ F*x)(F*x ⊗ c̃oev) = F*x", kron(ev, I(dx)) * kron(I(dx), coev),
                    I(dx));
    }
  }
  return rep;
}

bool is_separable_frobenius(const Report& validation) {
  for (const auto& c : validation.checks())
    if (!c.pass && c.id.rfind("strong/", 0) != 0) return false;
  return true;
}

bool is_strong(const Report& validation) {
  bool any = false;
  for (const auto& c : validation.checks())
    if (c.id.rfind("strong/", 0) == 0) {
      any = true;
      if (!c.pass) return false;
    }
  return any;
}

FunctorData deloop(const FrobeniusAlgebra& c) {
  Report fr = check_frobenius(c.alg, c.coalg);
  if (!fr.all_pass()) {
    for (const auto& ch : fr.checks())
      if (!ch.pass) throw NotSeparableFrobenius("not a separable Frobenius algebra: " + ch.id);
  }
  const std::size_t d = c.dim();
  FunctorData f;
  f.objects = {{"i", d}};
  f.unit = 0;
  f.tensor = {{0}};
  f.phi = {{c.alg.mu()}};
  f.psi = {{c.coalg.delta()}};
  f.phi0 = c.alg.eta();
  f.psi0 = c.coalg.eps();
  // τ and γ are the identity of ι in the terminal category.
  f.duals = DualData{{0}, {Mat::identity(d)}, {Mat::identity(d)}};
  return f;
}

FrobeniusAlgebra unit_frobenius(const FunctorData& f) {
  const std::size_t u = f.unit;
  return {AlgebraData(f.phi[u][u], f.phi0), CoalgebraData(f.psi[u][u], f.psi0)};
}

FunctorData discrete_group_functor(const FiniteGroup& g) {
  const std::size_t n = g.order();
  FunctorData f;
  for (std::size_t i = 0; i < n; ++i) f.objects.push_back({g.names()[i], 1});
  f.unit = g.identity();
  f.tensor = g.table();
  f.phi.assign(n, std::vector<Mat>(n, Mat::identity(1)));
  f.psi = f.phi;
  f.phi0 = Mat::identity(1);
  f.psi0 = Mat::identity(1);
  DualData d;
  for (std::size_t i = 0; i < n; ++i) d.dual_of.push_back(g.inverse(i));
  d.coev.assign(n, Mat::identity(1));
  d.ev.assign(n, Mat::identity(1));
  f.duals = d;
  return f;
}

Shape shape_of(const FunctorData& f) {
  Shape s;
  for (const auto& o : f.objects) {
    s.names.push_back(o.id);
    s.dims.push_back(o.dim);
    s.idems.push_back(Mat::identity(o.dim));
  }
  s.arrows = f.generators;
  return s;
}

Shape probe_functor_from_modules(const WeakBialgebra& h, const std::vector<ModuleQ>& probe) {
  Shape s;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    if (probe[i].algebra_dim() != h.dim()) throw ShapeError("probe module over an algebra of a different dimension");
    s.names.push_back("m" + std::to_string(i));
    s.dims.push_back(probe[i].dim());
    s.idems.push_back(probe[i].idem());
  }
  for (std::size_t i = 0; i < probe.size(); ++i)
    for (std::size_t j = 0; j < probe.size(); ++j) {
      std::vector<Mat> basis = intertwiners(probe[i], probe[j]);
      for (std::size_t k = 0; k < basis.size(); ++k)
        s.arrows.push_back({"f" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k), i, j,
                            basis[k], std::nullopt});
    }
  return s;
}

Shape square_shape(const Shape& s) {
  const std::size_t n = s.count();
  Shape sq;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      sq.names.push_back(s.names[x] + "," + s.names[y]);
      sq.dims.push_back(s.dims[x] * s.dims[y]);
      sq.idems.push_back(kron(s.idems[x], s.idems[y]));
    }
  for (const auto& g : s.arrows)
    for (std::size_t z = 0; z < n; ++z) {
      Mat iz = Mat::identity(s.dims[z]);
      sq.arrows.push_back({g.name + "*id(" + s.names[z] + ")", g.src * n + z, g.tgt * n + z, kron(g.mat, iz),
                           std::nullopt});
      sq.arrows.push_back({"id(" + s.names[z] + ")*" + g.name, z * n + g.src, z * n + g.tgt, kron(iz, g.mat),
                           std::nullopt});
    }
  return sq;
}

}  // namespace weakhopf
