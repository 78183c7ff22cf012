#include "weakhopf/tannaka.hpp"

#include <string>

namespace weakhopf {

namespace {

std::string first_failure(const Report& rep) {
  for (const auto& c : rep.checks())
    if (!c.pass) return c.id + (c.locus.empty() ? "" : " (" + c.locus + ")");
  return {};
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

std::vector<std::size_t> tuple_dims(const Shape& s, const std::vector<std::size_t>& tuple) {
  std::vector<std::size_t> d;
  for (std::size_t x : tuple) d.push_back(s.dims[x]);
  return d;
}

// Position of the tuple in lexicographic order.
std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t objects) {
  std::size_t k = 0;
  for (std::size_t x : tuple) k = k * objects + x;
  return k;
}

// Moves interleaved factors (a₁, b₁, a₂, b₂, …) to (a₁, …, aₙ, b₁, …, bₙ).
std::vector<std::size_t> deinterleave(std::size_t n) {
  std::vector<std::size_t> order(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    order[j] = 2 * j;
    order[n + j] = 2 * j + 1;
  }
  return order;
}

Mat solve_or_throw(const DischargedFamily& fam, const EndData& e, const std::string& what) {
  try {
    return solve_discharged(fam, e);
  } catch (const NotNatural& err) {
    throw NotNatural(what + ": " + err.what());
  }
}

}  // namespace

EndData compute_end(const Shape& s) {
  const std::size_t n = s.count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) offset[x + 1] = offset[x] + s.dims[x] * s.dims[x];
  const std::size_t ambient = offset[n];

  std::vector<Mat> rows;
  for (const auto& g : s.arrows) {
    const std::size_t dx = s.dims[g.src], dy = s.dims[g.tgt];
    if (dx == 0 || dy == 0) continue;
    // Fg m_x = m_y Fg, in row-major vec form.
    Mat block(dy * dx, ambient);
    Mat left = kron(g.mat, Mat::identity(dx)), right = kron(Mat::identity(dy), g.mat.transpose());
    for (std::size_t i = 0; i < dy * dx; ++i) {
      for (std::size_t j = 0; j < dx * dx; ++j) block(i, offset[g.src] + j) += left(i, j);
      for (std::size_t j = 0; j < dy * dy; ++j) block(i, offset[g.tgt] + j) -= right(i, j);
    }
    rows.push_back(block);
  }
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t d = s.dims[x];
    if (d == 0 || s.idems[x].is_identity()) continue;
    // e m e = m.
    Mat block(d * d, ambient);
    Mat c = kron(s.idems[x], s.idems[x].transpose()) - Mat::identity(d * d);
    for (std::size_t i = 0; i < d * d; ++i)
      for (std::size_t j = 0; j < d * d; ++j) block(i, offset[x] + j) = c(i, j);
    rows.push_back(block);
  }

  EndData e;
  e.shape = s;
  e.inclusion = rows.empty() ? Mat::identity(ambient) : kernel(vstack(rows));
  e.dim = e.inclusion.cols();
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t d = s.dims[x];
    Mat pi = e.inclusion.row_block(offset[x], d * d);
    Mat alpha(d, e.dim * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t a = 0; a < e.dim; ++a)
        for (std::size_t k = 0; k < d; ++k) alpha(i, a * d + k) = pi(i * d + k, a);
    e.projections.push_back(pi);
    e.alpha.push_back(alpha);
  }
  return e;
}

std::vector<std::vector<std::size_t>> object_tuples(std::size_t objects, std::size_t arity) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t total = power(objects, arity);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<std::size_t> t(arity);
    std::size_t r = k;
    for (std::size_t i = arity; i-- > 0;) {
      t[i] = r % objects;
      r /= objects;
    }
    out.push_back(t);
  }
  return out;
}

Mat alpha_power(const EndData& e, const std::vector<std::size_t>& tuple) {
  const std::size_t n = tuple.size();
  if (n == 0) throw ShapeError("alpha_power needs at least one object");
  std::vector<Mat> factors;
  std::vector<std::size_t> dims;
  for (std::size_t x : tuple) {
    factors.push_back(e.alpha[x]);
    dims.push_back(e.dim);
    dims.push_back(e.shape.dims[x]);
  }
  Mat interleaved = kron_all(factors);
  return permute_row_factors(interleaved.transpose(), dims, deinterleave(n)).transpose();
}

DischargedFamily discharge(const Mat& u, const EndData& e, std::size_t arity) {
  if (u.rows() != power(e.dim, arity))
    throw ShapeError("discharge: map has " + std::to_string(u.rows()) + " rows, expected " +
                     std::to_string(power(e.dim, arity)));
  DischargedFamily fam{u.cols(), arity, {}};
  for (const auto& t : object_tuples(e.shape.count(), arity)) {
    const std::size_t d = product(tuple_dims(e.shape, t));
    fam.components.push_back(alpha_power(e, t) * kron(u, Mat::identity(d)));
  }
  return fam;
}

Report check_natural(const DischargedFamily& fam, const EndData& e) {
  const Shape& s = e.shape;
  const auto tuples = object_tuples(s.count(), fam.arity);
  if (fam.components.size() != tuples.size()) throw ShapeError("discharged family has the wrong number of components");
  Report rep;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    const auto& t = tuples[k];
    const auto dims = tuple_dims(s, t);
    const std::size_t d = product(dims);
    const Mat& c = fam.components[k];
    if (c.rows() != d || c.cols() != fam.source_dim * d)
      throw ShapeError("discharged component " + std::to_string(k) + " has the wrong shape");
    std::vector<Mat> idems;
    for (std::size_t x : t) idems.push_back(s.idems[x]);
    Mat e_all = kron_all(idems);
    const std::string tag = "tuple-" + std::to_string(k);
    rep.add_equal(tag + "/absorbs-left", "E C = C", e_all * c, c);
    rep.add_equal(tag + "/absorbs-right", "C (X ⊗ E) = C", c * kron(Mat::identity(fam.source_dim), e_all), c);
    for (std::size_t slot = 0; slot < t.size(); ++slot)
      for (const auto& g : s.arrows) {
        if (g.src != t[slot]) continue;
        auto moved = t;
        moved[slot] = g.tgt;
        const Mat& c2 = fam.components[tuple_index(moved, s.count())];
        const std::size_t pre = product(std::vector<std::size_t>(dims.begin(), dims.begin() + slot));
        const std::size_t post = product(std::vector<std::size_t>(dims.begin() + slot + 1, dims.end()));
        Mat lift = kron_all({Mat::identity(pre), g.mat, Mat::identity(post)});
        rep.add_equal(tag + "/slot-" + std::to_string(slot) + "/" + g.name, "Fg C = C (X ⊗ Fg)", lift * c,
                      c2 * kron(Mat::identity(fam.source_dim), lift));
      }
  }
  return rep;
}

Mat solve_discharged(const DischargedFamily& fam, const EndData& e) {
  Report nat = check_natural(fam, e);
  if (!nat.all_pass()) throw NotNatural("family is not natural: " + first_failure(nat));
  const std::size_t x_dim = fam.source_dim, n = fam.arity;
  const std::size_t target_dim = power(e.dim, n);
  if (target_dim == 0) return Mat(0, x_dim);
  const auto tuples = object_tuples(e.shape.count(), n);
  std::vector<Mat> through, target;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    const auto& t = tuples[k];
    const auto dims = tuple_dims(e.shape, t);
    const std::size_t d = product(dims);
    if (d == 0) continue;
    std::vector<Mat> pis;
    std::vector<std::size_t> pi_dims;
    for (std::size_t x : t) {
      pis.push_back(e.projections[x]);
      pi_dims.push_back(e.shape.dims[x]);
      pi_dims.push_back(e.shape.dims[x]);
    }
    through.push_back(permute_row_factors(kron_all(pis), pi_dims, deinterleave(n)));
    std::vector<Mat> cols;
    for (std::size_t j = 0; j < x_dim; ++j) cols.push_back(vec(fam.components[k].col_block(j * d, d)));
    target.push_back(x_dim == 0 ? Mat(d * d, 0) : hstack(cols));
  }
  try {
    return solve_factor(vstack(through), vstack(target));
  } catch (const NoExactFactorization& err) {
    throw NotInEnd(std::string("natural family does not factor through the end: ") + err.what());
  }
}

Mat end_multiplication(const EndData& e) {
  DischargedFamily fam{e.dim * e.dim, 1, {}};
  for (std::size_t x = 0; x < e.shape.count(); ++x)
    fam.components.push_back(e.alpha[x] * kron(Mat::identity(e.dim), e.alpha[x]));
  return solve_or_throw(fam, e, "multiplication");
}

Mat end_unit(const EndData& e) {
  DischargedFamily fam{1, 1, {}};
  for (std::size_t x = 0; x < e.shape.count(); ++x) fam.components.push_back(e.shape.idems[x]);
  return solve_or_throw(fam, e, "unit");
}

WeakHopf TannakaResult::weak_hopf() const {
  if (!antipode) throw MissingDuals("no antipode was built");
  return WeakHopf(wba(), *antipode);
}

Mat build_antipode(const EndData& e, const FunctorData& f) {
  if (!f.duals) throw MissingDuals("the antipode needs duals in the source category");
  const std::size_t n = f.count();
  DischargedFamily fam{e.dim, 1, {}};
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t dual = f.duals->dual_of[x], dx = f.dim(x), dd = f.dim(dual);
    Mat coev = induced_coev(f, x), ev = induced_ev(f, x);
    Mat ix = Mat::identity(dx);
    fam.components.push_back(kron(ix, ev) * kron_all({ix, e.alpha[dual], ix}) *
                             kron_all({braid(e.dim, dx), Mat::identity(dd), ix}) *
                             kron_all({Mat::identity(e.dim), coev, ix}));
  }
  return solve_or_throw(fam, e, "antipode");
}

namespace {

TannakaResult assemble(const FunctorData& f, bool antipode) {
  TannakaResult t;
  t.source = f;
  t.end = compute_end(shape_of(f));
  const EndData& e = t.end;
  t.mu = end_multiplication(e);
  t.eta = end_unit(e);
  const std::size_t n = f.count();
  DischargedFamily delta{e.dim, 2, {}};
  for (const auto& xy : object_tuples(n, 2)) {
    const std::size_t x = xy[0], y = xy[1], z = f.tensor[x][y];
    delta.components.push_back(f.psi[x][y] * e.alpha[z] * kron(Mat::identity(e.dim), f.phi[x][y]));
  }
  t.delta = solve_or_throw(delta, e, "comultiplication");
  t.eps = f.psi0 * e.alpha[f.unit] * kron(Mat::identity(e.dim), f.phi0);
  if (antipode) t.antipode = build_antipode(e, f);
  return t;
}

}  // namespace

TannakaResult tannaka(const FunctorData& f, bool antipode) {
  Report v = validate_functor_data(f);
  if (!is_separable_frobenius(v)) throw NotVerified("functor data does not validate: " + first_failure(v));
  if (antipode && !f.duals) throw MissingDuals("the antipode needs duals in the source category");
  return assemble(f, antipode);
}

TannakaResult tannaka_unverified(const FunctorData& f, bool antipode) {
  check_shapes(f);
  return assemble(f, antipode);
}

Report bialgebra_verdict(const TannakaResult& t, bool strong) {
  WeakBialgebra b = t.wba();
  Report rep = check_weak_bialgebra(b);
  rep.add_equal("barbell-is-psi0-phi0", "ε η = ψ₀ φ₀", b.eps() * b.eta(), t.source.psi0 * t.source.phi0);
  DischargedFamily unit = discharge(b.eta(), t.end, 1);
  bool unit_ok = true;
  for (std::size_t x = 0; x < t.end.shape.count(); ++x)
    if (unit.components[x] != t.end.shape.idems[x]) unit_ok = false;
  rep.add("unit-discharged-form", "α(η ⊗ Fx) = Fx", unit_ok, unit_ok ? "" : "some component is not the identity");
  if (strong) rep.append(check_bialgebra_strong(b), "strong/");
  return rep;
}

Report hopf_verdict(const TannakaResult& t, bool strong) {
  WeakHopf h = t.weak_hopf();
  const WeakBialgebra& b = h.wba();
  Report rep = check_weak_hopf(h);
  CanonicalIdempotents e = canonical_idempotents(b);
  const Mat& s = h.antipode();
  Mat id = Mat::identity(b.dim());
  rep.add_equal("S-star-id-is-r", "S ⋆ id = r", convolution(s, id, b.coalg(), b.alg()), e.r);
  rep.add_equal("id-star-S-is-t", "id ⋆ S = t", convolution(id, s, b.coalg(), b.alg()), e.t);
  if (strong) {
    Mat unit = b.eta() * b.eps();
    rep.add_equal("strong/S-star-id", "S ⋆ id = η ε", convolution(s, id, b.coalg(), b.alg()), unit);
    rep.add_equal("strong/id-star-S", "id ⋆ S = η ε", convolution(id, s, b.coalg(), b.alg()), unit);
  }
  return rep;
}

Mat tan_on_morphism(const EndData& g, const EndData& f, const std::vector<std::size_t>& object_map) {
  if (object_map.size() != f.shape.count()) throw TriangleMismatch("object map has the wrong length");
  DischargedFamily fam{g.dim, 1, {}};
  for (std::size_t a = 0; a < object_map.size(); ++a) {
    const std::size_t b = object_map[a];
    if (b >= g.shape.count()) throw TriangleMismatch("object map sends an object out of range");
    if (g.shape.dims[b] != f.shape.dims[a] || g.shape.idems[b] != f.shape.idems[a])
      throw TriangleMismatch("object " + f.shape.names[a] + " and its image " + g.shape.names[b] + " differ");
    fam.components.push_back(g.alpha[b]);
  }
  try {
    return solve_discharged(fam, f);
  } catch (const NotNatural& err) {
    throw TriangleMismatch(std::string("the triangle does not commute on arrows: ") + err.what());
  }
}

Mat square_comparison(const EndData& e, const EndData& square) {
  const std::size_t n = e.shape.count();
  if (square.shape.count() != n * n) throw ShapeError("square shape has the wrong number of objects");
  DischargedFamily fam{e.dim * e.dim, 1, {}};
  for (const auto& xy : object_tuples(n, 2)) fam.components.push_back(alpha_power(e, xy));
  return solve_or_throw(fam, square, "comparison");
}

}  // namespace weakhopf
