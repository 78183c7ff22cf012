#include "weakhopf/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "weakhopf/axioms.hpp"

namespace weakhopf {

namespace {

Report run_axioms(const std::vector<AxiomEquation>& axioms, const GenEnv& env) {
  Report rep;
  for (const auto& ax : axioms) {
    EquationVerdict v = equation_holds(ax.lhs, ax.rhs, env);
    rep.add(ax.id, ax.anchor, v.holds, v.difference ? describe(*v.difference) : "");
  }
  return rep;
}

std::string first_failure(const Report& rep) {
  for (const auto& c : rep.checks())
    if (!c.pass) return c.id + " (" + c.locus + ")";
  return {};
}

void require_shape(const Mat& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeError(what + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

GenEnv algebra_env(const Mat& mu, const Mat& eta) {
  GenEnv env;
  env.bind_object("H", mu.rows());
  env.bind("mu", {"H", "H"}, {"H"}, mu);
  env.bind("eta", {}, {"H"}, eta);
  return env;
}

GenEnv coalgebra_env(const Mat& delta, const Mat& eps) {
  GenEnv env;
  env.bind_object("H", delta.cols());
  env.bind("delta", {"H"}, {"H", "H"}, delta);
  env.bind("eps", {"H"}, {}, eps);
  return env;
}

Mat evaluate_text(const std::string& src, const GenEnv& env) { return evaluate(*parse_term(src), env); }

}  // namespace

// ------------------------------------------------------------ (co)algebras

Report check_algebra(const Mat& mu, const Mat& eta) { return run_axioms(algebra_axioms(), algebra_env(mu, eta)); }

Report check_coalgebra(const Mat& delta, const Mat& eps) {
  return run_axioms(coalgebra_axioms(), coalgebra_env(delta, eps));
}

AlgebraData::AlgebraData(Mat mu, Mat eta, Unchecked) : dim_(mu.rows()), mu_(std::move(mu)), eta_(std::move(eta)) {
  require_shape(mu_, dim_, dim_ * dim_, "multiplication");
  require_shape(eta_, dim_, 1, "unit");
}

AlgebraData::AlgebraData(Mat mu, Mat eta) : AlgebraData(std::move(mu), std::move(eta), unchecked) {
  Report rep = check_algebra(mu_, eta_);
  if (!rep.all_pass()) throw StructureError("algebra axiom failed: " + first_failure(rep));
}

CoalgebraData::CoalgebraData(Mat delta, Mat eps, Unchecked)
    : dim_(delta.cols()), delta_(std::move(delta)), eps_(std::move(eps)) {
  require_shape(delta_, dim_ * dim_, dim_, "comultiplication");
  require_shape(eps_, 1, dim_, "counit");
}

CoalgebraData::CoalgebraData(Mat delta, Mat eps) : CoalgebraData(std::move(delta), std::move(eps), unchecked) {
  Report rep = check_coalgebra(delta_, eps_);
  if (!rep.all_pass()) throw StructureError("coalgebra axiom failed: " + first_failure(rep));
}

WeakBialgebra::WeakBialgebra(AlgebraData alg, CoalgebraData coalg) : alg_(std::move(alg)), coalg_(std::move(coalg)) {
  if (alg_.dim() != coalg_.dim()) throw ShapeError("algebra and coalgebra dimensions differ");
}

WeakBialgebra::WeakBialgebra(Mat mu, Mat eta, Mat delta, Mat eps)
    : WeakBialgebra(AlgebraData(std::move(mu), std::move(eta)), CoalgebraData(std::move(delta), std::move(eps))) {}

WeakBialgebra WeakBialgebra::make_unchecked(Mat mu, Mat eta, Mat delta, Mat eps) {
  return WeakBialgebra(AlgebraData(std::move(mu), std::move(eta), unchecked),
                       CoalgebraData(std::move(delta), std::move(eps), unchecked));
}

WeakHopf::WeakHopf(WeakBialgebra wba, Mat antipode) : wba_(std::move(wba)), antipode_(std::move(antipode)) {
  require_shape(antipode_, wba_.dim(), wba_.dim(), "antipode");
}

GenEnv structure_env(const WeakBialgebra& b, const Mat* antipode) {
  GenEnv env;
  env.bind_object("H", b.dim());
  env.bind("mu", {"H", "H"}, {"H"}, b.mu());
  env.bind("eta", {}, {"H"}, b.eta());
  env.bind("delta", {"H"}, {"H", "H"}, b.delta());
  env.bind("eps", {"H"}, {}, b.eps());
  if (antipode) env.bind("S", {"H"}, {"H"}, *antipode);
  return env;
}

GenEnv structure_env(const WeakHopf& h) { return structure_env(h.wba(), &h.antipode()); }

GenEnv structure_env(const FrobeniusAlgebra& c) {
  return structure_env(WeakBialgebra::make_unchecked(c.alg.mu(), c.alg.eta(), c.coalg.delta(), c.coalg.eps()));
}

// ------------------------------------------------------------ convolution

Mat convolution(const Mat& f, const Mat& g, const CoalgebraData& src, const AlgebraData& dst) {
  require_shape(f, dst.dim(), src.dim(), "convolution operand");
  require_shape(g, dst.dim(), src.dim(), "convolution operand");
  return dst.mu() * (kron(f, g) * src.delta());
}

Mat tensor_power_product(const Mat& mu, std::size_t k, const Mat& x, const Mat& y) {
  const std::size_t d = mu.rows();
  std::size_t dk = 1;
  for (std::size_t i = 0; i < k; ++i) dk *= d;
  require_shape(x, dk, 1, "tensor-power element");
  require_shape(y, dk, 1, "tensor-power element");
  // interleave factors: (a1..ak, b1..bk) -> (a1, b1, ..., ak, bk)
  std::vector<std::size_t> dims(2 * k, d), order(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    order[2 * i] = i;
    order[2 * i + 1] = k + i;
  }
  Mat v = permute_row_factors(kron(x, y), dims, order);
  std::size_t left = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t right = 1;
    for (std::size_t j = i + 1; j < k; ++j) right *= d * d;
    v = apply_on_factor(mu, left, right, v);
    left *= d;
  }
  return v;
}

// ------------------------------------------------------------ verdict passes

Report check_frobenius(const AlgebraData& a, const CoalgebraData& c) {
  if (a.dim() != c.dim()) throw ShapeError("check_frobenius: dimensions differ");
  FrobeniusAlgebra f{a, c};
  return run_axioms(frobenius_axioms(), structure_env(f));
}

Scalar barbell(const WeakBialgebra& b) { return (b.eps() * b.eta())(0, 0); }

Report check_bialgebra_strong(const WeakBialgebra& b) { return run_axioms(strong_bialgebra_axioms(), structure_env(b)); }

Report check_weak_bialgebra(const WeakBialgebra& b) {
  Report rep = check_algebra(b.mu(), b.eta());
  rep.append(check_coalgebra(b.delta(), b.eps()));
  const bool well_formed = rep.all_pass();
  GenEnv env = structure_env(b);
  rep.append(run_axioms(weak_bialgebra_axioms(), env));

  // Convolution forms of the weak unit axioms in H⊗H⊗H, and of the weak counit
  // axioms obtained as the same computation on the dual.
  auto unit_forms = [](const WeakBialgebra& w) {
    Mat delta_eta = w.delta() * w.eta();
    Mat left = kron(delta_eta, w.eta());
    Mat right = kron(w.eta(), delta_eta);
    Mat delta3_eta = kron(w.delta(), Mat::identity(w.dim())) * delta_eta;
    return std::array<Mat, 3>{delta3_eta, tensor_power_product(w.mu(), 3, left, right),
                              tensor_power_product(w.mu(), 3, right, left)};
  };
  auto u = unit_forms(b);
  rep.add_equal("unit-convolution-1", "(Δη ⊗ η) ⋆ (η ⊗ Δη) = Δ₃η", u[1], u[0]);
  rep.add_equal("unit-convolution-2", "(η ⊗ Δη) ⋆ (Δη ⊗ η) = Δ₃η", u[2], u[0]);
  WeakBialgebra d = dual(b);
  auto c = unit_forms(d);
  rep.add_equal("counit-convolution-1", "(εμ ⊗ ε) ⋆ (ε ⊗ εμ) = εμ₃", c[1].transpose(), c[0].transpose());
  rep.add_equal("counit-convolution-2", "(ε ⊗ εμ) ⋆ (εμ ⊗ ε) = εμ₃", c[2].transpose(), c[0].transpose());

  // Internal consistency: on any algebra and coalgebra, the figure transcription
  // and the convolution form compute the same maps whether or not the weak axioms hold.
  if (!well_formed) return rep;
  const auto& ax = weak_bialgebra_axioms();
  Mat fig_u1 = evaluate_text(ax[0].rhs, env), fig_u2 = evaluate_text(ax[1].rhs, env);
  Mat fig_c1 = evaluate_text(ax[2].rhs, env), fig_c2 = evaluate_text(ax[3].rhs, env);
  Report consistency;
  consistency.add_equal("unit-forms-agree-1", "figure and convolution weak unit forms coincide", fig_u1, u[1]);
  consistency.add_equal("unit-forms-agree-2", "figure and convolution weak unit forms coincide", fig_u2, u[2]);
  consistency.add_equal("counit-forms-agree-1", "figure and convolution weak counit forms coincide", fig_c1,
                        c[1].transpose());
  consistency.add_equal("counit-forms-agree-2", "figure and convolution weak counit forms coincide", fig_c2,
                        c[2].transpose());
  rep.append(consistency, "internal-consistency/");
  return rep;
}

CanonicalIdempotents canonical_idempotents(const WeakBialgebra& b) {
  GenEnv env = structure_env(b);
  CanonicalIdempotents out{evaluate_text(idempotent_s(), env), evaluate_text(idempotent_t(), env),
                           evaluate_text(idempotent_z(), env), evaluate_text(idempotent_r(), env)};
  for (auto [name, m] : {std::pair{"s", &out.s}, {"t", &out.t}, {"z", &out.z}, {"r", &out.r}})
    if (*m * *m != *m) throw IdempotencyFailure(std::string("canonical map ") + name + " is not idempotent");
  return out;
}

Report check_idempotent_isos(const WeakBialgebra& b) {
  CanonicalIdempotents e = canonical_idempotents(b);
  struct Link {
    const char* from;
    const char* to;
    const Mat* a;
    const Mat* b;
  };
  const Link chain[] = {{"s", "t", &e.s, &e.t}, {"t", "z", &e.t, &e.z}, {"z", "r", &e.z, &e.r}, {"r", "s", &e.r, &e.s}};
  Report rep;
  for (const auto& l : chain) {
    Mat forward = *l.b * *l.a;  // (H,a) -> (H,b)
    Mat inverse = *l.a * *l.b;  // (H,b) -> (H,a)
    std::string tag = std::string(l.from) + "-" + l.to;
    rep.add_equal("iso-" + tag + "/inverse-after-forward",
                  std::string("(H,") + l.from + ") → (H," + l.to + ") → (H," + l.from + ") is " + l.from,
                  inverse * forward, *l.a);
    rep.add_equal("iso-" + tag + "/forward-after-inverse",
                  std::string("(H,") + l.to + ") → (H," + l.from + ") → (H," + l.to + ") is " + l.to,
                  forward * inverse, *l.b);
  }
  return rep;
}

Report is_grouplike(const Mat& c, const WeakBialgebra& b) {
  require_shape(c, b.dim(), 1, "element");
  Report rep;
  rep.add_equal("grouplike", "Δc = c ⊗ c", b.delta() * c, kron(c, c));
  return rep;
}

Report is_almost_grouplike(const Mat& c, const WeakBialgebra& b) {
  require_shape(c, b.dim(), 1, "element");
  Mat dc = b.delta() * c, cc = kron(c, c), d1 = b.delta() * b.eta();
  Report rep;
  rep.add_equal("almost-grouplike-left", "Δc = Δ(1)(c ⊗ c)", dc, tensor_power_product(b.mu(), 2, d1, cc));
  rep.add_equal("almost-grouplike-right", "Δc = (c ⊗ c)Δ(1)", dc, tensor_power_product(b.mu(), 2, cc, d1));
  return rep;
}

Report check_weak_hopf(const WeakHopf& h) { return run_axioms(weak_antipode_axioms(), structure_env(h)); }

bool has_inverse(const Mat& antipode) { return antipode.square() && rank(antipode) == antipode.rows(); }

Report check_weak_morphism(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j) {
  require_shape(f, j.dim(), h.dim(), "morphism");
  Report rep;
  CanonicalIdempotents eh = canonical_idempotents(h), ej = canonical_idempotents(j);
  rep.add_equal("commutes-s", "f s = s f", f * eh.s, ej.s * f);
  rep.add_equal("commutes-t", "f t = t f", f * eh.t, ej.t * f);
  rep.add_equal("commutes-z", "f z = z f", f * eh.z, ej.z * f);
  rep.add_equal("commutes-r", "f r = r f", f * eh.r, ej.r * f);
  rep.add_equal("multiplication", "f μ = μ (f ⊗ f)", f * h.mu(), j.mu() * kron(f, f));
  rep.add_equal("unit", "f η = η", f * h.eta(), j.eta());
  Mat image = kron(f, f) * h.delta();
  Mat unit = j.delta() * j.eta();
  Mat lhs = j.delta() * f;
  std::vector<Mat> right_cols, left_cols;
  for (std::size_t c = 0; c < h.dim(); ++c) {
    Mat col = image.col_block(c, 1);
    right_cols.push_back(tensor_power_product(j.mu(), 2, col, unit));
    left_cols.push_back(tensor_power_product(j.mu(), 2, unit, col));
  }
  rep.add_equal("comultiplication-1", "Δ f(x) = (f ⊗ f)Δ(x) · Δ(1)", lhs, hstack(right_cols));
  rep.add_equal("comultiplication-2", "Δ f(x) = Δ(1) · (f ⊗ f)Δ(x)", lhs, hstack(left_cols));
  return rep;
}

Report check_strict_morphism(const Mat& f, const WeakBialgebra& h, const WeakBialgebra& j, const Mat* s_h,
                             const Mat* s_j) {
  require_shape(f, j.dim(), h.dim(), "morphism");
  Report rep;
  rep.add_equal("multiplication", "f μ = μ (f ⊗ f)", f * h.mu(), j.mu() * kron(f, f));
  rep.add_equal("unit", "f η = η", f * h.eta(), j.eta());
  rep.add_equal("comultiplication", "Δ f = (f ⊗ f) Δ", j.delta() * f, kron(f, f) * h.delta());
  rep.add_equal("counit", "ε f = ε", j.eps() * f, h.eps());
  if (s_h && s_j) rep.add_equal("antipode", "S f = f S", *s_j * f, f * *s_h);
  return rep;
}

WeakBialgebra dual(const WeakBialgebra& b) {
  return WeakBialgebra::make_unchecked(b.delta().transpose(), b.eps().transpose(), b.mu().transpose(),
                                       b.eta().transpose());
}

WeakHopf dual(const WeakHopf& h) { return WeakHopf(dual(h.wba()), h.antipode().transpose()); }

WeakBialgebra tensor_product(const WeakBialgebra& a, const WeakBialgebra& b) {
  const std::size_t m = a.dim(), n = b.dim();
  Mat middle = kron(kron(Mat::identity(m), braid(n, m)), Mat::identity(n));   // (A B)(A B) -> (A A)(B B)
  Mat middle2 = kron(kron(Mat::identity(m), braid(m, n)), Mat::identity(n));  // (A A)(B B) -> (A B)(A B)
  return WeakBialgebra::make_unchecked(kron(a.mu(), b.mu()) * middle, kron(a.eta(), b.eta()),
                                       middle2 * kron(a.delta(), b.delta()), kron(a.eps(), b.eps()));
}

WeakHopf tensor_product(const WeakHopf& a, const WeakHopf& b) {
  return WeakHopf(tensor_product(a.wba(), b.wba()), kron(a.antipode(), b.antipode()));
}

// ------------------------------------------------------------ groups and groupoids

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw StructureError("a group has at least one element");
  if (table_.size() != n) throw ShapeError("group table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw ShapeError("group table has a row of wrong length");
    for (auto x : row)
      if (x >= n) throw StructureError("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw StructureError("group table is not associative");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw StructureError("group table has no identity");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  for (auto x : inverse_)
    if (x == n) throw StructureError("group element without inverse");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(q[i]);
    names.push_back(s + "]");
  }
  const std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // a∘b
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(names), std::move(table));
}

Groupoid::Groupoid(std::vector<std::string> objects, std::vector<GroupoidMorphism> morphisms,
                   std::vector<std::vector<std::optional<std::size_t>>> compose, std::vector<std::size_t> inverse)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      compose_(std::move(compose)),
      inverse_(std::move(inverse)) {
  const std::size_t n = morphisms_.size();
  if (compose_.size() != n || inverse_.size() != n) throw ShapeError("groupoid tables have wrong size");
  for (const auto& m : morphisms_)
    if (m.src >= objects_.size() || m.tgt >= objects_.size()) throw StructureError("morphism endpoint out of range");
  for (std::size_t f = 0; f < n; ++f) {
    if (compose_[f].size() != n) throw ShapeError("groupoid composition table has a row of wrong length");
    for (std::size_t g = 0; g < n; ++g) {
      bool composable = morphisms_[f].src == morphisms_[g].tgt;
      if (composable != compose_[f][g].has_value())
        throw StructureError("composition of " + morphisms_[f].name + " after " + morphisms_[g].name +
                             (composable ? " is missing" : " is defined for non-composable morphisms"));
      if (!composable) continue;
      std::size_t h = *compose_[f][g];
      if (h >= n || morphisms_[h].src != morphisms_[g].src || morphisms_[h].tgt != morphisms_[f].tgt)
        throw StructureError("composite " + morphisms_[f].name + "∘" + morphisms_[g].name + " has wrong endpoints");
    }
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        if (!compose_[f][g] || !compose_[g][h]) continue;
        if (compose_[*compose_[f][g]][h] != compose_[f][*compose_[g][h]])
          throw StructureError("groupoid composition is not associative");
      }
  identities_.assign(objects_.size(), n);
  for (std::size_t f = 0; f < n; ++f) {
    const auto& m = morphisms_[f];
    if (m.src == m.tgt && compose_[f][f] == f) {
      if (identities_[m.src] != n) throw StructureError("object with two identities");
      identities_[m.src] = f;
    }
  }
  for (std::size_t x = 0; x < objects_.size(); ++x)
    if (identities_[x] == n) throw StructureError("object " + objects_[x] + " has no identity");
  for (std::size_t f = 0; f < n; ++f) {
    const auto& m = morphisms_[f];
    if (compose_[identities_[m.tgt]][f] != f || compose_[f][identities_[m.src]] != f)
      throw StructureError("identity law fails for " + m.name);
    std::size_t g = inverse_[f];
    if (g >= n || compose_[f][g] != identities_[m.tgt] || compose_[g][f] != identities_[m.src])
      throw StructureError("inverse law fails for " + m.name);
  }
}

Groupoid Groupoid::pair(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  std::vector<GroupoidMorphism> morphisms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      morphisms.push_back({"e_" + std::to_string(i) + std::to_string(j), j, i});
  const std::size_t m = n * n;
  std::vector<std::vector<std::optional<std::size_t>>> compose(m, std::vector<std::optional<std::size_t>>(m));
  std::vector<std::size_t> inverse(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inverse[i * n + j] = j * n + i;
      for (std::size_t l = 0; l < n; ++l) compose[i * n + j][j * n + l] = i * n + l;
    }
  return Groupoid(std::move(objects), std::move(morphisms), std::move(compose), std::move(inverse));
}

Groupoid Groupoid::discrete(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<GroupoidMorphism> morphisms;
  std::vector<std::vector<std::optional<std::size_t>>> compose(n, std::vector<std::optional<std::size_t>>(n));
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back(std::to_string(i));
    morphisms.push_back({"id_" + std::to_string(i), i, i});
    compose[i][i] = i;
    inverse[i] = i;
  }
  return Groupoid(std::move(objects), std::move(morphisms), std::move(compose), std::move(inverse));
}

Groupoid Groupoid::of_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<GroupoidMorphism> morphisms;
  std::vector<std::vector<std::optional<std::size_t>>> compose(n, std::vector<std::optional<std::size_t>>(n));
  std::vector<std::size_t> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    morphisms.push_back({g.names()[a], 0, 0});
    inverse[a] = g.inverse(a);
    for (std::size_t b = 0; b < n; ++b) compose[a][b] = g.mul(a, b);
  }
  return Groupoid({"*"}, std::move(morphisms), std::move(compose), std::move(inverse));
}

Groupoid Groupoid::disjoint_union(const Groupoid& a, const Groupoid& b) {
  const std::size_t oa = a.objects().size(), ma = a.morphisms().size(), mb = b.morphisms().size();
  std::vector<std::string> objects;
  for (const auto& o : a.objects()) objects.push_back("L" + o);
  for (const auto& o : b.objects()) objects.push_back("R" + o);
  std::vector<GroupoidMorphism> morphisms;
  for (const auto& m : a.morphisms()) morphisms.push_back({"L" + m.name, m.src, m.tgt});
  for (const auto& m : b.morphisms()) morphisms.push_back({"R" + m.name, m.src + oa, m.tgt + oa});
  const std::size_t n = ma + mb;
  std::vector<std::vector<std::optional<std::size_t>>> compose(n, std::vector<std::optional<std::size_t>>(n));
  std::vector<std::size_t> inverse(n);
  for (std::size_t f = 0; f < ma; ++f) {
    inverse[f] = a.inverse(f);
    for (std::size_t g = 0; g < ma; ++g) compose[f][g] = a.compose(f, g);
  }
  for (std::size_t f = 0; f < mb; ++f) {
    inverse[ma + f] = ma + b.inverse(f);
    for (std::size_t g = 0; g < mb; ++g)
      if (auto h = b.compose(f, g)) compose[ma + f][ma + g] = ma + *h;
  }
  return Groupoid(std::move(objects), std::move(morphisms), std::move(compose), std::move(inverse));
}

WeakHopf groupoid_algebra(const Groupoid& g) {
  const std::size_t n = g.morphisms().size();
  Mat mu(n, n * n), eta(n, 1), delta(n * n, n), eps(1, n), s(n, n);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h)
      if (auto c = g.compose(f, h)) mu(*c, f * n + h) = 1;
    delta(f * n + f, f) = 1;
    eps(0, f) = 1;
    s(g.inverse(f), f) = 1;
  }
  for (std::size_t x = 0; x < g.objects().size(); ++x) eta(g.identity_of(x), 0) = 1;
  return WeakHopf(WeakBialgebra(std::move(mu), std::move(eta), std::move(delta), std::move(eps)), std::move(s));
}

WeakHopf group_algebra(const FiniteGroup& g) { return groupoid_algebra(Groupoid::of_group(g)); }

WeakHopf function_hopf(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Mat mu(n, n * n), eta(n, 1), delta(n * n, n), eps(1, n), s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    mu(a, a * n + a) = 1;
    eta(a, 0) = 1;
    for (std::size_t h = 0; h < n; ++h) delta(h * n + g.mul(g.inverse(h), a), a) = 1;
    s(g.inverse(a), a) = 1;
  }
  eps(0, g.identity()) = 1;
  return WeakHopf(WeakBialgebra(std::move(mu), std::move(eta), std::move(delta), std::move(eps)), std::move(s));
}

FrobeniusAlgebra diagonal_frobenius(std::size_t n) {
  Mat mu(n, n * n), eta(n, 1), delta(n * n, n), eps(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    mu(i, i * n + i) = 1;
    eta(i, 0) = 1;
    delta(i * n + i, i) = 1;
    eps(0, i) = 1;
  }
  return {AlgebraData(std::move(mu), std::move(eta)), CoalgebraData(std::move(delta), std::move(eps))};
}

FrobeniusAlgebra matrix_frobenius(std::size_t n) {
  const std::size_t d = n * n;
  auto e = [n](std::size_t i, std::size_t j) { return i * n + j; };
  Mat mu(d, d * d), eta(d, 1), delta(d * d, d), eps(1, d);
  const Scalar inv(1, static_cast<unsigned long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    eta(e(i, i), 0) = 1;
    eps(0, e(i, i)) = static_cast<long>(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        mu(e(i, k), e(i, j) * d + e(j, k)) = 1;
        delta(e(i, k) * d + e(k, j), e(i, j)) = inv;
      }
  }
  return {AlgebraData(std::move(mu), std::move(eta)), CoalgebraData(std::move(delta), std::move(eps))};
}

FrobeniusAlgebra frobenius_from_splitting(const WeakBialgebra& b, const Mat& retraction, const Mat& section) {
  const std::size_t n = b.dim();
  if (section.rows() != n || retraction.cols() != n || retraction.rows() != section.cols())
    throw NotASplittingOfT("retraction/section shapes do not split an endomorphism of H");
  if (!(retraction * section).is_identity()) throw NotASplittingOfT("retraction after section is not the identity");
  if (section * retraction != canonical_idempotents(b).t)
    throw NotASplittingOfT("section after retraction is not the idempotent t");
  return {AlgebraData(retraction * b.mu() * kron(section, section), retraction * b.eta()),
          CoalgebraData(kron(retraction, retraction) * b.delta() * section, b.eps() * section)};
}

}  // namespace weakhopf
