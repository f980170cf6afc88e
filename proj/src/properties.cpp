#include "liesc/properties.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "liesc/errors.hpp"
#include "liesc/triang.hpp"

namespace liesc {

namespace {

Subspace line(const LieAlgebra& l, const Vec& v) {
  return Subspace::span(l.field(), l.dim(), {v});
}

// eigenvalue candidates for one adjoint matrix: every residue over GF(p),
// the rational roots of the characteristic polynomial over Q
std::vector<Scalar> eigen_candidates(const Matrix& m) {
  FieldSpec f = m.field();
  if (f.is_gf()) {
    std::vector<Scalar> out;
    for (long r = 0; r < f.p; ++r) out.push_back(Scalar::of(f, r));
    return out;
  }
  return rational_roots(char_poly(m));
}

Subspace eigenspace(const Matrix& m, const Scalar& lambda) {
  Matrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    shifted.at(i, i) = shifted.at(i, i) - lambda;
  return Subspace::row_space(shifted.kernel());
}

// joint eigenspaces of the adjoint action on l itself
std::vector<Subspace> joint_eigenspaces(const LieAlgebra& l) {
  std::vector<Subspace> cur{l.full_space()};
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Matrix m = l.adjoint(unit_vec(l.field(), l.dim(), i));
    std::vector<Subspace> next;
    for (const Scalar& lambda : eigen_candidates(m)) {
      Subspace k = eigenspace(m, lambda);
      for (const Subspace& w : cur) {
        Subspace e = w.intersect(k);
        if (!e.is_zero()) next.push_back(e);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Subspace preimage_under_quotient(const LieAlgebra& l, const QuotientResult& q,
                                 const Subspace& downstairs) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < q.ideal.dim(); ++i) gens.push_back(q.ideal.basis_row(i));
  const std::vector<std::size_t> comp = q.ideal.complement_coords();
  for (std::size_t r = 0; r < downstairs.dim(); ++r) {
    Vec down = downstairs.basis_row(r);
    Vec up = vec_zero(l.field(), l.dim());
    for (std::size_t k = 0; k < comp.size(); ++k) up[comp[k]] = down[k];
    gens.push_back(up);
  }
  return Subspace::span(l.field(), l.dim(), gens);
}

}  // namespace

bool is_almost_abelian(const LieAlgebra& l) {
  if (is_abelian(l)) return false;
  Subspace der = l.derived_subalgebra(l.full_space());
  if (der.dim() + 1 != l.dim()) return false;
  if (!is_abelian_on(l, der)) return false;
  // any x outside L^2 will do: the action on L^2 only moves by scalars
  std::size_t xi = l.dim();
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (!der.contains(unit_vec(l.field(), l.dim(), i))) {
      xi = i;
      break;
    }
  Vec x = unit_vec(l.field(), l.dim(), xi);
  Scalar lambda = Scalar::zero(l.field());
  for (std::size_t k = 0; k < der.dim(); ++k) {
    Vec b = l.bracket(der.basis_row(k), x);
    if (!der.contains(b)) return false;
    Vec coords = der.coordinates(b);
    for (std::size_t j = 0; j < der.dim(); ++j) {
      if (j == k) continue;
      if (!coords[j].is_zero()) return false;
    }
    if (k == 0)
      lambda = coords[0];
    else if (!(coords[k] == lambda))
      return false;
  }
  return !lambda.is_zero();
}

QuasiAbelianResult quasi_abelian_check(const LieAlgebra& l) {
  if (is_abelian(l) || is_almost_abelian(l)) return {true, std::nullopt};

  FieldSpec f = l.field();
  std::size_t n = l.dim();
  std::vector<Vec> cand;
  for (std::size_t i = 0; i < n; ++i) cand.push_back(unit_vec(f, n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec s = vec_add(unit_vec(f, n, i), unit_vec(f, n, j));
      cand.push_back(s);
      Vec d = vec_sub(unit_vec(f, n, i), unit_vec(f, n, j));
      if (d != s) cand.push_back(d);
    }
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = a + 1; b < cand.size(); ++b) {
      Vec w = l.bracket(cand[a], cand[b]);
      if (!Subspace::span(f, n, {cand[a], cand[b]}).contains(w))
        return {false, std::make_pair(cand[a], cand[b])};
    }
  // two-term sums always expose a non-quasi-abelian bracket
  throw std::logic_error("quasi-abelian witness search exhausted");
}

std::vector<Subspace> one_dim_ideals(const LieAlgebra& l) {
  std::vector<Subspace> out;
  for (const Subspace& e : joint_eigenspaces(l)) {
    if (l.field().is_gf()) {
      ScanCaps caps;
      for (const Vec& v : projective_points_of(e, caps)) out.push_back(line(l, v));
    } else {
      for (std::size_t r = 0; r < e.dim(); ++r) out.push_back(line(l, e.basis_row(r)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<Subspace>> supersolvable_flag(const LieAlgebra& l) {
  if (l.dim() == 0) return std::vector<Subspace>{l.zero_space()};
  for (const Subspace& candidate : one_dim_ideals(l)) {
    QuotientResult q = l.quotient(candidate);
    std::optional<std::vector<Subspace>> sub = supersolvable_flag(q.algebra);
    if (!sub) continue;
    std::vector<Subspace> chain{l.zero_space()};
    for (const Subspace& term : *sub) {
      Subspace up = preimage_under_quotient(l, q, term);
      if (!l.is_ideal(up))
        throw std::logic_error("flag pullback is not an ideal");
      if (up.dim() != chain.size())
        throw std::logic_error("flag pullback has the wrong dimension");
      chain.push_back(up);
    }
    return chain;
  }
  return std::nullopt;
}

SimpleResult simple_check(const LieAlgebra& l, const ScanCaps& caps) {
  Subspace der = l.derived_subalgebra(l.full_space());
  if (!der.is_full())
    return {false, "derived subalgebra is proper: " + der.str()};

  if (l.field().is_gf()) {
    for (const Vec& v : projective_points(l.field(), l.dim(), caps)) {
      Subspace closure = l.ideal_closure({v});
      if (!closure.is_full())
        return {false, "proper ideal " + closure.str()};
    }
    return {true, "every nonzero ideal closure is full"};
  }

  std::vector<Subspace> lines = one_dim_ideals(l);
  if (!lines.empty()) return {false, "one-dimensional ideal " + lines.front().str()};
  if (l.dim() <= 3)
    return {true, "perfect, no ideal of dimension 1, codimension 1 impossible"};

  // Killing form: a perfect algebra over Q with degenerate form has its
  // radical as a proper nonzero ideal; nondegenerate means semisimple
  std::size_t n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i)
    ads.push_back(l.adjoint(unit_vec(l.field(), n, i)));
  Matrix killing(l.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) killing.at(i, j) = (ads[i] * ads[j]).trace();
  Subspace rad = Subspace::row_space(killing.kernel());
  if (!rad.is_zero()) {
    if (!l.is_ideal(rad))
      throw std::logic_error("Killing radical is not an ideal");
    return {false, "Killing radical " + rad.str()};
  }

  // semisimple: simple <=> the centroid is a field; factor a primitive
  // element's minimal polynomial
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec w = l.basis_bracket(i, j);
      // unknowns t_{ab} = T.at(a, b), row-major; equation rows indexed by a
      for (std::size_t a = 0; a < n; ++a) {
        Vec row = vec_zero(l.field(), n * n);
        // [T e_i, e_j] component a: sum_b t_{bi} [e_b, e_j]_a
        for (std::size_t b = 0; b < n; ++b)
          row[b * n + i] = row[b * n + i] + l.basis_bracket(b, j)[a];
        // minus T [e_i, e_j] component a: sum_b w_b t_{ab}
        for (std::size_t b = 0; b < n; ++b)
          row[a * n + b] = row[a * n + b] - w[b];
        rows.push_back(row);
      }
    }
  Matrix centroid_basis =
      Matrix::from_rows(l.field(), n * n, rows).kernel();
  std::size_t cdim = centroid_basis.rows();
  if (cdim == 0) throw std::logic_error("centroid lost the identity map");
  if (cdim == 1) return {true, "semisimple with centroid of dimension 1"};
  if (cdim > 3)
    throw Unsupported("simplicity over Q needs a centroid of dimension at most 3");

  // the centroid of a semisimple algebra is a product of fields, one per
  // minimal ideal, so: field <=> simple. Decide by factoring the minimal
  // polynomial of a primitive element (one whose powers span the centroid).
  auto flat_at = [&](const Matrix& m) {
    Vec v;
    v.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) v.push_back(m.at(a, b));
    return v;
  };
  std::vector<Vec> combos;
  for (std::size_t r = 0; r < cdim; ++r) combos.push_back(centroid_basis.row(r));
  for (long c1 = 1; c1 <= 8; ++c1)
    for (long c2 = 1; c2 <= 8; ++c2) {
      Vec v = vec_add(centroid_basis.row(0),
                      vec_scale(Scalar::of(l.field(), c1), Vec(centroid_basis.row(1))));
      if (cdim == 3)
        v = vec_add(v, vec_scale(Scalar::of(l.field(), c2),
                                 Vec(centroid_basis.row(2))));
      combos.push_back(v);
      if (cdim == 2) break;
    }
  for (const Vec& flat : combos) {
    Matrix t(l.field(), n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t.at(a, b) = flat[a * n + b];
    std::vector<Vec> powers;
    Matrix p = Matrix::identity(l.field(), n);
    while (!Subspace::span(l.field(), n * n, powers).contains(flat_at(p))) {
      powers.push_back(flat_at(p));
      p = p * t;
    }
    if (powers.size() != cdim) continue;  // not primitive, try the next one
    // unique relation: p = sum of lower powers; min poly is monic of degree
    // cdim with those coefficients negated
    std::vector<Vec> aug = powers;
    aug.push_back(flat_at(p));
    Matrix null = Matrix::from_rows(l.field(), n * n, aug).transpose().kernel();
    for (std::size_t r = 0; r < null.rows(); ++r) {
      Vec k = null.row(r);
      if (k[cdim].is_zero()) continue;
      std::vector<Scalar> mp;
      for (std::size_t q = 0; q < cdim; ++q) mp.push_back(k[q] / k[cdim]);
      mp.push_back(Scalar::one(l.field()));
      if (!rational_roots(mp).empty())
        return {false, "centroid splits: a primitive element's minimal "
                       "polynomial has a rational root"};
      return {true, "semisimple, centroid is a field of degree " +
                        std::to_string(cdim)};
    }
    throw std::logic_error("power dependence without a top coefficient");
  }
  throw std::logic_error("no primitive centroid element found");
}

bool is_simple(const LieAlgebra& l, const ScanCaps& caps) {
  return simple_check(l, caps).simple;
}

bool is_simple_or_1dim(const LieAlgebra& l, const ScanCaps& caps) {
  return l.dim() == 1 || is_simple(l, caps);
}

MinimalIdeals minimal_ideals(const LieAlgebra& l, const ScanCaps& caps) {
  MinimalIdeals out;
  out.complete = true;
  if (l.dim() <= 1) return out;

  if (l.field().is_gf()) {
    std::set<Subspace> closures;
    for (const Vec& v : projective_points(l.field(), l.dim(), caps)) {
      Subspace c = l.ideal_closure({v});
      if (!c.is_full()) closures.insert(c);
    }
    for (const Subspace& c : closures) {
      bool minimal = true;
      for (const Subspace& o : closures)
        if (o.dim() < c.dim() && c.contains(o)) {
          minimal = false;
          break;
        }
      if (minimal) out.ideals.push_back(c);
    }
    return out;
  }

  if (is_solvable(l)) {
    Subspace nilrad = largest_nilpotent_ideal(l, caps);
    Subspace zn = l.centralizer(nilrad).intersect(nilrad);
    if (!l.is_ideal(zn))
      throw std::logic_error("center of the nilradical is not an ideal");
    // minimal ideals are exactly the lines inside the joint weight spaces
    // of the action on Z(N); a non-split action cannot be certified
    std::size_t wd = zn.dim();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < l.dim(); ++i) {
      Matrix m(l.field(), wd, wd);
      for (std::size_t k = 0; k < wd; ++k) {
        Vec img = l.bracket(zn.basis_row(k), unit_vec(l.field(), l.dim(), i));
        Vec coords = zn.coordinates(img);
        for (std::size_t r = 0; r < wd; ++r) m.at(r, k) = coords[r];
      }
      action.push_back(m);
    }
    std::vector<Subspace> spaces{Subspace::full(l.field(), wd)};
    for (const Matrix& m : action) {
      std::vector<Subspace> next;
      for (const Scalar& lambda : eigen_candidates(m)) {
        Subspace k = eigenspace(m, lambda);
        for (const Subspace& w : spaces) {
          Subspace e = w.intersect(k);
          if (!e.is_zero()) next.push_back(e);
        }
      }
      spaces = std::move(next);
    }
    std::size_t split = 0;
    for (const Subspace& e : spaces) split += e.dim();
    if (split != wd)
      throw CapExceeded("rational_split",
                        std::to_string(wd - split) + " unsplit dimensions");
    for (const Subspace& e : spaces) {
      std::vector<Vec> lifted;
      for (std::size_t r = 0; r < e.dim(); ++r) {
        Vec up = vec_zero(l.field(), l.dim());
        Vec coords = e.basis_row(r);
        for (std::size_t k = 0; k < wd; ++k)
          up = vec_add(up, vec_scale(coords[k], zn.basis_row(k)));
        lifted.push_back(up);
      }
      Subspace lift = Subspace::span(l.field(), l.dim(), lifted);
      if (lift.dim() == 1 && !lift.is_full())
        out.ideals.push_back(lift);
      else if (lift.dim() >= 2)
        out.line_families.push_back(lift);
    }
    std::sort(out.ideals.begin(), out.ideals.end());
    std::sort(out.line_families.begin(), out.line_families.end());
    return out;
  }

  if (is_simple(l, caps)) return out;
  throw CapExceeded("q_minimal_ideals",
                    "no complete search for non-solvable non-simple over Q");
}

Subspace largest_nilpotent_ideal(const LieAlgebra& l, const ScanCaps& caps) {
  if (l.field().is_gf()) {
    Subspace acc = l.zero_space();
    for (const Subspace& ideal : enumerate_ideals(l, caps))
      if (is_nilpotent_on(l, ideal)) acc = acc.sum(ideal);
    if (!is_nilpotent_on(l, acc))
      throw std::logic_error("sum of nilpotent ideals is not nilpotent");
    return acc;
  }
  if (is_nilpotent(l)) return l.full_space();
  if (is_solvable(l)) {
    // over Q the ad-nilpotent elements of a solvable algebra form exactly
    // the nilradical; computed through the trace radical
    Subspace n = ad_nilpotent_subspace(l, l.full_space());
    if (!n.contains(l.derived_subalgebra(l.full_space())))
      throw std::logic_error("nilradical misses the derived subalgebra");
    if (!l.is_ideal(n)) throw std::logic_error("nilradical is not an ideal");
    if (!is_nilpotent_on(l, n))
      throw std::logic_error("nilradical is not nilpotent");
    return n;
  }
  if (is_simple(l, caps)) return l.zero_space();
  throw CapExceeded("q_nilradical",
                    "no complete method for non-solvable non-simple over Q");
}

Subspace ideal_core(const LieAlgebra& l, const Subspace& v) {
  Subspace cur = v;
  for (;;) {
    if (cur.is_zero()) return cur;
    Matrix basis_t = cur.basis().transpose();
    std::vector<Matrix> blocks;
    for (std::size_t j = 0; j < l.dim(); ++j) {
      Matrix m = cur.reduction_matrix() *
                 (l.adjoint(unit_vec(l.field(), l.dim(), j)) * basis_t);
      blocks.push_back(m);
    }
    Matrix cond = Matrix::vstack(blocks);
    Matrix coords = cond.kernel();
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < coords.rows(); ++r) {
      Vec x = vec_zero(l.field(), l.dim());
      for (std::size_t k = 0; k < cur.dim(); ++k)
        x = vec_add(x, vec_scale(coords.at(r, k), cur.basis_row(k)));
      gens.push_back(x);
    }
    Subspace next = Subspace::span(l.field(), l.dim(), gens);
    if (next.dim() == cur.dim()) {
      if (!l.is_ideal(next)) throw std::logic_error("ideal core is not an ideal");
      return next;
    }
    cur = next;
  }
}

FrattiniResult frattini(const LieAlgebra& l, const ScanCaps& caps) {
  if (!l.field().is_gf())
    throw Unsupported("Frattini subalgebra needs maximal-subalgebra enumeration, finite fields only");
  Subspace f = l.full_space();
  for (const Subspace& m : maximal_subalgebras(l, caps)) f = f.intersect(m);
  Subspace phi = ideal_core(l, f);
  if (!f.contains(phi)) throw std::logic_error("phi(L) escaped F(L)");
  return FrattiniResult{f, phi, phi.is_zero()};
}

bool PropertyReport::value(const std::string& name) const {
  for (const auto& [k, v] : verdicts)
    if (k == name) return v;
  throw UnknownProperty("no verdict for " + name);
}

namespace {

std::string dims_of(const SeriesChain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    if (i) out += " > ";
    out += std::to_string(c.terms[i].dim());
  }
  return out;
}

}  // namespace

PropertyReport property_report(const LieAlgebra& l, const ScanCaps& caps) {
  PropertyReport rep;
  bool abelian = is_abelian(l);
  SeriesChain ds = derived_series(l, l.full_space());
  SeriesChain lcs = lower_central_series(l, l.full_space());
  bool solvable = ds.reached_zero;
  bool nilpotent = lcs.reached_zero;

  // Engel cross-check: the series verdict must match elementwise adjoint
  // nilpotency plus the chain descent
  bool engel = is_nil_on(l, l.full_space()).nil;
  for (std::size_t i = 0; engel && i < l.dim(); ++i)
    engel = l.adjoint(unit_vec(l.field(), l.dim(), i)).pow(l.dim()).is_zero();
  if (engel != nilpotent)
    throw std::logic_error("Engel cross-check disagrees with the series");

  Subspace der = l.derived_subalgebra(l.full_space());
  bool strongly = is_nilpotent_on(l, der);
  std::optional<std::vector<Subspace>> flag = supersolvable_flag(l);
  bool supers = flag.has_value();
  bool almost = is_almost_abelian(l);
  QuasiAbelianResult qa = quasi_abelian_check(l);
  SimpleResult simple = simple_check(l, caps);

  if ((supers && !strongly) || (strongly && !solvable) ||
      (abelian && !nilpotent) || (nilpotent && !solvable))
    throw std::logic_error("property implication chain violated");

  rep.verdicts = {{"abelian", abelian},
                  {"nilpotent", nilpotent},
                  {"solvable", solvable},
                  {"strongly_solvable", strongly},
                  {"supersolvable", supers},
                  {"almost_abelian", almost},
                  {"quasi_abelian", qa.verdict},
                  {"simple", simple.simple}};

  rep.certificates["solvable"] = "derived series " + dims_of(ds);
  rep.certificates["nilpotent"] = "lower central series " + dims_of(lcs);
  if (flag) {
    std::string s;
    for (std::size_t i = 0; i < flag->size(); ++i) {
      if (i) s += " < ";
      s += (*flag)[i].str();
    }
    rep.certificates["supersolvable"] = s;
  }
  if (qa.witness) {
    rep.certificates["quasi_abelian"] =
        "u = " + vec_str(qa.witness->first) + "; v = " + vec_str(qa.witness->second) +
        "; [u,v] = " + vec_str(l.bracket(qa.witness->first, qa.witness->second)) +
        " outside span{u,v}";
  }
  rep.certificates["simple"] = simple.certificate;
  return rep;
}

}  // namespace liesc
