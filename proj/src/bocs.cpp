#include "forge/bocs.hpp"

#include <sstream>
#include <stdexcept>

namespace forge {

namespace {

void report_line(CheckReport& r, bool ok, const std::string& what) {
  r.ok = r.ok && ok;
  r.detail += (ok ? "ok:   " : "FAIL: ") + what + "\n";
}

void info_line(CheckReport& r, const std::string& what) {
  r.detail += "info: " + what + "\n";
}

std::size_t arrow_basis_index(const FinDimAlgebra& A, const Arrow& a) {
  Path p;
  p.src = a.src;
  p.tgt = a.tgt;
  p.arrows = {a.id};
  Vec v = A.path_image(p);
  std::size_t idx = A.dim();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (idx != A.dim() || !v[i].is_one())
      throw std::logic_error("bocs: arrow " + a.name + " is not a basis element");
    idx = i;
  }
  if (idx == A.dim())
    throw std::logic_error("bocs: arrow " + a.name + " vanishes in the algebra");
  return idx;
}

}  // namespace

std::vector<Path> basis_paths(const FinDimAlgebra& A) {
  if (!A.presented) throw std::logic_error("basis_paths: algebra not presented");
  const auto& pd = *A.presented;
  std::vector<Path> out(A.dim());
  std::vector<bool> found(A.dim(), false);
  for (std::size_t j = 0; j < pd.paths.size(); ++j) {
    const Vec& red = pd.reduction[j];
    std::size_t unit_at = A.dim();
    bool is_unit = true;
    for (std::size_t i = 0; i < red.size(); ++i) {
      if (red[i].is_zero()) continue;
      if (unit_at != A.dim() || !red[i].is_one()) {
        is_unit = false;
        break;
      }
      unit_at = i;
    }
    if (!is_unit || unit_at == A.dim()) continue;
    if (A.basis_names[unit_at] != path_str(pd.pres.quiver, pd.paths[j])) continue;
    out[unit_at] = pd.paths[j];
    found[unit_at] = true;
  }
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (!found[i])
      throw std::logic_error("basis_paths: no normal-form path for basis element " +
                             A.basis_names[i]);
  return out;
}

SemifreeDGA make_dga(const Presentation& pres, std::vector<DashedArrow> dashed,
                     std::vector<BExpr> d0, std::vector<BExpr> d1) {
  SemifreeDGA g;
  g.A = std::make_shared<FinDimAlgebra>(build_algebra(pres));
  g.dashed = std::move(dashed);
  g.W = std::make_shared<WordSpace>(g.A, g.dashed);
  g.d0 = std::move(d0);
  g.d1 = std::move(d1);

  const Quiver& Q = pres.quiver;
  if (g.d0.size() != Q.arrows.size())
    throw std::logic_error("make_dga: need one d0 value per solid arrow");
  if (g.d1.size() != g.dashed.size())
    throw std::logic_error("make_dga: need one d1 value per dashed arrow");
  for (const Arrow& a : Q.arrows) {
    for (const auto& [w, c] : g.d0[a.id]) {
      (void)c;
      if (w.letters() != 1 || !g.W->composable(w) || g.W->word_src(w) != a.src ||
          g.W->word_tgt(w) != a.tgt)
        throw std::logic_error("make_dga: d0(" + a.name +
                               ") has a word not parallel to the arrow: " +
                               g.W->word_str(w));
    }
  }
  for (const DashedArrow& f : g.dashed) {
    for (const auto& [w, c] : g.d1[f.id]) {
      (void)c;
      if (w.letters() != 2 || !g.W->composable(w) || g.W->word_src(w) != f.src ||
          g.W->word_tgt(w) != f.tgt)
        throw std::logic_error("make_dga: d1(" + f.name +
                               ") has a word not parallel to the arrow: " +
                               g.W->word_str(w));
    }
  }
  return g;
}

BExpr d_of_path(const SemifreeDGA& g, const Path& p) {
  BExpr out;
  const FinDimAlgebra& A = *g.A;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    const Arrow& ar = g.pres().quiver.arrows[p.arrows[i]];
    Path pre, suf;
    pre.arrows.assign(p.arrows.begin(), p.arrows.begin() + i);
    pre.src = ar.tgt;
    pre.tgt = p.tgt;
    suf.arrows.assign(p.arrows.begin() + i + 1, p.arrows.end());
    suf.src = p.src;
    suf.tgt = ar.src;
    const Vec pv = A.path_image(pre);
    const Vec sv = A.path_image(suf);
    BExpr term = g.W->mul(g.W->solid_expr(pv),
                          g.W->mul(g.d0[ar.id], g.W->solid_expr(sv)));
    out = expr_sum(out, term);
  }
  return out;
}

BExpr d_of_solid(const SemifreeDGA& g, std::size_t basis_index) {
  const std::vector<Path> paths = basis_paths(*g.A);
  return d_of_path(g, paths[basis_index]);
}

BExpr apply_d(const SemifreeDGA& g, const BExpr& e) {
  const FinDimAlgebra& A = *g.A;
  const std::vector<Path> paths = basis_paths(A);
  std::map<std::size_t, BExpr> dsolid;
  auto d_solid = [&](std::size_t i) -> const BExpr& {
    auto it = dsolid.find(i);
    if (it == dsolid.end()) it = dsolid.emplace(i, d_of_path(g, paths[i])).first;
    return it->second;
  };

  BExpr out;
  const Scalar one = A.field.one();
  for (const auto& [w, c] : e) {
    const std::size_t k = w.letters();
    const std::size_t nf = 2 * k + 1;
    // factor j: even -> solid slot j/2, odd -> dashed letter (j-1)/2
    auto factor = [&](std::size_t j) -> BExpr {
      if (j % 2 == 0) return g.W->word_expr(BWord{{w.solid[j / 2]}, {}}, one);
      return g.W->letter_expr(static_cast<int>(w.dashed[(j - 1) / 2]));
    };
    std::vector<BExpr> pref(nf + 1), suff(nf + 1);
    pref[0] = g.W->solid_expr(A.unit());
    for (std::size_t j = 0; j < nf; ++j) pref[j + 1] = g.W->mul(pref[j], factor(j));
    suff[nf] = g.W->solid_expr(A.unit());
    for (std::size_t j = nf; j > 0; --j)
      suff[j - 1] = g.W->mul(factor(j - 1), suff[j]);
    for (std::size_t j = 0; j < nf; ++j) {
      const std::size_t dashed_before = j / 2;
      BExpr df = (j % 2 == 0) ? d_solid(w.solid[j / 2])
                              : g.d1[w.dashed[(j - 1) / 2]];
      if (df.empty()) continue;
      BExpr term = g.W->mul(pref[j], g.W->mul(df, suff[j + 1]));
      Scalar sc = (dashed_before % 2 == 0) ? c : -c;
      out = expr_sum(out, expr_scaled(term, sc));
    }
  }
  return out;
}

CheckReport check_dga(const SemifreeDGA& g) {
  CheckReport r{true, ""};
  bool welldef = true;
  std::string bad;
  for (const PathExpr& rel : g.pres().relations) {
    BExpr image;
    for (const auto& [p, c] : rel)
      image = expr_sum(image, expr_scaled(d_of_path(g, p), c));
    if (!image.empty()) {
      welldef = false;
      bad = g.W->expr_str(image);
      break;
    }
  }
  report_line(r, welldef,
              "differential kills the relations" +
                  (welldef ? "" : " (residue " + bad + ")"));

  bool square = true;
  std::string sq;
  for (const Arrow& a : g.pres().quiver.arrows) {
    BExpr dd = apply_d(g, g.d0[a.id]);
    if (!dd.empty()) {
      square = false;
      sq = "d(d(" + a.name + ")) = " + g.W->expr_str(dd);
      break;
    }
  }
  if (square) {
    for (const DashedArrow& f : g.dashed) {
      BExpr dd = apply_d(g, g.d1[f.id]);
      if (!dd.empty()) {
        square = false;
        sq = "d(d(" + f.name + ")) = " + g.W->expr_str(dd);
        break;
      }
    }
  }
  report_line(r, square, "d∘d = 0 on all generators" + (square ? "" : " (" + sq + ")"));
  return r;
}

bool Biquiver::acyclic() const {
  Quiver combined;
  combined.n_vertices = solid.n_vertices;
  combined.arrows = solid.arrows;
  for (const DashedArrow& f : dashed) {
    Arrow a;
    a.id = static_cast<int>(combined.arrows.size());
    a.src = f.src;
    a.tgt = f.tgt;
    a.name = f.name;
    combined.arrows.push_back(a);
  }
  return combined.is_acyclic();
}

int v_source(const Bocs& b, std::size_t u) {
  const FinDimAlgebra& A = b.algebra();
  if (u < b.omega_block()) return A.basis_src[u];
  const BWord& w = b.dga.W->words(1)[u - b.omega_block()];
  return A.basis_src[w.solid.back()];
}

Vec v_left_of(const Bocs& b, const Vec& a, const Vec& v) {
  Vec out = zero_vec(b.vdim(), b.algebra().field);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    out = add(out, scaled(b.left_act[i] * v, a[i]));
  }
  return out;
}

Vec v_right_of(const Bocs& b, const Vec& v, const Vec& a) {
  Vec out = zero_vec(b.vdim(), b.algebra().field);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    out = add(out, scaled(b.right_act[i] * v, a[i]));
  }
  return out;
}

namespace {

int gen_index(const Bocs& b, int dashed, std::size_t bb) {
  for (std::size_t gi = 0; gi < b.t2.gens.size(); ++gi)
    if (b.t2.gens[gi].dashed == dashed && b.t2.gens[gi].b == bb)
      return static_cast<int>(gi);
  throw std::logic_error("bocs: kernel generator lookup failed");
}

/// V-basis index of the word e_tgt . φ . e_src.
std::size_t gen_word_index(const Bocs& b, int dashed) {
  const DashedArrow& f = b.dga.dashed[dashed];
  const FinDimAlgebra& A = b.algebra();
  BWord w;
  w.solid = {A.idempotent_index[f.tgt - 1], A.idempotent_index[f.src - 1]};
  w.dashed = {static_cast<std::size_t>(dashed)};
  return b.omega_block() + b.dga.W->index(1, w);
}

/// V-basis index of the word for kernel generator gi: e_tgt(φ) . φ . b.
std::size_t gen_as_word_index(const Bocs& b, int gi) {
  const KernelGen& g = b.t2.gens[gi];
  const DashedArrow& f = b.dga.dashed[g.dashed];
  const FinDimAlgebra& A = b.algebra();
  BWord w;
  w.solid = {A.idempotent_index[f.tgt - 1], g.b};
  w.dashed = {static_cast<std::size_t>(g.dashed)};
  return b.omega_block() + b.dga.W->index(1, w);
}

}  // namespace

Vec t2_of(const Bocs& b, const Vec& p, const Vec& q) {
  const FinDimAlgebra& A = b.algebra();
  Vec out = zero_vec(b.t2.dim(), A.field);
  const auto& w1 = b.dga.W->words(1);
  for (std::size_t qi = 0; qi < q.size(); ++qi) {
    if (q[qi].is_zero()) continue;
    std::size_t coeff_basis;  // left coefficient of the right factor
    int g;
    if (qi < b.omega_block()) {
      coeff_basis = qi;
      g = -1;
    } else {
      const BWord& w = w1[qi - b.omega_block()];
      coeff_basis = w.solid.front();
      g = gen_index(b, static_cast<int>(w.dashed[0]), w.solid.back());
    }
    const Vec moved = b.right_act[coeff_basis] * p;
    for (std::size_t u = 0; u < moved.size(); ++u) {
      if (moved[u].is_zero()) continue;
      std::size_t idx = b.t2.index.at({u, g});
      out[idx] = out[idx] + moved[u] * q[qi];
    }
  }
  return out;
}

Bocs roiter_from_dga(const SemifreeDGA& g) {
  Bocs b;
  b.dga = g;
  const FinDimAlgebra& A = *g.A;
  const Field& F = A.field;
  const auto& w1 = g.W->words(1);
  const std::size_t nA = A.dim();
  const std::size_t nV = nA + w1.size();

  for (std::size_t x = 0; x < nA; ++x)
    b.vlabels.push_back("(" + A.basis_names[x] + ")w");
  for (const BWord& w : w1) b.vlabels.push_back(g.W->word_str(w));

  std::vector<BExpr> d0e(nA);
  {
    const std::vector<Path> paths = basis_paths(A);
    for (std::size_t i = 0; i < nA; ++i) d0e[i] = d_of_path(g, paths[i]);
  }

  b.left_act.assign(nA, Mat(nV, nV, F));
  b.right_act.assign(nA, Mat(nV, nV, F));
  const Scalar one = F.one();
  for (std::size_t a = 0; a < nA; ++a) {
    Mat& L = b.left_act[a];
    Mat& R = b.right_act[a];
    for (std::size_t x = 0; x < nA; ++x) {
      for (const auto& [y, c] : A.mult_table[a][x]) L.at(y, x) = c;
      for (const auto& [y, c] : A.mult_table[x][a]) R.at(y, x) = c;
      // twist: (x·ω)·a = (xa)·ω + x·(one-letter part of d(a))
      BExpr cross = g.W->mul(g.W->solid_expr(A.basis_vec(x)), d0e[a]);
      Vec cv = g.W->to_vec(1, cross);
      for (std::size_t wi = 0; wi < cv.size(); ++wi)
        if (!cv[wi].is_zero()) R.at(nA + wi, x) = cv[wi];
    }
    for (std::size_t wi = 0; wi < w1.size(); ++wi) {
      Vec lv = g.W->to_vec(1, g.W->mul(g.W->solid_expr(A.basis_vec(a)),
                                       g.W->word_expr(w1[wi], one)));
      Vec rv = g.W->to_vec(1, g.W->mul(g.W->word_expr(w1[wi], one),
                                       g.W->solid_expr(A.basis_vec(a))));
      for (std::size_t j = 0; j < lv.size(); ++j) {
        if (!lv[j].is_zero()) L.at(nA + j, nA + wi) = lv[j];
        if (!rv[j].is_zero()) R.at(nA + j, nA + wi) = rv[j];
      }
    }
  }

  b.eps = Mat(nA, nV, F);
  for (std::size_t x = 0; x < nA; ++x) b.eps.at(x, x) = one;
  b.omega = zero_vec(nV, F);
  {
    Vec u = A.unit();
    for (std::size_t x = 0; x < nA; ++x) b.omega[x] = u[x];
  }

  // kernel generators and the canonical basis of V ⊗_A V
  for (const DashedArrow& f : g.dashed)
    for (std::size_t x = 0; x < nA; ++x)
      if (A.basis_tgt[x] == f.src) b.t2.gens.push_back(KernelGen{f.id, x});
  for (std::size_t u = 0; u < nV; ++u) b.t2.basis.push_back({u, -1});
  for (std::size_t gi = 0; gi < b.t2.gens.size(); ++gi) {
    const int t = g.dashed[b.t2.gens[gi].dashed].tgt;
    for (std::size_t u = 0; u < nV; ++u)
      if (v_source(b, u) == t) b.t2.basis.push_back({u, static_cast<int>(gi)});
  }
  for (std::size_t i = 0; i < b.t2.basis.size(); ++i) b.t2.index[b.t2.basis[i]] = i;

  const std::size_t nT = b.t2.dim();
  b.t2.left.assign(nA, Mat(nT, nT, F));
  b.t2.right.assign(nA, Mat(nT, nT, F));
  for (std::size_t a = 0; a < nA; ++a) {
    Mat& L2 = b.t2.left[a];
    Mat& R2 = b.t2.right[a];
    for (std::size_t t = 0; t < nT; ++t) {
      const auto [u, gi] = b.t2.basis[t];
      // left action moves the first slot
      Vec lu = b.left_act[a].column(u);
      for (std::size_t up = 0; up < lu.size(); ++up) {
        if (lu[up].is_zero()) continue;
        L2.at(b.t2.index.at({up, gi}), t) = lu[up];
      }
      if (gi == -1) {
        // (u ⊗ ω)·a = (u·a) ⊗ ω + Σ u·b0 ⊗ gen(ψ, b1) over d(a)'s words
        Vec ru = b.right_act[a].column(u);
        for (std::size_t up = 0; up < ru.size(); ++up)
          if (!ru[up].is_zero()) R2.at(b.t2.index.at({up, -1}), t) = ru[up];
        for (const auto& [w, c] : d0e[a]) {
          const int gj = gen_index(b, static_cast<int>(w.dashed[0]), w.solid.back());
          Vec moved = b.right_act[w.solid.front()].column(u);
          for (std::size_t up = 0; up < moved.size(); ++up) {
            if (moved[up].is_zero()) continue;
            std::size_t idx = b.t2.index.at({up, gj});
            R2.at(idx, t) = R2.at(idx, t) + moved[up] * c;
          }
        }
      } else {
        // (u ⊗ e.φ.b)·a = Σ u ⊗ e.φ.b' over b·a = Σ b'
        const KernelGen& kg = b.t2.gens[gi];
        for (const auto& [bp, c] : A.mult_table[kg.b][a]) {
          const int gj = gen_index(b, kg.dashed, bp);
          std::size_t idx = b.t2.index.at({u, gj});
          R2.at(idx, t) = R2.at(idx, t) + c;
        }
      }
    }
  }

  // comultiplication: on e.φ.e it is ω⊗φ + φ⊗ω minus the glued d1 words; on
  // a general word a0.φ.a1 transport by the bimodule actions.
  b.mu = Mat(nT, nV, F);
  Vec base = t2_of(b, b.omega, b.omega);
  std::vector<Vec> gencol(g.dashed.size());
  for (const DashedArrow& f : g.dashed) {
    const std::size_t gw = gen_word_index(b, f.id);
    Vec gv = zero_vec(nV, F);
    gv[gw] = one;
    Vec col = add(t2_of(b, b.omega, gv), t2_of(b, gv, b.omega));
    for (const auto& [w, c] : g.d1[f.id]) {
      BWord left;
      left.solid = {w.solid[0], w.solid[1]};
      left.dashed = {w.dashed[0]};
      const std::size_t u = nA + g.W->index(1, left);
      const int gj = gen_index(b, static_cast<int>(w.dashed[1]), w.solid[2]);
      std::size_t idx = b.t2.index.at({u, gj});
      col[idx] = col[idx] - c;
    }
    gencol[f.id] = std::move(col);
  }
  for (std::size_t x = 0; x < nA; ++x) b.mu.set_column(x, b.t2.left[x] * base);
  for (std::size_t wi = 0; wi < w1.size(); ++wi) {
    const BWord& w = w1[wi];
    Vec col = b.t2.left[w.solid.front()] *
              (b.t2.right[w.solid.back()] * gencol[w.dashed[0]]);
    b.mu.set_column(nA + wi, col);
  }
  return b;
}

SemifreeDGA roiter_to_dga(const Bocs& b) {
  const SemifreeDGA& g = b.dga;
  const FinDimAlgebra& A = *g.A;
  const std::size_t nA = A.dim();

  std::vector<BExpr> d0(g.pres().quiver.arrows.size());
  for (const Arrow& a : g.pres().quiver.arrows) {
    const std::size_t abi = arrow_basis_index(A, a);
    Vec v = sub(b.right_act[abi] * b.omega, b.left_act[abi] * b.omega);
    for (std::size_t x = 0; x < nA; ++x)
      if (!v[x].is_zero())
        throw std::logic_error("roiter_to_dga: ω·" + a.name + " − " + a.name +
                               "·ω does not lie in the kernel");
    Vec wpart(v.begin() + nA, v.end());
    d0[a.id] = g.W->from_vec(1, wpart);
  }

  std::vector<BExpr> d1(g.dashed.size());
  for (const DashedArrow& f : g.dashed) {
    const std::size_t gw = gen_word_index(b, f.id);
    Vec gv = zero_vec(b.vdim(), A.field);
    gv[gw] = A.field.one();
    Vec col = sub(sub(b.mu.column(gw), t2_of(b, b.omega, gv)),
                  t2_of(b, gv, b.omega));
    BExpr e;
    for (std::size_t t = 0; t < col.size(); ++t) {
      if (col[t].is_zero()) continue;
      const auto [u, gi] = b.t2.basis[t];
      if (gi < 0 || u < nA)
        throw std::logic_error(
            "roiter_to_dga: comultiplication of " + f.name +
            " has a grouplike residue outside the kernel square");
      const BWord& left = g.W->words(1)[u - nA];
      const KernelGen& kg = b.t2.gens[gi];
      BWord w;
      w.solid = {left.solid[0], left.solid[1], kg.b};
      w.dashed = {left.dashed[0], static_cast<std::size_t>(kg.dashed)};
      expr_add_term(e, w, -col[t]);
    }
    d1[f.id] = std::move(e);
  }

  SemifreeDGA out;
  out.A = g.A;
  out.dashed = g.dashed;
  out.W = g.W;
  out.d0 = std::move(d0);
  out.d1 = std::move(d1);
  return out;
}

namespace {

/// (μ⊗1)μ and (1⊗μ)μ as maps into the canonical basis of V⊗V⊗V.
struct TensorCube {
  std::vector<std::pair<std::size_t, int>> basis;  // (t2 index, gen or -1)
  std::map<std::pair<std::size_t, int>, std::size_t> index;
};

int t2_source(const Bocs& b, std::size_t t) {
  const auto [u, gi] = b.t2.basis[t];
  if (gi == -1) return v_source(b, u);
  return b.algebra().basis_src[b.t2.gens[gi].b];
}

TensorCube make_cube(const Bocs& b) {
  TensorCube c;
  for (std::size_t t = 0; t < b.t2.dim(); ++t) c.basis.push_back({t, -1});
  for (std::size_t gi = 0; gi < b.t2.gens.size(); ++gi) {
    const int tv = b.dga.dashed[b.t2.gens[gi].dashed].tgt;
    for (std::size_t t = 0; t < b.t2.dim(); ++t)
      if (t2_source(b, t) == tv) c.basis.push_back({t, static_cast<int>(gi)});
  }
  for (std::size_t i = 0; i < c.basis.size(); ++i) c.index[c.basis[i]] = i;
  return c;
}

/// Class of (t2 element) ⊗ (V element) in the cube basis.
Vec t3_of(const Bocs& b, const TensorCube& c, const Vec& t2v, const Vec& q) {
  const Field& F = b.algebra().field;
  Vec out = zero_vec(c.basis.size(), F);
  const auto& w1 = b.dga.W->words(1);
  for (std::size_t qi = 0; qi < q.size(); ++qi) {
    if (q[qi].is_zero()) continue;
    std::size_t coeff_basis;
    int g;
    if (qi < b.omega_block()) {
      coeff_basis = qi;
      g = -1;
    } else {
      const BWord& w = w1[qi - b.omega_block()];
      coeff_basis = w.solid.front();
      g = gen_index(b, static_cast<int>(w.dashed[0]), w.solid.back());
    }
    const Vec moved = b.t2.right[coeff_basis] * t2v;
    for (std::size_t t = 0; t < moved.size(); ++t) {
      if (moved[t].is_zero()) continue;
      std::size_t idx = c.index.at({t, g});
      out[idx] = out[idx] + moved[t] * q[qi];
    }
  }
  return out;
}

/// Class of (V element) ⊗ (t2 element) in the cube basis.
Vec t3_first(const Bocs& b, const TensorCube& c, const Vec& p, const Vec& t2v) {
  const Field& F = b.algebra().field;
  Vec out = zero_vec(c.basis.size(), F);
  for (std::size_t t = 0; t < t2v.size(); ++t) {
    if (t2v[t].is_zero()) continue;
    const auto [u, gi] = b.t2.basis[t];
    Vec uv = zero_vec(b.vdim(), F);
    uv[u] = F.one();
    Vec pair = t2_of(b, p, uv);
    for (std::size_t s = 0; s < pair.size(); ++s) {
      if (pair[s].is_zero()) continue;
      std::size_t idx = c.index.at({s, gi});
      out[idx] = out[idx] + pair[s] * t2v[t];
    }
  }
  return out;
}

/// The V element represented by the right slot of a t2 basis pair.
Vec slot_element(const Bocs& b, int gi) {
  if (gi == -1) return b.omega;
  Vec v = zero_vec(b.vdim(), b.algebra().field);
  v[gen_as_word_index(b, gi)] = b.algebra().field.one();
  return v;
}

}  // namespace

CheckReport validate(const Bocs& b) {
  CheckReport r{true, ""};
  const FinDimAlgebra& A = b.algebra();
  const Field& F = A.field;
  const std::size_t nA = A.dim();
  const std::size_t nV = b.vdim();

  {  // bimodule axioms of V
    Mat lsum(nV, nV, F), rsum(nV, nV, F);
    for (int v = 1; v <= A.n_vertices; ++v) {
      lsum = lsum + b.left_act[A.idempotent_index[v - 1]];
      rsum = rsum + b.right_act[A.idempotent_index[v - 1]];
    }
    bool unit = lsum == Mat::identity(nV, F) && rsum == Mat::identity(nV, F);
    report_line(r, unit, "unit acts as identity on V");

    bool assoc = true;
    for (std::size_t a = 0; a < nA && assoc; ++a)
      for (std::size_t c = 0; c < nA && assoc; ++c) {
        Mat lab(nV, nV, F), rab(nV, nV, F);
        for (const auto& [y, s] : A.mult_table[a][c]) {
          lab = lab + b.left_act[y] * s;
          rab = rab + b.right_act[y] * s;
        }
        if (!(b.left_act[a] * b.left_act[c] == lab)) assoc = false;
        if (!(b.right_act[c] * b.right_act[a] == rab)) assoc = false;
        if (!(b.left_act[a] * b.right_act[c] == b.right_act[c] * b.left_act[a]))
          assoc = false;
      }
    report_line(r, assoc, "left/right actions associative and commuting");
  }

  {  // counit is a bimodule map
    bool ok = true;
    for (std::size_t a = 0; a < nA && ok; ++a) {
      Vec av = A.basis_vec(a);
      if (!(b.eps * b.left_act[a] == A.left_mult_matrix(av) * b.eps)) ok = false;
      if (!(b.eps * b.right_act[a] == A.right_mult_matrix(av) * b.eps)) ok = false;
    }
    report_line(r, ok, "counit is a bimodule map");
  }

  {  // comultiplication is a bimodule map
    bool ok = true;
    for (std::size_t a = 0; a < nA && ok; ++a) {
      if (!(b.mu * b.left_act[a] == b.t2.left[a] * b.mu)) ok = false;
      if (!(b.mu * b.right_act[a] == b.t2.right[a] * b.mu)) ok = false;
    }
    report_line(r, ok, "comultiplication is a bimodule map");
  }

  {  // coassociativity
    TensorCube cube = make_cube(b);
    bool ok = true;
    std::string bad;
    for (std::size_t v = 0; v < nV && ok; ++v) {
      Vec mu_v = b.mu.column(v);
      Vec lhs = zero_vec(cube.basis.size(), F);
      Vec rhs = zero_vec(cube.basis.size(), F);
      for (std::size_t t = 0; t < mu_v.size(); ++t) {
        if (mu_v[t].is_zero()) continue;
        const auto [u, gi] = b.t2.basis[t];
        // (μ⊗1): expand the left slot
        Vec l = t3_of(b, cube, b.mu.column(u), slot_element(b, gi));
        lhs = add(lhs, scaled(l, mu_v[t]));
        // (1⊗μ): expand the right slot
        Vec uv = zero_vec(nV, F);
        uv[u] = F.one();
        Vec mslot = (gi == -1) ? Vec(b.mu * b.omega)
                               : b.mu.column(gen_as_word_index(b, gi));
        Vec rr = t3_first(b, cube, uv, mslot);
        rhs = add(rhs, scaled(rr, mu_v[t]));
      }
      if (!(sub(lhs, rhs) == zero_vec(cube.basis.size(), F))) {
        ok = false;
        bad = b.vlabels[v];
      }
    }
    report_line(r, ok, "coassociativity" + (ok ? "" : " (fails at " + bad + ")"));
  }

  {  // counit identities
    bool ok = true;
    for (std::size_t v = 0; v < nV && ok; ++v) {
      Vec mu_v = b.mu.column(v);
      Vec left = zero_vec(nV, F), right = zero_vec(nV, F);
      for (std::size_t t = 0; t < mu_v.size(); ++t) {
        if (mu_v[t].is_zero()) continue;
        const auto [u, gi] = b.t2.basis[t];
        Vec uv = zero_vec(nV, F);
        uv[u] = F.one();
        // (ε⊗1): ε(u) acts on the right slot
        Vec au = b.eps.column(u);
        left = add(left, scaled(v_left_of(b, au, slot_element(b, gi)), mu_v[t]));
        // (1⊗ε): u · ε(right slot)
        Vec ae = (gi == -1) ? A.unit() : A.zero();
        right = add(right, scaled(v_right_of(b, uv, ae), mu_v[t]));
      }
      Vec e = zero_vec(nV, F);
      e[v] = F.one();
      if (!(sub(left, e) == zero_vec(nV, F)) || !(sub(right, e) == zero_vec(nV, F)))
        ok = false;
    }
    report_line(r, ok, "counit identities (ε⊗1)μ = id = (1⊗ε)μ");
  }

  {  // grouplike axioms
    bool ok = (b.mu * b.omega == t2_of(b, b.omega, b.omega)) &&
              (b.eps * b.omega == A.unit());
    report_line(r, ok, "grouplike: μ(ω) = ω⊗ω and ε(ω) = 1");
  }

  {  // kernel freeness bookkeeping
    std::size_t expect = 0;
    for (const KernelGen& g : b.t2.gens) {
      const int tv = b.dga.dashed[g.dashed].tgt;
      for (std::size_t x = 0; x < nA; ++x)
        if (A.basis_src[x] == tv) ++expect;
    }
    bool ok = expect == b.dga.W->words(1).size();
    report_line(r, ok, "kernel is freely spanned by the one-letter words");
  }

  {
    CheckReport d = check_dga(b.dga);
    r.ok = r.ok && d.ok;
    r.detail += d.detail;
  }

  info_line(r, std::string("biquiver ") +
                   (is_directed(b) ? "directed" : "not directed"));
  return r;
}

Biquiver biquiver(const Bocs& b) {
  return Biquiver{b.dga.pres().quiver, b.dga.dashed};
}

bool is_directed(const Bocs& b) { return biquiver(b).acyclic(); }

RegularityWitness is_regular(const Bocs& b) {
  const FinDimAlgebra& A = b.algebra();
  for (const Arrow& a : b.dga.pres().quiver.arrows) {
    int bare = -1;
    for (const auto& [w, c] : b.dga.d0[a.id]) {
      (void)c;
      if (A.basis_layer[w.solid[0]] == 0 && A.basis_layer[w.solid[1]] == 0) {
        const int d = static_cast<int>(w.dashed[0]);
        if (bare < 0 || d < bare) bare = d;
      }
    }
    if (bare >= 0) return RegularityWitness{false, a.id, bare};
  }
  return RegularityWitness{};
}

namespace {

Bocs regularize_step(const Bocs& b, int rm_arrow, int rm_dashed) {
  const SemifreeDGA& g = b.dga;
  const FinDimAlgebra& A = *g.A;
  const Field& F = A.field;
  const Quiver& Q = g.pres().quiver;
  const Arrow& ar = Q.arrows[rm_arrow];

  BWord bare;
  bare.solid = {A.idempotent_index[ar.tgt - 1], A.idempotent_index[ar.src - 1]};
  bare.dashed = {static_cast<std::size_t>(rm_dashed)};
  auto it = g.d0[rm_arrow].find(bare);
  if (it == g.d0[rm_arrow].end())
    throw std::logic_error("regularize: chosen pair carries no bare term");
  const Scalar lambda = it->second;
  BExpr rest = g.d0[rm_arrow];
  rest.erase(bare);
  for (const auto& [w, c] : rest) {
    (void)c;
    if (w.dashed[0] == static_cast<std::size_t>(rm_dashed))
      throw std::logic_error(
          "regularize: remainder still contains the eliminated dashed arrow "
          "(input not directed?)");
  }
  const BExpr subst_old = expr_scaled(rest, -(lambda.inverse()));

  // new solid presentation: drop the arrow, kill its monomials in relations
  Presentation np;
  np.field = F;
  np.quiver.n_vertices = Q.n_vertices;
  std::vector<int> arrow_map(Q.arrows.size(), -1);
  for (const Arrow& a : Q.arrows) {
    if (a.id == rm_arrow) continue;
    Arrow na = a;
    na.id = static_cast<int>(np.quiver.arrows.size());
    arrow_map[a.id] = na.id;
    np.quiver.arrows.push_back(na);
  }
  np.nilpotency = g.pres().nilpotency;
  for (const PathExpr& rel : g.pres().relations) {
    PathExpr nr;
    for (const auto& [p, c] : rel) {
      bool dead = false;
      Path q = p;
      for (int& aid : q.arrows) {
        if (aid == rm_arrow) {
          dead = true;
          break;
        }
        aid = arrow_map[aid];
      }
      if (!dead) add_term(nr, q, c);
    }
    if (!nr.empty()) np.relations.push_back(std::move(nr));
  }

  std::vector<DashedArrow> nd;
  std::vector<int> dashed_map(g.dashed.size(), -1);
  for (const DashedArrow& f : g.dashed) {
    if (f.id == rm_dashed) continue;
    DashedArrow nf = f;
    nf.id = static_cast<int>(nd.size());
    dashed_map[f.id] = nf.id;
    nd.push_back(nf);
  }

  auto nA = std::make_shared<const FinDimAlgebra>(build_algebra(np));
  WordSpace nW(nA, nd);

  const std::vector<Path> paths = basis_paths(A);
  auto translate_solid = [&](std::size_t i) -> Vec {
    Path p = paths[i];
    for (int& aid : p.arrows) {
      if (aid == rm_arrow) return nA->zero();
      aid = arrow_map[aid];
    }
    return nA->path_image(p);
  };

  BExpr subst_new;
  for (const auto& [w, c] : subst_old) {
    BExpr acc = nW.solid_expr(translate_solid(w.solid[0]));
    acc = nW.mul(acc, nW.letter_expr(dashed_map[w.dashed[0]]));
    acc = nW.mul(acc, nW.solid_expr(translate_solid(w.solid[1])));
    subst_new = expr_sum(subst_new, expr_scaled(acc, c));
  }

  auto translate_expr = [&](const BExpr& e) -> BExpr {
    BExpr out;
    for (const auto& [w, c] : e) {
      BExpr acc = nW.solid_expr(translate_solid(w.solid[0]));
      for (std::size_t i = 0; i < w.letters(); ++i) {
        if (w.dashed[i] == static_cast<std::size_t>(rm_dashed))
          acc = nW.mul(acc, subst_new);
        else
          acc = nW.mul(acc, nW.letter_expr(dashed_map[w.dashed[i]]));
        acc = nW.mul(acc, nW.solid_expr(translate_solid(w.solid[i + 1])));
      }
      out = expr_sum(out, expr_scaled(acc, c));
    }
    return out;
  };

  std::vector<BExpr> nd0(np.quiver.arrows.size());
  for (const Arrow& a : Q.arrows) {
    if (a.id == rm_arrow) continue;
    nd0[arrow_map[a.id]] = translate_expr(g.d0[a.id]);
  }
  std::vector<BExpr> nd1(nd.size());
  for (const DashedArrow& f : g.dashed) {
    if (f.id == rm_dashed) continue;
    nd1[dashed_map[f.id]] = translate_expr(g.d1[f.id]);
  }

  SemifreeDGA ng = make_dga(np, nd, std::move(nd0), std::move(nd1));
  CheckReport cr = check_dga(ng);
  if (!cr.ok)
    throw std::logic_error("regularize: reduction broke the differential:\n" +
                           cr.detail);
  return roiter_from_dga(ng);
}

}  // namespace

Bocs regularize(const Bocs& b) {
  if (!is_directed(b))
    throw std::logic_error("regularize: biquiver must be directed");
  Bocs cur = b;
  RegularityWitness w = is_regular(cur);
  while (!w.regular) {
    cur = regularize_step(cur, w.solid_arrow, w.dashed);
    w = is_regular(cur);
  }
  return cur;
}

Bocs trivial_bocs(const Presentation& pres) {
  std::vector<BExpr> d0(pres.quiver.arrows.size());
  SemifreeDGA g = make_dga(pres, {}, std::move(d0), {});
  return roiter_from_dga(g);
}

}  // namespace forge
