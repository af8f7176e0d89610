#include "forge/ext.hpp"

#include <stdexcept>
#include <tuple>

namespace forge {
namespace {

Vec flatten(const Mat& X) {
  Vec v(X.rows() * X.cols(), X.field().zero());
  for (std::size_t a = 0; a < X.rows(); ++a)
    for (std::size_t b = 0; b < X.cols(); ++b) v[a * X.cols() + b] = X.at(a, b);
  return v;
}

struct HomBlock {
  std::size_t offset = 0;               ///< start within the degree piece
  std::vector<Mat> basis;               ///< hom-space basis matrices
  Mat flat;                             ///< flattened basis, one column each
};

using BlockKey = std::tuple<int, int, int, int>;  // (n, k, i, j)

/// Coordinates of a morphism inside its hom block; throws if it is not a
/// module homomorphism in the stored span.
Vec block_coords(const HomBlock& blk, const Mat& X) {
  auto x = solve(blk.flat, flatten(X));
  if (!x) throw std::logic_error("dg_end: morphism outside its hom space");
  return *x;
}

}  // namespace

DgEnd dg_end(const std::vector<Resolution>& res) {
  if (res.empty()) throw std::invalid_argument("dg_end: no resolutions");
  const FinDimAlgebra* A = res[0].M.A;
  for (const auto& r : res)
    if (r.M.A != A) throw std::invalid_argument("dg_end: mixed base algebras");
  const Field F = A->field;
  const int nv = static_cast<int>(res.size());
  int L = 0;
  for (const auto& r : res) L = std::max(L, static_cast<int>(r.terms()));

  auto proj_at = [&](int v, int k) -> const LeftModule* {
    if (k < 0 || k >= static_cast<int>(res[static_cast<std::size_t>(v)].terms()))
      return nullptr;
    return &res[static_cast<std::size_t>(v)].P[static_cast<std::size_t>(k)];
  };
  // differential out of P_k(v): P_k -> P_{k-1}
  auto diff_at = [&](int v, int k) -> const Mat* {
    if (k < 1 || k - 1 >= static_cast<int>(res[static_cast<std::size_t>(v)].d.size()))
      return nullptr;
    return &res[static_cast<std::size_t>(v)].d[static_cast<std::size_t>(k - 1)];
  };

  DgEnd E;
  E.alg.field = F;
  E.alg.n_vertices = A->n_vertices;

  std::map<BlockKey, HomBlock> blocks;
  for (int n = -(L - 1); n <= L - 1; ++n) {
    GradedPiece piece;
    std::vector<DgEndElt> elts;
    for (int k = 0; k < L; ++k) {
      const int kt = k - n;
      for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
          const LeftModule* src = proj_at(j, k);
          const LeftModule* tgt = proj_at(i, kt);
          if (!src || !tgt || src->dim == 0 || tgt->dim == 0) continue;
          auto basis = hom_space(*src, *tgt);
          if (basis.empty()) continue;
          HomBlock blk;
          blk.offset = elts.size();
          blk.basis = basis;
          std::vector<Vec> flats;
          for (const auto& X : basis) flats.push_back(flatten(X));
          blk.flat = Mat::from_columns(flats, src->dim * tgt->dim, F);
          blocks[{n, k, i, j}] = std::move(blk);
          for (std::size_t b = 0; b < basis.size(); ++b) {
            DgEndElt e;
            e.k = k;
            e.i = i;
            e.j = j;
            e.map = basis[b];
            piece.labels.push_back("f" + std::to_string(n) + "[" + std::to_string(k) +
                                   "]" + std::to_string(i) + "<" + std::to_string(j) +
                                   "#" + std::to_string(b));
            piece.bigrade.emplace_back(i, j);
            elts.push_back(std::move(e));
          }
        }
    }
    if (!piece.labels.empty()) {
      E.alg.pieces[n] = std::move(piece);
      E.elts[n] = std::move(elts);
    }
  }

  E.alg.arity_bound = 2;
  E.alg.m.assign(3, {});

  // differential
  for (const auto& [n, elts] : E.elts) {
    const std::size_t src_dim = elts.size();
    const std::size_t tgt_dim = E.alg.dim(n + 1);
    if (tgt_dim == 0) continue;
    Mat m1(tgt_dim, src_dim, F);
    const Scalar sgn = ((n % 2 + 2) % 2 == 0) ? -F.one() : F.one();  // -(-1)^n
    for (std::size_t e = 0; e < elts.size(); ++e) {
      const auto& f = elts[e];
      // component d . f at source index k
      if (const Mat* dI = diff_at(f.i, f.k - n)) {
        Mat comp = (*dI) * f.map;
        if (!comp.is_zero()) {
          auto it = blocks.find({n + 1, f.k, f.i, f.j});
          if (it == blocks.end()) throw std::logic_error("dg_end: missing block (d.f)");
          Vec c = block_coords(it->second, comp);
          for (std::size_t b = 0; b < c.size(); ++b)
            m1.at(it->second.offset + b, e) += c[b];
        }
      }
      // component -(-1)^n f . d at source index k+1
      if (const Mat* dJ = diff_at(f.j, f.k + 1)) {
        Mat comp = f.map * (*dJ);
        if (!comp.is_zero()) {
          auto it = blocks.find({n + 1, f.k + 1, f.i, f.j});
          if (it == blocks.end()) throw std::logic_error("dg_end: missing block (f.d)");
          Vec c = block_coords(it->second, comp);
          for (std::size_t b = 0; b < c.size(); ++b)
            m1.at(it->second.offset + b, e) += sgn * c[b];
        }
      }
    }
    E.alg.set_table(1, {n}, std::move(m1));
  }

  // composition
  for (const auto& [a, eltsA] : E.elts)
    for (const auto& [b, eltsB] : E.elts) {
      const std::size_t tgt_dim = E.alg.dim(a + b);
      if (tgt_dim == 0) continue;
      Mat m2(tgt_dim, eltsA.size() * eltsB.size(), F);
      for (std::size_t ef = 0; ef < eltsA.size(); ++ef)
        for (std::size_t eg = 0; eg < eltsB.size(); ++eg) {
          const auto& f = eltsA[ef];
          const auto& g = eltsB[eg];
          if (f.j != g.i) continue;       // vertex composability
          if (f.k != g.k - b) continue;   // homological alignment
          Mat comp = f.map * g.map;
          if (comp.is_zero()) continue;
          auto it = blocks.find({a + b, g.k, f.i, g.j});
          if (it == blocks.end()) throw std::logic_error("dg_end: missing block (f.g)");
          Vec c = block_coords(it->second, comp);
          for (std::size_t bb = 0; bb < c.size(); ++bb)
            m2.at(it->second.offset + bb, ef * eltsB.size() + eg) += c[bb];
        }
      E.alg.set_table(2, {a, b}, std::move(m2));
    }
  E.alg.tidy();
  return E;
}

std::vector<std::size_t> ext_dims(const Resolution& RM, const LeftModule& N,
                                  std::size_t max_deg) {
  if (!RM.complete && max_deg + 1 >= RM.terms())
    throw std::invalid_argument("ext_dims: resolution too short");
  const Field F = N.A->field;
  std::vector<std::vector<Mat>> hom;   // hom[k] = basis of Hom(P_k, N)
  std::vector<Mat> flat;               // flattened bases
  const std::size_t K = std::min(RM.terms(), max_deg + 2);
  for (std::size_t k = 0; k < K; ++k) {
    auto basis = hom_space(RM.P[k], N);
    std::vector<Vec> cols;
    Vec probe;
    for (const auto& X : basis) {
      Vec v(X.rows() * X.cols(), F.zero());
      for (std::size_t a = 0; a < X.rows(); ++a)
        for (std::size_t c = 0; c < X.cols(); ++c) v[a * X.cols() + c] = X.at(a, c);
      cols.push_back(v);
    }
    flat.push_back(Mat::from_columns(cols, RM.P[k].dim * N.dim, F));
    hom.push_back(std::move(basis));
  }
  // delta_k : Hom(P_k, N) -> Hom(P_{k+1}, N), f -> f . d_{k+1}
  std::vector<Mat> delta;
  for (std::size_t k = 0; k + 1 < K; ++k) {
    Mat dk(hom[k + 1].size(), hom[k].size(), F);
    if (k < RM.d.size()) {
      for (std::size_t e = 0; e < hom[k].size(); ++e) {
        Mat comp = hom[k][e] * RM.d[k];
        Vec v(comp.rows() * comp.cols(), F.zero());
        for (std::size_t a = 0; a < comp.rows(); ++a)
          for (std::size_t c = 0; c < comp.cols(); ++c) v[a * comp.cols() + c] = comp.at(a, c);
        auto x = solve(flat[k + 1], v);
        if (!x) throw std::logic_error("ext_dims: composite escapes hom space");
        for (std::size_t b = 0; b < x->size(); ++b) dk.at(b, e) = (*x)[b];
      }
    }
    delta.push_back(std::move(dk));
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= max_deg; ++k) {
    const std::size_t hk = k < hom.size() ? hom[k].size() : 0;
    const std::size_t rk = k < delta.size() ? rank(delta[k]) : 0;
    const std::size_t rkm = (k >= 1 && k - 1 < delta.size()) ? rank(delta[k - 1]) : 0;
    out.push_back(hk - rk - rkm);
  }
  return out;
}

}  // namespace forge
