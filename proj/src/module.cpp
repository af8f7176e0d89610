#include "forge/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace forge {

namespace {

/// Indices generating the algebra: idempotents plus the first radical layer.
std::vector<std::size_t> generator_indices(const FinDimAlgebra& A) {
  std::vector<std::size_t> gens(A.idempotent_index.begin(), A.idempotent_index.end());
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.basis_layer[i] == 1) gens.push_back(i);
  return gens;
}

}  // namespace

Mat LeftModule::act(const Vec& a) const {
  Mat m(dim, dim, A->field);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m = m + action[i] * a[i];
  return m;
}

Mat LeftModule::vertex_projector(int v) const {
  return action[A->idempotent_index[v - 1]];
}

std::vector<std::size_t> LeftModule::dimension_vector() const {
  std::vector<std::size_t> d;
  for (int v = 1; v <= A->n_vertices; ++v)
    d.push_back(rank(vertex_projector(v)));
  return d;
}

void LeftModule::check_axioms() const {
  Mat one = act(A->unit());
  if (!(one == Mat::identity(dim, A->field)))
    throw std::logic_error("module: unit does not act as identity");
  for (std::size_t i = 0; i < A->dim(); ++i)
    for (std::size_t j = 0; j < A->dim(); ++j) {
      Mat lhs = act(A->mult(A->basis_vec(i), A->basis_vec(j)));
      if (!(lhs == action[i] * action[j]))
        throw std::logic_error("module: action not multiplicative");
    }
}

LeftModule zero_module(const FinDimAlgebra& A) {
  LeftModule m;
  m.A = &A;
  m.dim = 0;
  m.action.assign(A.dim(), Mat(0, 0, A.field));
  return m;
}

LeftModule simple_module(const FinDimAlgebra& A, int v) {
  LeftModule m;
  m.A = &A;
  m.dim = 1;
  m.action.assign(A.dim(), Mat(1, 1, A.field));
  m.action[A.idempotent_index[v - 1]].at(0, 0) = A.field.one();
  return m;
}

std::vector<std::size_t> projective_basis_indices(const FinDimAlgebra& A, int v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.basis_src[i] == v) idx.push_back(i);
  return idx;
}

LeftModule projective_module(const FinDimAlgebra& A, int v) {
  auto idx = projective_basis_indices(A, v);
  std::vector<std::size_t> pos(A.dim(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
  LeftModule m;
  m.A = &A;
  m.dim = idx.size();
  m.action.assign(A.dim(), Mat(m.dim, m.dim, A.field));
  for (std::size_t b = 0; b < A.dim(); ++b)
    for (std::size_t k = 0; k < idx.size(); ++k) {
      Vec prod = A.mult(A.basis_vec(b), A.basis_vec(idx[k]));
      for (std::size_t t = 0; t < A.dim(); ++t)
        if (!prod[t].is_zero()) m.action[b].at(pos[t], k) = prod[t];
    }
  return m;
}

SumModule direct_sum(const FinDimAlgebra& A, const std::vector<LeftModule>& parts) {
  SumModule s;
  s.mod.A = &A;
  s.mod.dim = 0;
  for (const auto& p : parts) {
    s.offsets.push_back(s.mod.dim);
    s.mod.dim += p.dim;
  }
  s.mod.action.assign(A.dim(), Mat(s.mod.dim, s.mod.dim, A.field));
  for (std::size_t b = 0; b < A.dim(); ++b)
    for (std::size_t pi = 0; pi < parts.size(); ++pi)
      for (std::size_t i = 0; i < parts[pi].dim; ++i)
        for (std::size_t j = 0; j < parts[pi].dim; ++j)
          s.mod.action[b].at(s.offsets[pi] + i, s.offsets[pi] + j) =
              parts[pi].action[b].at(i, j);
  return s;
}

std::vector<Mat> hom_space(const LeftModule& M, const LeftModule& N) {
  const Field& F = M.A->field;
  auto gens = generator_indices(*M.A);
  std::size_t nm = N.dim * M.dim;
  if (nm == 0) return {};
  // unknown X: N.dim x M.dim, flattened row-major; constraints X B - C X = 0
  std::vector<Vec> rows;
  for (auto g : gens) {
    const Mat& B = M.action[g];
    const Mat& C = N.action[g];
    for (std::size_t i = 0; i < N.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j) {
        Vec row(nm, F.zero());
        for (std::size_t k = 0; k < M.dim; ++k) row[i * M.dim + k] += B.at(k, j);
        for (std::size_t k = 0; k < N.dim; ++k) row[k * M.dim + j] -= C.at(i, k);
        rows.push_back(row);
      }
  }
  Mat sys = Mat::from_columns(rows, nm, F).transpose();
  Mat ker = kernel_basis(sys);
  std::vector<Mat> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Mat f(N.dim, M.dim, F);
    for (std::size_t i = 0; i < N.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j) f.at(i, j) = ker.at(i * M.dim + j, c);
    out.push_back(f);
  }
  return out;
}

Mat radical_submodule(const LeftModule& M) {
  std::vector<Vec> cols;
  for (auto r : M.A->radical_indices())
    for (std::size_t j = 0; j < M.dim; ++j) cols.push_back(M.action[r].column(j));
  if (cols.empty()) return Mat(M.dim, 0, M.A->field);
  return image_basis(Mat::from_columns(cols, M.dim, M.A->field));
}

Submodule submodule_on(const LeftModule& M, const Mat& basis) {
  Mat B = image_basis(basis);
  Submodule s;
  s.inclusion = B;
  s.mod.A = M.A;
  s.mod.dim = B.cols();
  s.mod.action.assign(M.A->dim(), Mat(B.cols(), B.cols(), M.A->field));
  for (std::size_t b = 0; b < M.A->dim(); ++b) {
    auto x = solve(B, M.action[b] * B);
    if (!x) throw std::logic_error("submodule_on: span not stable under action");
    s.mod.action[b] = *x;
  }
  return s;
}

QuotientModule quotient_by(const LeftModule& M, const Mat& sub) {
  const Field& F = M.A->field;
  Mat U = image_basis(sub);
  Mat C = complement(U);  // standard basis vectors extending U
  Mat full = Mat::hstack(U, C);
  Mat inv = inverse(full);
  // projection: last C.cols() rows of inv
  Mat proj(C.cols(), M.dim, F);
  for (std::size_t i = 0; i < C.cols(); ++i)
    for (std::size_t j = 0; j < M.dim; ++j) proj.at(i, j) = inv.at(U.cols() + i, j);
  QuotientModule q;
  q.projection = proj;
  q.mod.A = M.A;
  q.mod.dim = C.cols();
  q.mod.action.assign(M.A->dim(), Mat(C.cols(), C.cols(), F));
  for (std::size_t b = 0; b < M.A->dim(); ++b)
    q.mod.action[b] = proj * (M.action[b] * C);
  return q;
}

Cover projective_cover(const LeftModule& M) {
  const FinDimAlgebra& A = *M.A;
  Mat JM = radical_submodule(M);
  std::vector<int> vertices;
  std::vector<Vec> gens;
  for (int v = 1; v <= A.n_vertices; ++v) {
    Mat Mv = image_basis(M.vertex_projector(v));
    Mat JMv = intersect(M.vertex_projector(v) * JM, Mv);
    Mat tops = complement_in(JMv, Mv);
    for (std::size_t c = 0; c < tops.cols(); ++c) {
      vertices.push_back(v);
      gens.push_back(tops.column(c));
    }
  }
  std::vector<LeftModule> parts;
  for (int v : vertices) parts.push_back(projective_module(A, v));
  SumModule S = direct_sum(A, parts);
  Mat map(M.dim, S.mod.dim, A.field);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto idx = projective_basis_indices(A, vertices[g]);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      Vec col = M.action[idx[k]] * gens[g];
      for (std::size_t i = 0; i < M.dim; ++i)
        map.at(i, S.offsets[g] + k) = col[i];
    }
  }
  Cover c;
  c.P = S.mod;
  c.vertices = vertices;
  c.map = map;
  return c;
}

QuotientModule standard_module(const FinDimAlgebra& A, const std::vector<int>& order,
                               int v) {
  LeftModule P = projective_module(A, v);
  auto idx = projective_basis_indices(A, v);
  std::vector<std::size_t> pos(A.dim(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
  std::size_t v_rank = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (order[k] == v) v_rank = k;
  std::vector<Vec> cols;
  for (std::size_t k = v_rank + 1; k < order.size(); ++k) {
    int w = order[k];
    // trace of P(w) in P(v): elements b * a with b in A e_w, a in e_w A e_v
    for (std::size_t a = 0; a < A.dim(); ++a) {
      if (A.basis_src[a] != v || A.basis_tgt[a] != w) continue;
      for (std::size_t b = 0; b < A.dim(); ++b) {
        if (A.basis_src[b] != w) continue;
        Vec prod = A.mult(A.basis_vec(b), A.basis_vec(a));
        Vec col(P.dim, A.field.zero());
        for (std::size_t t = 0; t < A.dim(); ++t)
          if (!prod[t].is_zero()) col[pos[t]] = prod[t];
        cols.push_back(col);
      }
    }
  }
  Mat U = cols.empty() ? Mat(P.dim, 0, A.field)
                       : Mat::from_columns(cols, P.dim, A.field);
  return quotient_by(P, U);
}

std::vector<std::vector<long long>> decomposition_matrix(
    const FinDimAlgebra& A, const std::vector<int>& order) {
  const std::size_t n = order.size();
  const Field& F = A.field;
  // D: columns = dimension vectors of the Δ(order[i])
  Mat D(n, n, F);
  for (std::size_t i = 0; i < n; ++i) {
    auto dv = standard_module(A, order, order[i]).mod.dimension_vector();
    for (std::size_t r = 0; r < n; ++r)
      D.at(r, i) = F.integer(static_cast<long long>(dv[r]));
  }
  std::vector<std::vector<long long>> T(n, std::vector<long long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    auto dv = projective_module(A, order[j]).dimension_vector();
    Vec rhs(n, F.zero());
    for (std::size_t r = 0; r < n; ++r)
      rhs[r] = F.integer(static_cast<long long>(dv[r]));
    auto x = solve(D, rhs);
    if (!x) throw std::logic_error("decomposition_matrix: dimension system unsolvable");
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& c = (*x)[i];
      if (c.den() != 1 || c.num() < 0)
        throw std::logic_error("decomposition_matrix: non-integral multiplicity");
      T[i][j] = static_cast<long long>(c.num());
    }
  }
  return T;
}

namespace {

struct AlgebraQuotient {
  FinDimAlgebra B;
  std::vector<int> vertex_map;  // old vertex -> new vertex (0 if removed)
};

void recompute_layers(FinDimAlgebra& B) {
  const Field& F = B.field;
  // radical = span of non-idempotent-part: complement of semisimple part is
  // exactly the span of basis elements that are not idempotents *only if* the
  // basis is adapted; here we compute J as the set of elements x with
  // x in ⊕_{i≠j} blocks plus nilpotent diagonal parts.  For the algebras this
  // code builds (quotients of layer-adapted algebras), the image of the old
  // radical spans the new one; the caller passes that span via basis_layer
  // preset to 1 for all non-idempotent elements, and we refine to true layers.
  std::vector<Vec> jcols;
  for (std::size_t i = 0; i < B.dim(); ++i)
    if (B.basis_layer[i] >= 1) jcols.push_back(B.basis_vec(i));
  Mat J = jcols.empty() ? Mat(B.dim(), 0, F)
                        : Mat::from_columns(jcols, B.dim(), F);
  std::vector<Mat> powers{J};
  while (powers.back().cols() > 0) {
    std::vector<Vec> cols;
    const Mat& prev = powers.back();
    for (std::size_t a = 0; a < J.cols(); ++a)
      for (std::size_t b = 0; b < prev.cols(); ++b)
        cols.push_back(B.mult(J.column(a), prev.column(b)));
    Mat nxt = cols.empty() ? Mat(B.dim(), 0, F)
                           : image_basis(Mat::from_columns(cols, B.dim(), F));
    if (nxt.cols() == 0) {
      powers.push_back(nxt);
      break;
    }
    powers.push_back(nxt);
    if (powers.size() > B.dim() + 2)
      throw std::logic_error("recompute_layers: radical candidate not nilpotent");
  }
  for (std::size_t i = 0; i < B.dim(); ++i) {
    if (B.basis_layer[i] == 0) continue;
    int layer = 0;
    for (std::size_t k = 0; k < powers.size(); ++k) {
      if (powers[k].cols() > 0 && in_span(powers[k], B.basis_vec(i)))
        layer = static_cast<int>(k) + 1;
      else
        break;
    }
    if (layer == 0)
      throw std::logic_error("recompute_layers: basis element outside radical");
    B.basis_layer[i] = layer;
  }
}

AlgebraQuotient quotient_algebra(const FinDimAlgebra& A, const Mat& ideal,
                                 int removed_vertex) {
  const Field& F = A.field;
  Mat U = image_basis(ideal);
  Mat C = complement(U);  // standard basis vectors (= classes of A basis elts)
  Mat inv = inverse(Mat::hstack(U, C));
  Mat proj(C.cols(), A.dim(), F);
  for (std::size_t i = 0; i < C.cols(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) proj.at(i, j) = inv.at(U.cols() + i, j);

  AlgebraQuotient out;
  FinDimAlgebra& B = out.B;
  B.field = F;
  out.vertex_map.assign(A.n_vertices + 1, 0);
  int nv = 0;
  for (int v = 1; v <= A.n_vertices; ++v)
    if (v != removed_vertex) out.vertex_map[v] = ++nv;
  B.n_vertices = nv;

  // new basis element k corresponds to the class of old basis element idx[k]
  std::vector<std::size_t> idx;
  for (std::size_t c = 0; c < C.cols(); ++c) {
    std::size_t j = 0;
    while (C.at(j, c).is_zero()) ++j;
    idx.push_back(j);
  }
  B.idempotent_index.assign(nv, 0);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::size_t old = idx[k];
    B.basis_names.push_back(A.basis_names[old]);
    int os = A.basis_src[old], ot = A.basis_tgt[old];
    B.basis_src.push_back(out.vertex_map[os]);
    B.basis_tgt.push_back(out.vertex_map[ot]);
    B.basis_layer.push_back(A.basis_layer[old] == 0 ? 0 : 1);  // refined below
    if (A.basis_layer[old] == 0) {
      if (out.vertex_map[os] == 0)
        throw std::logic_error("quotient_algebra: removed idempotent survives");
      B.idempotent_index[out.vertex_map[os] - 1] = k;
    }
  }
  B.mult_table.assign(B.dim(),
                      std::vector<std::vector<std::pair<std::size_t, Scalar>>>(B.dim()));
  for (std::size_t i = 0; i < B.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j) {
      Vec prod = proj * A.mult(A.basis_vec(idx[i]), A.basis_vec(idx[j]));
      for (std::size_t k = 0; k < B.dim(); ++k)
        if (!prod[k].is_zero()) B.mult_table[i][j].emplace_back(k, prod[k]);
    }
  recompute_layers(B);
  return out;
}

}  // namespace

bool is_quasi_hereditary(const FinDimAlgebra& A, const std::vector<int>& order) {
  if (order.empty()) return true;
  int t = order.back();
  // block (t,t) must be one-dimensional (no loops at the top vertex)
  std::size_t loop_dim = 0;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.basis_src[i] == t && A.basis_tgt[i] == t) ++loop_dim;
  if (loop_dim != 1) return false;
  // trace ideal A e_t A must be projective as a left module
  std::vector<Vec> cols;
  for (std::size_t p = 0; p < A.dim(); ++p) {
    if (A.basis_tgt[p] != t) continue;
    for (std::size_t q = 0; q < A.dim(); ++q) {
      if (A.basis_src[q] != t) continue;
      cols.push_back(A.mult(A.basis_vec(q), A.basis_vec(p)));
    }
  }
  Mat I = cols.empty() ? Mat(A.dim(), 0, A.field)
                       : image_basis(Mat::from_columns(cols, A.dim(), A.field));
  // the regular module
  LeftModule reg;
  reg.A = &A;
  reg.dim = A.dim();
  reg.action.resize(A.dim(), Mat(A.dim(), A.dim(), A.field));
  for (std::size_t b = 0; b < A.dim(); ++b)
    reg.action[b] = A.left_mult_matrix(A.basis_vec(b));
  Submodule tr = submodule_on(reg, I);
  Cover cov = projective_cover(tr.mod);
  if (cov.P.dim != tr.mod.dim) return false;  // cover strictly bigger: not projective
  for (int v : cov.vertices)
    if (v != t) return false;  // heredity trace must be generated at the top vertex
  if (order.size() == 1) return true;
  AlgebraQuotient q = quotient_algebra(A, I, t);
  std::vector<int> rest;
  for (std::size_t k = 0; k + 1 < order.size(); ++k)
    rest.push_back(q.vertex_map[order[k]]);
  return is_quasi_hereditary(q.B, rest);
}

}  // namespace forge
