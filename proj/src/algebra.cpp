#include "forge/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forge {

Vec FinDimAlgebra::basis_vec(std::size_t i) const {
  Vec v = zero();
  v[i] = field.one();
  return v;
}

Vec FinDimAlgebra::unit() const {
  Vec v = zero();
  for (auto i : idempotent_index) v[i] = field.one();
  return v;
}

Vec FinDimAlgebra::mult(const Vec& a, const Vec& b) const {
  Vec r = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      for (const auto& [k, c] : mult_table[i][j]) r[k] += a[i] * b[j] * c;
    }
  }
  return r;
}

Mat FinDimAlgebra::left_mult_matrix(const Vec& a) const {
  Mat m(dim(), dim(), field);
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = mult(a, basis_vec(j));
    m.set_column(j, col);
  }
  return m;
}

Mat FinDimAlgebra::right_mult_matrix(const Vec& a) const {
  Mat m(dim(), dim(), field);
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = mult(basis_vec(j), a);
    m.set_column(j, col);
  }
  return m;
}

std::vector<std::size_t> FinDimAlgebra::radical_indices() const {
  return radical_power_indices(1);
}

std::vector<std::size_t> FinDimAlgebra::radical_power_indices(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_layer[i] >= k) out.push_back(i);
  return out;
}

int FinDimAlgebra::max_layer() const {
  int m = 0;
  for (int l : basis_layer) m = std::max(m, l);
  return m;
}

Vec FinDimAlgebra::path_image(const Path& p) const {
  if (!presented) throw std::logic_error("path_image: algebra not presented");
  if (p.length() >= static_cast<std::size_t>(presented->pres.nilpotency)) return zero();
  auto it = presented->path_index.find(p);
  if (it == presented->path_index.end())
    throw std::invalid_argument("path_image: unknown path");
  return presented->reduction[it->second];
}

Vec FinDimAlgebra::expr_image(const PathExpr& e) const {
  Vec v = zero();
  for (const auto& [p, c] : e) {
    if (p.length() >= static_cast<std::size_t>(presented->pres.nilpotency)) continue;
    Vec w = path_image(p);
    for (std::size_t i = 0; i < dim(); ++i) v[i] += c * w[i];
  }
  return v;
}

std::string FinDimAlgebra::element_str(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!v[i].is_one()) os << v[i].str() << " * ";
    os << basis_names[i];
  }
  if (first) os << "0";
  return os.str();
}

void FinDimAlgebra::check_axioms() const {
  // idempotents orthogonal, complete
  for (int v = 1; v <= n_vertices; ++v)
    for (int w = 1; w <= n_vertices; ++w) {
      Vec p = mult(idempotent(v), idempotent(w));
      Vec expect = (v == w) ? idempotent(v) : zero();
      if (p != expect) throw std::logic_error("check_axioms: idempotents not orthogonal");
    }
  Vec one = unit();
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec b = basis_vec(i);
    if (mult(one, b) != b || mult(b, one) != b)
      throw std::logic_error("check_axioms: unit law fails");
    // block compatibility
    if (mult(idempotent(basis_tgt[i]), b) != b || mult(b, idempotent(basis_src[i])) != b)
      throw std::logic_error("check_axioms: bigrade mismatch");
  }
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k) {
        Vec ab_c = mult(mult(basis_vec(i), basis_vec(j)), basis_vec(k));
        Vec a_bc = mult(basis_vec(i), mult(basis_vec(j), basis_vec(k)));
        if (ab_c != a_bc) throw std::logic_error("check_axioms: associativity fails");
      }
}

namespace {

PathExpr truncate_expr(const PathExpr& e, std::size_t max_len) {
  PathExpr r;
  for (const auto& [p, c] : e)
    if (p.length() <= max_len) r.emplace(p, c);
  return r;
}

// Incremental row-reduced spanning set of path-expressions with a fixed
// coordinate order; returns reduced vectors keyed by pivot path.
struct IncrementalSpan {
  const std::vector<Path>* paths;
  std::map<Path, std::size_t>* index;
  std::map<std::size_t, Vec> rows;  // pivot coordinate -> reduced row vector
  const Field* field;

  // Reduces v in place against the stored rows; returns pivot coord or npos.
  std::size_t reduce(Vec& v) const {
    for (const auto& [piv, row] : rows) {
      if (v[piv].is_zero()) continue;
      Scalar f = v[piv];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) return j;
    return static_cast<std::size_t>(-1);
  }

  // Inserts v if independent; returns true if the span grew.
  bool insert(Vec v) {
    std::size_t piv = reduce(v);
    if (piv == static_cast<std::size_t>(-1)) return false;
    Scalar inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    // eliminate the new pivot from existing rows
    for (auto& [p, row] : rows) {
      if (row[piv].is_zero()) continue;
      Scalar f = row[piv];
      for (std::size_t j = 0; j < v.size(); ++j) row[j] -= f * v[j];
    }
    rows.emplace(piv, std::move(v));
    return true;
  }
};

}  // namespace

FinDimAlgebra build_algebra(const Presentation& pres) {
  const Field& F = pres.field;
  const Quiver& Q = pres.quiver;
  const int N = pres.nilpotency;
  if (N < 2) throw std::invalid_argument("build_algebra: nilpotency bound must be >= 2");

  // Admissibility checks on relations.
  for (const auto& r : pres.relations) {
    if (r.empty()) continue;
    int rs = r.begin()->first.src, rt = r.begin()->first.tgt;
    for (const auto& [p, c] : r) {
      (void)c;
      if (p.length() < 2)
        throw std::invalid_argument("build_algebra: relation not in the square of the arrow ideal");
      if (p.src != rs || p.tgt != rt)
        throw std::invalid_argument("build_algebra: relation mixes endpoints");
    }
  }

  // Path coordinates up to length N (needed for the nilpotency verification).
  std::vector<Path> paths_N = enumerate_paths(Q, N);
  std::map<Path, std::size_t> index_N;
  for (std::size_t i = 0; i < paths_N.size(); ++i) index_N.emplace(paths_N[i], i);

  auto to_vec = [&](const PathExpr& e) {
    Vec v(paths_N.size(), F.zero());
    for (const auto& [p, c] : e) v[index_N.at(p)] = c;
    return v;
  };

  // Closure of the relations under arrow multiplication, truncated at length N.
  IncrementalSpan span{&paths_N, &index_N, {}, &F};
  std::vector<PathExpr> queue;
  for (const auto& r : pres.relations) {
    PathExpr t = truncate_expr(r, N);
    if (!t.empty()) queue.push_back(t);
  }
  std::vector<PathExpr> stored;
  while (!queue.empty()) {
    PathExpr e = queue.back();
    queue.pop_back();
    Vec v = to_vec(e);
    std::size_t piv = span.reduce(v);
    if (piv == static_cast<std::size_t>(-1)) continue;
    // rebuild the reduced expression from v before normalizing, to keep the
    // closure exact on the expression level
    Scalar inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    PathExpr red;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) red.emplace(paths_N[j], v[j]);
    span.insert(to_vec(red));
    stored.push_back(red);
    for (const auto& a : Q.arrows) {
      PathExpr ap, pa;
      Path ar{a.src, a.tgt, {a.id}};
      for (const auto& [p, c] : red) {
        if (p.tgt == a.src && p.length() + 1 <= static_cast<std::size_t>(N))
          add_term(ap, compose(ar, p), c);
        if (a.tgt == p.src && p.length() + 1 <= static_cast<std::size_t>(N))
          add_term(pa, compose(p, ar), c);
      }
      if (!ap.empty()) queue.push_back(ap);
      if (!pa.empty()) queue.push_back(pa);
    }
  }

  // Nilpotency verification: every length-N path must lie in the closure span.
  for (const auto& p : paths_N) {
    if (p.length() != static_cast<std::size_t>(N)) continue;
    Vec v = to_vec(PathExpr{{p, F.one()}});
    if (span.reduce(v) != static_cast<std::size_t>(-1))
      throw std::runtime_error("build_algebra: nilpotency bound violated (path " +
                               path_str(Q, p) + " does not vanish)");
  }

  // Quotient basis on paths of length < N: drop length-N coordinates.
  std::vector<Path> paths;  // length <= N-1
  for (const auto& p : paths_N)
    if (p.length() < static_cast<std::size_t>(N)) paths.push_back(p);
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i], i);

  IncrementalSpan span_low{&paths, &index, {}, &F};
  std::vector<Vec> low_rows;
  for (const auto& [piv, row] : span.rows) {
    Vec v(paths.size(), F.zero());
    bool nonzero = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      if (paths_N[j].length() < static_cast<std::size_t>(N)) {
        v[index.at(paths_N[j])] = row[j];
        nonzero = true;
      }
    }
    if (nonzero) span_low.insert(std::move(v));
  }

  std::vector<bool> is_pivot(paths.size(), false);
  for (const auto& [piv, row] : span_low.rows) is_pivot[piv] = true;

  FinDimAlgebra A;
  A.field = F;
  A.n_vertices = Q.n_vertices;
  std::vector<std::size_t> coord_of_basis;  // path coordinate of each basis elt
  std::vector<std::size_t> basis_of_coord(paths.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (is_pivot[i]) continue;
    basis_of_coord[i] = A.basis_names.size();
    coord_of_basis.push_back(i);
    A.basis_names.push_back(path_str(Q, paths[i]));
    A.basis_src.push_back(paths[i].src);
    A.basis_tgt.push_back(paths[i].tgt);
    A.basis_layer.push_back(static_cast<int>(paths[i].length()));
  }
  A.idempotent_index.resize(Q.n_vertices);
  for (int v = 1; v <= Q.n_vertices; ++v) {
    auto it = index.find(idempotent_path(v));
    A.idempotent_index[v - 1] = basis_of_coord[it->second];
  }

  // Reduction table: for every path of length < N, its basis coordinates.
  auto pd = std::make_shared<PresentedData>();
  pd->pres = pres;
  pd->paths = paths;
  pd->path_index = index;
  pd->reduction.resize(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    Vec coords(A.dim(), F.zero());
    if (!is_pivot[i]) {
      coords[basis_of_coord[i]] = F.one();
    } else {
      const Vec& row = span_low.rows.at(i);
      // row = e_i + sum_{j non-pivot} row[j] e_j  =>  class(e_i) = -sum row[j] e_j
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (j == i || row[j].is_zero()) continue;
        if (is_pivot[j])
          throw std::logic_error("build_algebra: reduction row not fully reduced");
        coords[basis_of_coord[j]] = -row[j];
      }
    }
    pd->reduction[i] = std::move(coords);
  }
  {
    std::vector<Vec> cols;
    for (const auto& [piv, row] : span_low.rows) cols.push_back(row);
    pd->ideal_space = Mat::from_columns(cols, paths.size(), F);
  }

  // Multiplication table.
  A.mult_table.assign(A.dim(), std::vector<std::vector<std::pair<std::size_t, Scalar>>>(
                                   A.dim()));
  for (std::size_t bi = 0; bi < A.dim(); ++bi)
    for (std::size_t bj = 0; bj < A.dim(); ++bj) {
      const Path& p = paths[coord_of_basis[bi]];
      const Path& q = paths[coord_of_basis[bj]];
      if (q.tgt != p.src) continue;
      if (p.length() + q.length() >= static_cast<std::size_t>(N)) continue;
      Path pq = compose(p, q);
      const Vec& red = pd->reduction[index.at(pq)];
      for (std::size_t k = 0; k < A.dim(); ++k)
        if (!red[k].is_zero()) A.mult_table[bi][bj].emplace_back(k, red[k]);
    }

  A.presented = pd;
  return A;
}

std::size_t block_dim_oracle(const Presentation& pres, int j, int i) {
  const Field& F = pres.field;
  const Quiver& Q = pres.quiver;
  const std::size_t N = static_cast<std::size_t>(pres.nilpotency);
  std::vector<Path> all = enumerate_paths(Q, N - 1);
  std::vector<Path> block;
  for (const auto& p : all)
    if (p.src == i && p.tgt == j) block.push_back(p);
  std::map<Path, std::size_t> bidx;
  for (std::size_t k = 0; k < block.size(); ++k) bidx.emplace(block[k], k);

  std::vector<Vec> rows;
  for (const auto& r : pres.relations) {
    if (r.empty()) continue;
    int rs = r.begin()->first.src, rt = r.begin()->first.tgt;
    for (const auto& p : all) {
      if (p.src != rt || p.tgt != j) continue;
      for (const auto& q : all) {
        if (q.src != i || q.tgt != rs) continue;
        Vec v(block.size(), F.zero());
        bool nonzero = false;
        for (const auto& [m, c] : r) {
          Path full = compose(compose(p, m), q);
          if (full.length() > N - 1) continue;
          v[bidx.at(full)] += c;
          nonzero = true;
        }
        if (nonzero) rows.push_back(v);
      }
    }
  }
  std::size_t rk = rows.empty()
                       ? 0
                       : rank(Mat::from_columns(rows, block.size(), F));
  return block.size() - rk;
}

}  // namespace forge
