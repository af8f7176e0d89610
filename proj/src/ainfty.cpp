#include "forge/ainfty.hpp"

#include "forge/tensor.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace forge {

std::string tuple_str(const DegTuple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

int tuple_sum(const DegTuple& t) {
  int s = 0;
  for (int d : t) s += d;
  return s;
}

bool tuple_dims(const std::map<int, GradedPiece>& pieces, const DegTuple& degs,
                std::vector<std::size_t>& dims) {
  dims.clear();
  for (int d : degs) {
    auto it = pieces.find(d);
    if (it == pieces.end() || it->second.dim() == 0) return false;
    dims.push_back(it->second.dim());
  }
  return true;
}

std::vector<int> piece_degrees(const std::map<int, GradedPiece>& pieces) {
  std::vector<int> out;
  for (const auto& [d, p] : pieces)
    if (p.dim() > 0) out.push_back(d);
  return out;
}

void enumerate_tuples(const std::vector<int>& degrees, int n,
                      const std::function<void(const DegTuple&)>& fn) {
  DegTuple t(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      fn(t);
      return;
    }
    for (int d : degrees) {
      t[static_cast<std::size_t>(k)] = d;
      rec(k + 1);
    }
  };
  rec(0);
}

void enumerate_compositions(int n, int parts,
                            const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(static_cast<std::size_t>(parts));
  std::function<void(int, int)> rec = [&](int k, int rest) {
    if (k == parts) {
      if (rest == 0) fn(c);
      return;
    }
    for (int j = 1; j + (parts - 1 - k) <= rest; ++j) {
      c[static_cast<std::size_t>(k)] = j;
      rec(k + 1, rest - j);
    }
  };
  rec(0, n);
}

namespace {

std::size_t table_cols(const std::map<int, GradedPiece>& pieces, const DegTuple& degs) {
  std::vector<std::size_t> dims;
  if (!tuple_dims(pieces, degs, dims)) return 0;
  return word_space_dim(dims);
}

}  // namespace

std::size_t AInftyAlgebra::dim(int d) const {
  auto it = pieces.find(d);
  return it == pieces.end() ? 0 : it->second.dim();
}

const GradedPiece* AInftyAlgebra::piece(int d) const {
  auto it = pieces.find(d);
  return it == pieces.end() ? nullptr : &it->second;
}

int AInftyAlgebra::target_degree(int n, const DegTuple& degs) const {
  return tuple_sum(degs) + 2 - n;
}

Mat AInftyAlgebra::table(int n, const DegTuple& degs) const {
  const std::size_t rows = dim(target_degree(n, degs));
  const std::size_t cols = table_cols(pieces, degs);
  if (n >= 1 && n < static_cast<int>(m.size())) {
    auto it = m[static_cast<std::size_t>(n)].find(degs);
    if (it != m[static_cast<std::size_t>(n)].end()) return it->second;
  }
  return Mat(rows, cols, field);
}

void AInftyAlgebra::set_table(int n, const DegTuple& degs, Mat mat) {
  if (n < 1) throw std::invalid_argument("set_table: arity must be >= 1");
  if (static_cast<int>(degs.size()) != n)
    throw std::invalid_argument("set_table: tuple length != arity");
  const std::size_t rows = dim(target_degree(n, degs));
  const std::size_t cols = table_cols(pieces, degs);
  if (mat.rows() != rows || mat.cols() != cols)
    throw std::invalid_argument("set_table: shape mismatch at arity " +
                                std::to_string(n) + " degrees " + tuple_str(degs));
  if (n > arity_bound) arity_bound = n;
  if (static_cast<std::size_t>(arity_bound + 1) > m.size())
    m.resize(static_cast<std::size_t>(arity_bound + 1));
  if (mat.is_zero())
    m[static_cast<std::size_t>(n)].erase(degs);
  else
    m[static_cast<std::size_t>(n)][degs] = std::move(mat);
}

void AInftyAlgebra::tidy() {
  for (auto& tbl : m)
    for (auto it = tbl.begin(); it != tbl.end();)
      it = (it->second.is_zero() || it->second.rows() == 0 || it->second.cols() == 0)
               ? tbl.erase(it)
               : std::next(it);
}

std::size_t AInftyCoalgebra::dim(int d) const {
  auto it = pieces.find(d);
  return it == pieces.end() ? 0 : it->second.dim();
}

const GradedPiece* AInftyCoalgebra::piece(int d) const {
  auto it = pieces.find(d);
  return it == pieces.end() ? nullptr : &it->second;
}

int AInftyCoalgebra::source_degree(int n, const DegTuple& degs) const {
  return tuple_sum(degs) + n - 2;
}

Mat AInftyCoalgebra::table(int n, const DegTuple& degs) const {
  const std::size_t rows = table_cols(pieces, degs);
  const std::size_t cols = dim(source_degree(n, degs));
  if (n >= 1 && n < static_cast<int>(mu.size())) {
    auto it = mu[static_cast<std::size_t>(n)].find(degs);
    if (it != mu[static_cast<std::size_t>(n)].end()) return it->second;
  }
  return Mat(rows, cols, field);
}

void AInftyCoalgebra::set_table(int n, const DegTuple& degs, Mat mat) {
  if (n < 1) throw std::invalid_argument("coalgebra set_table: arity must be >= 1");
  if (static_cast<int>(degs.size()) != n)
    throw std::invalid_argument("coalgebra set_table: tuple length != arity");
  const std::size_t rows = table_cols(pieces, degs);
  const std::size_t cols = dim(source_degree(n, degs));
  if (mat.rows() != rows || mat.cols() != cols)
    throw std::invalid_argument("coalgebra set_table: shape mismatch at arity " +
                                std::to_string(n) + " degrees " + tuple_str(degs));
  if (n > arity_bound) arity_bound = n;
  if (static_cast<std::size_t>(arity_bound + 1) > mu.size())
    mu.resize(static_cast<std::size_t>(arity_bound + 1));
  if (mat.is_zero())
    mu[static_cast<std::size_t>(n)].erase(degs);
  else
    mu[static_cast<std::size_t>(n)][degs] = std::move(mat);
}

void AInftyCoalgebra::tidy() {
  for (auto& tbl : mu)
    for (auto it = tbl.begin(); it != tbl.end();)
      it = (it->second.is_zero() || it->second.rows() == 0 || it->second.cols() == 0)
               ? tbl.erase(it)
               : std::next(it);
}

CheckReport check_stasheff(const AInftyAlgebra& A, int max_arity) {
  const auto degrees = piece_degrees(A.pieces);
  for (int n = 1; n <= max_arity; ++n) {
    bool bad = false;
    CheckReport rep;
    enumerate_tuples(degrees, n, [&](const DegTuple& degs) {
      if (bad) return;
      std::vector<std::size_t> dims;
      if (!tuple_dims(A.pieces, degs, dims)) return;
      const std::size_t W = word_space_dim(dims);
      const int out_deg = tuple_sum(degs) + 3 - n;
      const std::size_t out_dim = A.dim(out_deg);
      if (out_dim == 0) return;
      Mat R(out_dim, W, A.field);
      for (int r = 0; r + 1 <= n; ++r)
        for (int s = 1; r + s <= n; ++s) {
          const int t = n - r - s;
          DegTuple inner(degs.begin() + r, degs.begin() + r + s);
          const int dprime = tuple_sum(inner) + 2 - s;
          if (A.dim(dprime) == 0) continue;
          Mat Min = A.table(s, inner);
          if (Min.rows() == 0 || Min.cols() == 0 || Min.is_zero()) continue;
          DegTuple outer(degs.begin(), degs.begin() + r);
          outer.push_back(dprime);
          outer.insert(outer.end(), degs.begin() + r + s, degs.end());
          Mat Mout = A.table(r + 1 + t, outer);
          if (Mout.rows() == 0 || Mout.is_zero()) continue;
          std::size_t pre = 1, post = 1;
          for (int i = 0; i < r; ++i) pre *= dims[static_cast<std::size_t>(i)];
          for (int i = r + s; i < n; ++i) post *= dims[static_cast<std::size_t>(i)];
          long long koszul = 0;
          for (int i = 0; i < r; ++i) koszul += (2 - s) * degs[static_cast<std::size_t>(i)];
          const Scalar sgn = sign_of(A.field, r + static_cast<long long>(s) * t + koszul);
          Mat exp = kron({Mat::identity(pre, A.field), Min, Mat::identity(post, A.field)},
                         A.field);
          R = R + Mout * exp * sgn;
        }
      if (!R.is_zero()) {
        bad = true;
        rep.ok = false;
        rep.detail = "Stasheff identity fails at arity " + std::to_string(n) +
                     ", input degrees " + tuple_str(degs);
      }
    });
    if (bad) return rep;
  }
  return {};
}

CheckReport check_costasheff(const AInftyCoalgebra& C, int max_arity) {
  const auto degrees = piece_degrees(C.pieces);
  for (int n = 1; n <= max_arity; ++n) {
    bool bad = false;
    CheckReport rep;
    enumerate_tuples(degrees, n, [&](const DegTuple& degs) {
      if (bad) return;
      std::vector<std::size_t> dims;
      if (!tuple_dims(C.pieces, degs, dims)) return;
      const std::size_t W = word_space_dim(dims);
      const int src_deg = tuple_sum(degs) + n - 3;
      const std::size_t src_dim = C.dim(src_deg);
      if (src_dim == 0) return;
      Mat R(W, src_dim, C.field);
      for (int r = 0; r + 1 <= n; ++r)
        for (int s = 1; r + s <= n; ++s) {
          const int t = n - r - s;
          DegTuple inner(degs.begin() + r, degs.begin() + r + s);
          const int dprime = tuple_sum(inner) + 2 - s;
          if (C.dim(dprime) == 0) continue;
          DegTuple mid(degs.begin(), degs.begin() + r);
          mid.push_back(dprime);
          mid.insert(mid.end(), degs.begin() + r + s, degs.end());
          Mat M1 = C.table(r + 1 + t, mid);
          if (M1.rows() == 0 || M1.is_zero()) continue;
          Mat M2 = C.table(s, inner);
          if (M2.rows() == 0 || M2.is_zero()) continue;
          std::size_t pre = 1, post = 1;
          for (int i = 0; i < r; ++i) pre *= dims[static_cast<std::size_t>(i)];
          for (int i = r + s; i < n; ++i) post *= dims[static_cast<std::size_t>(i)];
          long long koszul = 0;
          for (int i = 0; i < r; ++i) koszul += (2 - s) * degs[static_cast<std::size_t>(i)];
          const Scalar sgn =
              sign_of(C.field, static_cast<long long>(r) * s + t + koszul);
          Mat exp = kron({Mat::identity(pre, C.field), M2, Mat::identity(post, C.field)},
                         C.field);
          R = R + exp * M1 * sgn;
        }
      if (!R.is_zero()) {
        bad = true;
        rep.ok = false;
        rep.detail = "coalgebra Stasheff identity fails at arity " + std::to_string(n) +
                     ", output degrees " + tuple_str(degs);
      }
    });
    if (bad) return rep;
  }
  return {};
}

AInftyCoalgebra dualize(const AInftyAlgebra& A) {
  AInftyCoalgebra C;
  C.field = A.field;
  C.n_vertices = A.n_vertices;
  C.arity_bound = A.arity_bound;
  for (const auto& [d, p] : A.pieces) C.pieces[-d] = p;
  C.mu.resize(A.m.size());
  for (std::size_t n = 1; n < A.m.size(); ++n)
    for (const auto& [edegs, M] : A.m[n]) {
      DegTuple gam(edegs.size());
      for (std::size_t i = 0; i < edegs.size(); ++i) gam[i] = -edegs[i];
      long long e = static_cast<long long>(n) * tuple_sum(gam);
      for (std::size_t i = 0; i < gam.size(); ++i)
        for (std::size_t j = i + 1; j < gam.size(); ++j)
          e += static_cast<long long>(gam[i]) * gam[j];
      C.set_table(static_cast<int>(n), gam, M.transpose() * sign_of(A.field, e));
    }
  C.tidy();
  return C;
}

AInftyAlgebra dualize_alg(const AInftyCoalgebra& C) {
  AInftyAlgebra A;
  A.field = C.field;
  A.n_vertices = C.n_vertices;
  A.arity_bound = C.arity_bound;
  for (const auto& [d, p] : C.pieces) A.pieces[-d] = p;
  A.m.resize(C.mu.size());
  for (std::size_t n = 1; n < C.mu.size(); ++n)
    for (const auto& [gam, M] : C.mu[n]) {
      DegTuple edegs(gam.size());
      for (std::size_t i = 0; i < gam.size(); ++i) edegs[i] = -gam[i];
      long long e = static_cast<long long>(n) * tuple_sum(gam);
      for (std::size_t i = 0; i < gam.size(); ++i)
        for (std::size_t j = i + 1; j < gam.size(); ++j)
          e += static_cast<long long>(gam[i]) * gam[j];
      A.set_table(static_cast<int>(n), edegs, M.transpose() * sign_of(C.field, e));
    }
  A.tidy();
  return A;
}

AInftyAlgebra transport_structure(const AInftyAlgebra& A, const std::map<int, Mat>& g,
                                  const std::map<int, GradedPiece>* relabel) {
  AInftyAlgebra B = A;
  if (relabel) B.pieces = *relabel;
  std::map<int, Mat> ginv;
  for (const auto& [d, p] : A.pieces) {
    if (p.dim() == 0) continue;
    auto it = g.find(d);
    if (it == g.end() || it->second.rows() != p.dim() || it->second.cols() != p.dim())
      throw std::invalid_argument("transport_structure: missing or misshapen map at degree " +
                                  std::to_string(d));
    ginv[d] = inverse(it->second);
  }
  for (std::size_t n = 1; n < B.m.size(); ++n) {
    std::map<DegTuple, Mat> out;
    for (const auto& [degs, M] : A.m[n]) {
      const int td = A.target_degree(static_cast<int>(n), degs);
      if (A.dim(td) == 0) continue;
      std::vector<Mat> factors;
      for (int d : degs) factors.push_back(ginv.at(d));
      Mat Mp = g.at(td) * M * kron(factors, A.field);
      if (!Mp.is_zero()) out[degs] = std::move(Mp);
    }
    B.m[n] = std::move(out);
  }
  return B;
}

namespace {

using SlotKey = std::vector<std::pair<int, std::size_t>>;

bool slots_composable(const std::map<int, GradedPiece>& pieces, const SlotKey& slots) {
  for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
    const auto& a = pieces.at(slots[i].first).bigrade[slots[i].second];
    const auto& b = pieces.at(slots[i + 1].first).bigrade[slots[i + 1].second];
    if (a.second != b.first) return false;
  }
  return true;
}

template <typename WordT>
void enumerate_words(const std::map<int, GradedPiece>& pieces, int max_words,
                     int shift_delta, std::vector<WordT>& words,
                     std::map<SlotKey, std::size_t>& index) {
  const auto degrees = piece_degrees(pieces);
  SlotKey cur;
  std::function<void()> rec = [&]() {
    if (!cur.empty()) {
      WordT w;
      w.slots = cur;
      w.degree = 0;
      for (const auto& [d, i] : cur) {
        (void)i;
        w.degree += d + shift_delta;
      }
      index[cur] = words.size();
      words.push_back(w);
    }
    if (static_cast<int>(cur.size()) == max_words) return;
    for (int d : degrees)
      for (std::size_t i = 0; i < pieces.at(d).dim(); ++i) {
        if (!cur.empty()) {
          const auto& prev = pieces.at(cur.back().first).bigrade[cur.back().second];
          const auto& next = pieces.at(d).bigrade[i];
          if (prev.second != next.first) continue;
        }
        cur.emplace_back(d, i);
        rec();
        cur.pop_back();
      }
  };
  rec();
}

}  // namespace

BarComplex bar_construction(const AInftyAlgebra& A, int max_words) {
  BarComplex B;
  B.field = A.field;
  std::map<SlotKey, std::size_t> index;
  enumerate_words(A.pieces, max_words, -1, B.words, index);
  for (std::size_t w = 0; w < B.words.size(); ++w)
    B.by_degree[B.words[w].degree].push_back(w);
  const std::size_t N = B.words.size();
  B.d = Mat(N, N, A.field);
  for (std::size_t w = 0; w < N; ++w) {
    const auto& slots = B.words[w].slots;
    const int k = static_cast<int>(slots.size());
    for (int r = 0; r < k; ++r)
      for (int s = 1; r + s <= k && s <= A.arity_bound; ++s) {
        DegTuple inner;
        std::vector<std::size_t> inner_dims, inner_idx;
        for (int i = r; i < r + s; ++i) {
          inner.push_back(slots[static_cast<std::size_t>(i)].first);
          inner_dims.push_back(A.dim(slots[static_cast<std::size_t>(i)].first));
          inner_idx.push_back(slots[static_cast<std::size_t>(i)].second);
        }
        const int dprime = tuple_sum(inner) + 2 - s;
        if (A.dim(dprime) == 0) continue;
        Mat M = A.table(s, inner);
        if (M.is_zero()) continue;
        Vec v = M.column(word_index(inner_dims, inner_idx));
        long long e = 0;
        for (int i = 0; i < r; ++i) e += slots[static_cast<std::size_t>(i)].first - 1;
        std::vector<int> shifted;
        for (int d : inner) shifted.push_back(d - 1);
        e += slotwise_shift_exponent(shifted);
        e += shift_collation_exponent(s);
        const Scalar sgn = sign_of(A.field, e);
        for (std::size_t b = 0; b < v.size(); ++b) {
          if (v[b].is_zero()) continue;
          SlotKey nw(slots.begin(), slots.begin() + r);
          nw.emplace_back(dprime, b);
          nw.insert(nw.end(), slots.begin() + r + s, slots.end());
          auto it = index.find(nw);
          if (it == index.end()) {
            if (!slots_composable(A.pieces, nw))
              throw std::logic_error("bar_construction: differential produced a "
                                     "non-composable word");
            throw std::logic_error("bar_construction: differential escaped the word basis");
          }
          B.d.at(it->second, w) += sgn * v[b];
        }
      }
  }
  return B;
}

CobarComplex cobar_construction(const AInftyCoalgebra& C, int max_words) {
  CobarComplex O;
  O.field = C.field;
  std::map<SlotKey, std::size_t> index;
  enumerate_words(C.pieces, max_words, +1, O.words, index);
  const std::size_t N = O.words.size();
  O.d = Mat(N, N, C.field);
  O.window_max_len = std::max(0, max_words - 2 * (C.arity_bound - 1));
  for (std::size_t w = 0; w < N; ++w) {
    const auto& slots = O.words[w].slots;
    const int k = static_cast<int>(slots.size());
    for (int pos = 0; pos < k; ++pos) {
      const int gdeg = slots[static_cast<std::size_t>(pos)].first;
      const std::size_t gidx = slots[static_cast<std::size_t>(pos)].second;
      long long leib = 0;
      for (int i = 0; i < pos; ++i) leib += slots[static_cast<std::size_t>(i)].first + 1;
      for (int n = 1; n <= C.arity_bound; ++n) {
        if (k + n - 1 > max_words) continue;  // truncated away
        // all output tuples of length n whose source degree is gdeg
        if (static_cast<std::size_t>(n) >= C.mu.size()) continue;
        for (const auto& [gam, M] : C.mu[static_cast<std::size_t>(n)]) {
          if (C.source_degree(n, gam) != gdeg) continue;
          std::vector<std::size_t> gdims;
          if (!tuple_dims(C.pieces, gam, gdims)) continue;
          Vec col = M.column(gidx);
          long long e = leib + shift_collation_exponent(n);
          const std::vector<int> unshifted(gam.begin(), gam.end());
          for (std::size_t ww = 0; ww < col.size(); ++ww) {
            if (col[ww].is_zero()) continue;
            const auto widx = word_unindex(gdims, ww);
            SlotKey nw(slots.begin(), slots.begin() + pos);
            for (int i = 0; i < n; ++i)
              nw.emplace_back(gam[static_cast<std::size_t>(i)],
                              widx[static_cast<std::size_t>(i)]);
            nw.insert(nw.end(), slots.begin() + pos + 1, slots.end());
            auto it = index.find(nw);
            if (it == index.end()) {
              if (!slots_composable(C.pieces, nw))
                throw std::logic_error("cobar_construction: differential produced a "
                                       "non-composable word");
              throw std::logic_error("cobar_construction: differential escaped the "
                                     "word basis");
            }
            const Scalar sgn = sign_of(C.field, e + slotwise_shift_exponent(unshifted));
            O.d.at(it->second, w) += sgn * col[ww];
          }
        }
      }
    }
  }
  return O;
}

Mat MorphismAInfty::component(int n, const DegTuple& degs) const {
  const std::size_t rows = target.dim(tuple_sum(degs) + 1 - n);
  const std::size_t cols = table_cols(source.pieces, degs);
  if (n >= 1 && n < static_cast<int>(f.size())) {
    auto it = f[static_cast<std::size_t>(n)].find(degs);
    if (it != f[static_cast<std::size_t>(n)].end()) return it->second;
  }
  return Mat(rows, cols, source.field);
}

CheckReport check_morphism(const MorphismAInfty& F, int max_arity) {
  const AInftyAlgebra& S = F.source;
  const AInftyAlgebra& T = F.target;
  const auto degrees = piece_degrees(S.pieces);
  for (int n = 1; n <= max_arity; ++n) {
    bool bad = false;
    CheckReport rep;
    enumerate_tuples(degrees, n, [&](const DegTuple& degs) {
      if (bad) return;
      std::vector<std::size_t> dims;
      if (!tuple_dims(S.pieces, degs, dims)) return;
      const std::size_t W = word_space_dim(dims);
      const int out_deg = tuple_sum(degs) + 2 - n;
      const std::size_t out_dim = T.dim(out_deg);
      if (out_dim == 0 && W == 0) return;
      Mat L(out_dim, W, S.field);
      for (int r = 0; r < n; ++r)
        for (int s = 1; r + s <= n; ++s) {
          const int t = n - r - s;
          DegTuple inner(degs.begin() + r, degs.begin() + r + s);
          const int dprime = tuple_sum(inner) + 2 - s;
          if (S.dim(dprime) == 0) continue;
          Mat Min = S.table(s, inner);
          if (Min.is_zero()) continue;
          DegTuple outer(degs.begin(), degs.begin() + r);
          outer.push_back(dprime);
          outer.insert(outer.end(), degs.begin() + r + s, degs.end());
          Mat Fout = F.component(r + 1 + t, outer);
          if (Fout.rows() == 0 || Fout.is_zero()) continue;
          std::size_t pre = 1, post = 1;
          for (int i = 0; i < r; ++i) pre *= dims[static_cast<std::size_t>(i)];
          for (int i = r + s; i < n; ++i) post *= dims[static_cast<std::size_t>(i)];
          long long koszul = 0;
          for (int i = 0; i < r; ++i) koszul += (2 - s) * degs[static_cast<std::size_t>(i)];
          const Scalar sgn = sign_of(S.field, r + static_cast<long long>(s) * t + koszul);
          L = L + Fout *
                      kron({Mat::identity(pre, S.field), Min, Mat::identity(post, S.field)},
                           S.field) *
                      sgn;
        }
      Mat R(out_dim, W, S.field);
      for (int l = 1; l <= n; ++l) {
        enumerate_compositions(n, l, [&](const std::vector<int>& parts) {
          long long pref = 0;
          for (int i = 0; i < l - 1; ++i)
            pref += static_cast<long long>(l - 1 - i) * (parts[static_cast<std::size_t>(i)] - 1);
          std::vector<Mat> blocks;
          DegTuple odegs;
          long long koszul = 0;
          int pos = 0;
          long long before = 0;
          bool dead = false;
          for (int bk = 0; bk < l && !dead; ++bk) {
            const int j = parts[static_cast<std::size_t>(bk)];
            DegTuple bdegs(degs.begin() + pos, degs.begin() + pos + j);
            const int S_k = tuple_sum(bdegs);
            const int o_k = S_k + 1 - j;
            if (T.dim(o_k) == 0) {
              dead = true;
              break;
            }
            if (bk > 0) koszul += static_cast<long long>(1 - j) * before;
            Mat Fb = F.component(j, bdegs);
            if (Fb.rows() == 0) {
              dead = true;
              break;
            }
            blocks.push_back(Fb);
            odegs.push_back(o_k);
            before += S_k;
            pos += j;
          }
          if (dead) return;
          Mat Mp = T.table(l, odegs);
          if (Mp.rows() == 0 || Mp.is_zero()) return;
          Mat term = Mp * kron(blocks, S.field);
          R = R + term * sign_of(S.field, pref + koszul);
        });
      }
      if (!(L == R)) {
        bad = true;
        rep.ok = false;
        rep.detail = "morphism identity fails at arity " + std::to_string(n) +
                     ", input degrees " + tuple_str(degs);
      }
    });
    if (bad) return rep;
  }
  return {};
}

}  // namespace forge
