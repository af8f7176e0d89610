#include "forge/ainfty.hpp"

#include "forge/tensor.hpp"

#include <stdexcept>

namespace forge {

Contraction canonical_contraction(const AInftyAlgebra& A) {
  Contraction C;
  struct Dec {
    Mat B, H, L, inv, full;
  };
  std::map<int, Dec> dec;
  for (const auto& [d, piece] : A.pieces) {
    if (piece.dim() == 0) continue;
    Mat into = A.table(1, {d});
    Mat from = A.table(1, {d - 1});
    Mat Z = kernel_basis(into);
    Mat B = image_basis(from);
    Mat H = complement_in(B, Z);
    Mat L = complement(Z);
    Mat full = Mat::hstack(Mat::hstack(B, H), L);
    Mat inv = inverse(full);
    dec[d] = Dec{B, H, L, inv, full};
    GradedPiece hp;
    for (std::size_t j = 0; j < H.cols(); ++j) {
      Vec col = H.column(j);
      int tv = -1, sv = -1;
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i].is_zero()) continue;
        const auto& bg = piece.bigrade[i];
        if (tv == -1) {
          tv = bg.first;
          sv = bg.second;
        } else if (tv != bg.first || sv != bg.second) {
          throw std::logic_error("canonical_contraction: homology class mixes "
                                 "vertex blocks at degree " + std::to_string(d));
        }
      }
      hp.labels.push_back("h" + std::to_string(d) + "_" + std::to_string(j));
      hp.bigrade.emplace_back(tv, sv);
    }
    if (hp.dim() > 0) C.hpieces[d] = hp;
    if (H.cols() > 0) {
      C.incl[d] = H;
      Mat p(H.cols(), piece.dim(), A.field);
      for (std::size_t i = 0; i < H.cols(); ++i)
        for (std::size_t jj = 0; jj < piece.dim(); ++jj)
          p.at(i, jj) = inv.at(B.cols() + i, jj);
      C.proj[d] = p;
    }
  }
  for (const auto& [d, dc] : dec) {
    const std::size_t nd = dc.full.rows();
    const std::size_t nB = dc.B.cols();
    auto prev = dec.find(d - 1);
    Mat h(prev == dec.end() ? 0 : prev->second.full.rows(), nd, A.field);
    if (nB > 0) {
      if (prev == dec.end())
        throw std::logic_error("canonical_contraction: boundaries without a "
                               "previous degree");
      Mat from = A.table(1, {d - 1});
      Mat fl = from * prev->second.L;
      auto X = solve(fl, dc.B);
      if (!X)
        throw std::logic_error("canonical_contraction: boundary not hit by the "
                               "selected complement");
      Mat pre(h.rows(), nd, A.field);
      Mat lifted = prev->second.L * (*X);
      for (std::size_t j = 0; j < nB; ++j)
        for (std::size_t i = 0; i < h.rows(); ++i) pre.at(i, j) = -lifted.at(i, j);
      h = pre * dc.inv;
    }
    if (h.rows() > 0) C.h[d] = h;
  }
  return C;
}

CheckReport check_contraction(const AInftyAlgebra& A, const Contraction& C) {
  auto fail = [](const std::string& s) {
    CheckReport r;
    r.ok = false;
    r.detail = s;
    return r;
  };
  for (const auto& [d, piece] : A.pieces) {
    if (piece.dim() == 0) continue;
    const std::size_t nd = piece.dim();
    const std::size_t nh = C.hpieces.count(d) ? C.hpieces.at(d).dim() : 0;
    Mat i = C.incl.count(d) ? C.incl.at(d) : Mat(nd, nh, A.field);
    Mat p = C.proj.count(d) ? C.proj.at(d) : Mat(nh, nd, A.field);
    Mat into = A.table(1, {d});
    Mat from = A.table(1, {d - 1});
    if (nh > 0) {
      if (!(p * i == Mat::identity(nh, A.field))) return fail("p i != id at degree " + std::to_string(d));
      if (!(into * i).is_zero()) return fail("m1 i != 0 at degree " + std::to_string(d));
    }
    const std::size_t nh1 = C.hpieces.count(d + 1) ? C.hpieces.at(d + 1).dim() : 0;
    if (nh1 > 0) {
      Mat p1 = C.proj.at(d + 1);
      if (!(p1 * into).is_zero()) return fail("p m1 != 0 at degree " + std::to_string(d));
    }
    const std::size_t nprev = A.dim(d - 1);
    Mat h = C.h.count(d) ? C.h.at(d) : Mat(nprev, nd, A.field);
    const std::size_t nnext = A.dim(d + 1);
    Mat h1 = C.h.count(d + 1) ? C.h.at(d + 1) : Mat(nd, nnext, A.field);
    Mat lhs = i * p - Mat::identity(nd, A.field);
    Mat rhs = from * h + h1 * into;
    if (!(lhs == rhs)) return fail("side conditions fail: ip - id != m1 h + h m1 at degree " +
                                   std::to_string(d));
  }
  return {};
}

TransferResult merkulov_transfer(const AInftyAlgebra& A, const Contraction& C,
                                 int arity_bound) {
  TransferResult R;
  R.H.field = A.field;
  R.H.n_vertices = A.n_vertices;
  R.H.arity_bound = arity_bound;
  R.H.pieces = C.hpieces;
  R.H.m.assign(static_cast<std::size_t>(arity_bound) + 1, {});
  R.lambda.assign(static_cast<std::size_t>(arity_bound) + 1, {});
  std::vector<std::map<DegTuple, Mat>> hlam(static_cast<std::size_t>(arity_bound) + 1);
  const auto hdegs = piece_degrees(C.hpieces);

  // sanity: transferred m1 vanishes (input homology with zero differential)
  for (int g : hdegs) {
    Mat m1 = A.table(1, {g});
    if (m1.rows() == 0) continue;
    if (C.proj.count(g + 1) && C.incl.count(g)) {
      if (!(C.proj.at(g + 1) * m1 * C.incl.at(g)).is_zero())
        throw std::logic_error("merkulov_transfer: contraction does not kill m1");
    }
  }

  for (int n = 2; n <= arity_bound; ++n) {
    enumerate_tuples(hdegs, n, [&](const DegTuple& degs) {
      std::vector<std::size_t> hdims;
      if (!tuple_dims(C.hpieces, degs, hdims)) return;
      const std::size_t W = word_space_dim(hdims);
      const int target = tuple_sum(degs) + 2 - n;
      const std::size_t adim = A.dim(target);
      if (adim == 0) return;
      Mat lam(adim, W, A.field);
      for (int l = 2; l <= n; ++l) {
        enumerate_compositions(n, l, [&](const std::vector<int>& parts) {
          long long pref = 0;
          for (int i = 0; i < l - 1; ++i)
            pref += static_cast<long long>(l - 1 - i) * (parts[static_cast<std::size_t>(i)] - 1);
          std::vector<Mat> blocks;
          DegTuple odegs;
          long long koszul = 0;
          long long before = 0;
          int pos = 0;
          bool dead = false;
          for (int bk = 0; bk < l && !dead; ++bk) {
            const int j = parts[static_cast<std::size_t>(bk)];
            DegTuple bdegs(degs.begin() + pos, degs.begin() + pos + j);
            const int S_k = tuple_sum(bdegs);
            const int o_k = S_k + 1 - j;
            if (A.dim(o_k) == 0) {
              dead = true;
              break;
            }
            Mat blk;
            if (j == 1) {
              if (!C.incl.count(bdegs[0])) {
                dead = true;
                break;
              }
              blk = C.incl.at(bdegs[0]);
            } else {
              auto it = hlam[static_cast<std::size_t>(j)].find(bdegs);
              if (it == hlam[static_cast<std::size_t>(j)].end()) {
                dead = true;
                break;
              }
              blk = it->second;
            }
            if (bk > 0) koszul += static_cast<long long>(1 - j) * before;
            blocks.push_back(blk);
            odegs.push_back(o_k);
            before += S_k;
            pos += j;
          }
          if (dead) return;
          Mat M = A.table(l, odegs);
          if (M.rows() == 0 || M.is_zero()) return;
          lam = lam + M * kron(blocks, A.field) * sign_of(A.field, pref + koszul);
        });
      }
      if (!lam.is_zero()) R.lambda[static_cast<std::size_t>(n)][degs] = lam;
      if (C.h.count(target)) {
        Mat hl = C.h.at(target) * lam;
        if (!hl.is_zero()) hlam[static_cast<std::size_t>(n)][degs] = std::move(hl);
      }
      if (C.proj.count(target)) {
        Mat mh = C.proj.at(target) * lam;
        if (!mh.is_zero()) R.H.set_table(n, degs, std::move(mh));
      }
    });
  }
  R.H.tidy();
  R.incl.source = R.H;
  R.incl.target = A;
  R.incl.f.assign(static_cast<std::size_t>(arity_bound) + 1, {});
  for (int g : hdegs)
    if (C.incl.count(g)) R.incl.f[1][{g}] = C.incl.at(g);
  for (int n = 2; n <= arity_bound; ++n) R.incl.f[static_cast<std::size_t>(n)] = hlam[static_cast<std::size_t>(n)];
  return R;
}


}  // namespace forge
