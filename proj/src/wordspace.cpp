#include "forge/wordspace.hpp"

#include <functional>
#include <stdexcept>

namespace forge {

void expr_add_term(BExpr& e, const BWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) e.erase(it);
}

BExpr expr_sum(const BExpr& a, const BExpr& b) {
  BExpr r = a;
  for (const auto& [w, c] : b) expr_add_term(r, w, c);
  return r;
}

BExpr expr_scaled(const BExpr& e, const Scalar& c) {
  BExpr r;
  if (c.is_zero()) return r;
  for (const auto& [w, k] : e) expr_add_term(r, w, k * c);
  return r;
}

WordSpace::WordSpace(std::shared_ptr<const FinDimAlgebra> A,
                     std::vector<DashedArrow> dashed)
    : A_(std::move(A)), dashed_(std::move(dashed)) {
  for (std::size_t i = 0; i < dashed_.size(); ++i) {
    if (dashed_[i].id != static_cast<int>(i))
      throw std::logic_error("wordspace: dashed arrow ids must be 0..n-1 in order");
  }
}

int WordSpace::word_src(const BWord& w) const {
  return A_->basis_src[w.solid.back()];
}

int WordSpace::word_tgt(const BWord& w) const {
  return A_->basis_tgt[w.solid.front()];
}

bool WordSpace::composable(const BWord& w) const {
  if (w.solid.size() != w.dashed.size() + 1) return false;
  for (std::size_t i = 0; i < w.dashed.size(); ++i) {
    const DashedArrow& g = dashed_[w.dashed[i]];
    if (A_->basis_src[w.solid[i]] != g.tgt) return false;
    if (g.src != A_->basis_tgt[w.solid[i + 1]]) return false;
  }
  return true;
}

const std::vector<BWord>& WordSpace::words(std::size_t k) const {
  auto it = words_.find(k);
  if (it != words_.end()) return it->second;

  std::vector<BWord> out;
  if (k == 0) {
    for (std::size_t b = 0; b < A_->dim(); ++b) out.push_back(BWord{{b}, {}});
  } else {
    // Enumerate dashed tuples lexicographically, then solid slots left to
    // right ascending; the emitted order coincides with BWord's order.
    std::vector<std::size_t> dtuple(k, 0);
    std::vector<std::size_t> stuple(k + 1, 0);
    const std::size_t nd = dashed_.size();
    std::function<void(std::size_t)> fill_solid = [&](std::size_t pos) {
      if (pos == k + 1) {
        out.push_back(BWord{stuple, dtuple});
        return;
      }
      for (std::size_t b = 0; b < A_->dim(); ++b) {
        // slot pos sits between g_pos (left) and g_{pos+1} (right)
        if (pos > 0 && A_->basis_src[b] != dashed_[dtuple[pos - 1]].tgt) continue;
        if (pos < k && A_->basis_tgt[b] != dashed_[dtuple[pos]].src) continue;
        stuple[pos] = b;
        fill_solid(pos + 1);
      }
    };
    std::function<void(std::size_t)> fill_dashed = [&](std::size_t pos) {
      if (pos == k) {
        fill_solid(0);
        return;
      }
      for (std::size_t g = 0; g < nd; ++g) {
        dtuple[pos] = g;
        fill_dashed(pos + 1);
      }
    };
    if (nd > 0) fill_dashed(0);
  }

  auto& slot = words_[k];
  slot = std::move(out);
  auto& idx = index_[k];
  for (std::size_t i = 0; i < slot.size(); ++i) idx[slot[i]] = i;
  return slot;
}

std::size_t WordSpace::index(std::size_t k, const BWord& w) const {
  words(k);
  const auto& idx = index_.at(k);
  auto it = idx.find(w);
  if (it == idx.end())
    throw std::out_of_range("wordspace: word not in basis: " + word_str(w));
  return it->second;
}

BExpr WordSpace::word_expr(const BWord& w, const Scalar& c) const {
  BExpr e;
  expr_add_term(e, w, c);
  return e;
}

BExpr WordSpace::solid_expr(const Vec& a) const {
  BExpr e;
  for (std::size_t b = 0; b < a.size(); ++b)
    expr_add_term(e, BWord{{b}, {}}, a[b]);
  return e;
}

BExpr WordSpace::letter_expr(int dashed_id) const {
  const DashedArrow& g = dashed_.at(dashed_id);
  BWord w;
  w.solid = {A_->idempotent_index[g.tgt - 1], A_->idempotent_index[g.src - 1]};
  w.dashed = {static_cast<std::size_t>(dashed_id)};
  return word_expr(w, A_->field.one());
}

BExpr WordSpace::mul(const BExpr& x, const BExpr& y) const {
  BExpr r;
  for (const auto& [wx, cx] : x) {
    for (const auto& [wy, cy] : y) {
      const auto& seam = A_->mult_table[wx.solid.back()][wy.solid.front()];
      if (seam.empty()) continue;
      const Scalar c = cx * cy;
      for (const auto& [b, cb] : seam) {
        BWord w;
        w.solid.reserve(wx.solid.size() + wy.solid.size() - 1);
        w.solid.insert(w.solid.end(), wx.solid.begin(), wx.solid.end() - 1);
        w.solid.push_back(b);
        w.solid.insert(w.solid.end(), wy.solid.begin() + 1, wy.solid.end());
        w.dashed.reserve(wx.dashed.size() + wy.dashed.size());
        w.dashed.insert(w.dashed.end(), wx.dashed.begin(), wx.dashed.end());
        w.dashed.insert(w.dashed.end(), wy.dashed.begin(), wy.dashed.end());
        expr_add_term(r, w, c * cb);
      }
    }
  }
  return r;
}

Vec WordSpace::to_vec(std::size_t k, const BExpr& e) const {
  Vec v = zero_vec(words(k).size(), A_->field);
  for (const auto& [w, c] : e) {
    if (w.letters() != k)
      throw std::logic_error("wordspace: expression has mixed letter counts");
    v[index(k, w)] = c;
  }
  return v;
}

BExpr WordSpace::from_vec(std::size_t k, const Vec& v) const {
  const auto& ws = words(k);
  if (v.size() != ws.size())
    throw std::logic_error("wordspace: coordinate size mismatch");
  BExpr e;
  for (std::size_t i = 0; i < v.size(); ++i) expr_add_term(e, ws[i], v[i]);
  return e;
}

std::string WordSpace::word_str(const BWord& w) const {
  std::string s;
  for (std::size_t i = 0; i < w.solid.size(); ++i) {
    if (i > 0) {
      s += "*";
      s += dashed_[w.dashed[i - 1]].name;
      s += "*";
    }
    s += A_->basis_names[w.solid[i]];
  }
  return s;
}

std::string WordSpace::expr_str(const BExpr& e) const {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.str() + ")*" + word_str(w);
  }
  return s;
}

}  // namespace forge
