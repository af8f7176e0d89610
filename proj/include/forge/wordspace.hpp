#pragma once

#include "forge/algebra.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace forge {

/// Dashed arrow of a biquiver.  Vertices use the same numbering as the
/// underlying solid quiver.
struct DashedArrow {
  int id = -1;
  int src = 0;
  int tgt = 0;
  std::string name;
};

/// Interleaved word  a_0 . g_1 . a_1 . g_2 ... g_k . a_k  with k dashed
/// letters g_i and k+1 solid slots a_i holding algebra basis indices.
/// Factors compose right to left: a_k is applied first.  Seam conditions:
/// src(a_{i-1}) = tgt(g_i) and src(g_i) = tgt(a_i).
struct BWord {
  std::vector<std::size_t> solid;   ///< size k+1
  std::vector<std::size_t> dashed;  ///< size k

  std::size_t letters() const { return dashed.size(); }
  bool operator==(const BWord& o) const {
    return solid == o.solid && dashed == o.dashed;
  }
  /// Canonical order: dashed sequence first, then solid sequence.
  bool operator<(const BWord& o) const {
    if (dashed != o.dashed) return dashed < o.dashed;
    return solid < o.solid;
  }
};

/// Finite linear combination of words with a common dashed-letter count.
using BExpr = std::map<BWord, Scalar>;

void expr_add_term(BExpr& e, const BWord& w, const Scalar& c);
BExpr expr_sum(const BExpr& a, const BExpr& b);
BExpr expr_scaled(const BExpr& e, const Scalar& c);

/// Word calculus over a fixed algebra and dashed arrow set: enumeration of
/// the composable words with a given number of dashed letters (these are a
/// basis of the corresponding layer of the free tensor algebra), products,
/// and coordinate conversion.
class WordSpace {
public:
  WordSpace(std::shared_ptr<const FinDimAlgebra> A,
            std::vector<DashedArrow> dashed);

  const FinDimAlgebra& algebra() const { return *A_; }
  const std::vector<DashedArrow>& dashed() const { return dashed_; }

  int word_src(const BWord& w) const;
  int word_tgt(const BWord& w) const;
  bool composable(const BWord& w) const;

  /// All composable words with exactly k dashed letters, canonical order.
  const std::vector<BWord>& words(std::size_t k) const;
  std::size_t index(std::size_t k, const BWord& w) const;

  /// Singleton expressions.
  BExpr word_expr(const BWord& w, const Scalar& c) const;
  /// A solid element (coordinate vector over the algebra basis) as a
  /// 0-dashed expression.
  BExpr solid_expr(const Vec& a) const;
  /// The word e_tgt . g . e_src for a single dashed letter.
  BExpr letter_expr(int dashed_id) const;

  /// Product: concatenation with the seam product expanded in the algebra.
  BExpr mul(const BExpr& x, const BExpr& y) const;

  Vec to_vec(std::size_t k, const BExpr& e) const;
  BExpr from_vec(std::size_t k, const Vec& v) const;

  std::string word_str(const BWord& w) const;
  std::string expr_str(const BExpr& e) const;

private:
  std::shared_ptr<const FinDimAlgebra> A_;
  std::vector<DashedArrow> dashed_;
  mutable std::map<std::size_t, std::vector<BWord>> words_;
  mutable std::map<std::size_t, std::map<BWord, std::size_t>> index_;
};

}  // namespace forge
