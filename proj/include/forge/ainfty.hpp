#pragma once

#include "forge/matrix.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace forge {

/// Homogeneous piece of a graded vector space with vertex bigrading:
/// element k lies in block (bigrade[k].first <- bigrade[k].second).
struct GradedPiece {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> bigrade;  ///< (tgt, src) per basis element
  std::size_t dim() const { return labels.size(); }
};

using DegTuple = std::vector<int>;

/// Mixed-radix index of a tensor word; the first slot is most significant.
std::size_t word_index(const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& idx);
std::vector<std::size_t> word_unindex(const std::vector<std::size_t>& dims,
                                      std::size_t w);
std::size_t word_space_dim(const std::vector<std::size_t>& dims);

int tuple_sum(const DegTuple& t);
std::string tuple_str(const DegTuple& t);
/// Dimensions of the pieces along a degree tuple; false if any piece is
/// absent or zero-dimensional.
bool tuple_dims(const std::map<int, GradedPiece>& pieces, const DegTuple& degs,
                std::vector<std::size_t>& dims);
/// Degrees with a nonzero piece, ascending.
std::vector<int> piece_degrees(const std::map<int, GradedPiece>& pieces);
/// All degree tuples of the given length over the listed degrees.
void enumerate_tuples(const std::vector<int>& degrees, int n,
                      const std::function<void(const DegTuple&)>& fn);
/// All ordered compositions of n into `parts` positive parts.
void enumerate_compositions(int n, int parts,
                            const std::function<void(const std::vector<int>&)>& fn);

/// A-infinity algebra on a finite collection of graded pieces.
/// m[n] maps an input degree tuple (d_1..d_n) to the matrix of
/// m_n : A_{d_1} x ... x A_{d_n} -> A_{d_1+..+d_n+2-n}
/// (rows = target basis, columns = mixed-radix tensor words).
/// Vertex composability: a word x_1 (x) ... (x) x_n is composable when
/// src(x_k) = tgt(x_{k+1}); tables must vanish on non-composable words.
struct AInftyAlgebra {
  Field field;
  int n_vertices = 0;
  int arity_bound = 0;
  std::map<int, GradedPiece> pieces;
  std::vector<std::map<DegTuple, Mat>> m;  ///< index 1..arity_bound

  std::size_t dim(int d) const;
  const GradedPiece* piece(int d) const;
  /// Table lookup; a zero matrix of the right shape if absent.
  Mat table(int n, const DegTuple& degs) const;
  void set_table(int n, const DegTuple& degs, Mat mat);
  int target_degree(int n, const DegTuple& degs) const;
  /// Drops zero matrices and prunes empty-dimension entries.
  void tidy();
};

/// A-infinity coalgebra on graded pieces.  mu[n] maps an *output* degree
/// tuple (d_1..d_n) to the matrix of the corresponding component of
/// mu_n : C_{d_1+...+d_n+n-2} -> C_{d_1} (x) ... (x) C_{d_n}
/// (rows = mixed-radix output words, columns = source basis); each mu_n has
/// operator degree 2-n, like m_n, because dual pieces carry negated degrees.
struct AInftyCoalgebra {
  Field field;
  int n_vertices = 0;
  int arity_bound = 0;
  std::map<int, GradedPiece> pieces;
  std::vector<std::map<DegTuple, Mat>> mu;

  std::size_t dim(int d) const;
  const GradedPiece* piece(int d) const;
  Mat table(int n, const DegTuple& degs) const;
  void set_table(int n, const DegTuple& degs, Mat mat);
  int source_degree(int n, const DegTuple& degs) const;
  void tidy();
};

struct CheckReport {
  bool ok = true;
  std::string detail;  ///< first failure location, human-readable
};

/// Verifies sum_{r+s+t=n} (-1)^{r+st} m_{r+1+t}(1^r (x) m_s (x) 1^t) = 0
/// for 1 <= n <= max_arity, applying interior operators with Koszul signs.
CheckReport check_stasheff(const AInftyAlgebra& A, int max_arity);

/// Verifies sum_{r+s+t=n} (-1)^{rs+t} (1^r (x) mu_s (x) 1^t) mu_{r+1+t} = 0.
CheckReport check_costasheff(const AInftyCoalgebra& C, int max_arity);

/// Dual coalgebra on the dual bases: piece degrees are negated, bigrades are
/// kept, and mu_n = (-1)^n iota_n^{-1} m_n^# with the standard Koszul sign
/// conventions.  On tables this is mu = sign * m^T with
/// sign = (-1)^{n*sum(d_i) + sum_{i<j} d_i d_j} per output degree tuple.
AInftyCoalgebra dualize(const AInftyAlgebra& A);
/// Inverse of dualize: recovers the algebra whose dual coalgebra is C.
AInftyAlgebra dualize_alg(const AInftyCoalgebra& C);

/// Conjugation by a degreewise isomorphism: m'_n = g . m_n . (g^{-1})^{(x)n}
/// where g maps each piece of A by the given invertible matrix.  Pieces keep
/// their degrees; labels are taken from the supplied replacement (optional).
AInftyAlgebra transport_structure(const AInftyAlgebra& A,
                                  const std::map<int, Mat>& g,
                                  const std::map<int, GradedPiece>* relabel = nullptr);

/// Truncated (reduced-word) bar construction: the complex
/// (+)_{k<=max_words} (sA)^{(x)k} over the vertex ring, with the differential
/// induced by all m_s.  Words never grow, so the truncation is a subcomplex.
struct BarComplex {
  Field field;
  /// flat basis: (word length, per-slot (degree, basis index)); grouped by
  /// total shifted degree
  struct Word {
    std::vector<std::pair<int, std::size_t>> slots;
    int degree = 0;  // sum of (slot degree - 1)
  };
  std::vector<Word> words;
  std::map<int, std::vector<std::size_t>> by_degree;
  Mat d;  ///< endomorphism of the flat span (block of degree +1)
};
BarComplex bar_construction(const AInftyAlgebra& A, int max_words);

/// Truncated cobar construction on reduced words in s^{-1} C; words grow by
/// n-1 per arity-n component, so d*d is only meaningful on the guarded window
/// reported in `window_max_len`.
struct CobarComplex {
  Field field;
  struct Word {
    std::vector<std::pair<int, std::size_t>> slots;
    int degree = 0;  // sum of (slot degree + 1)
  };
  std::vector<Word> words;
  Mat d;
  int window_max_len = 0;  ///< d*d vanishes on words of length <= this
};
CobarComplex cobar_construction(const AInftyCoalgebra& C, int max_words);

/// A-infinity morphism data f = (f_1, f_2, ...): f[n] maps input degree
/// tuples to matrices into the target algebra's piece at degree sum + 1 - n.
/// Source and target structures are stored by value so the morphism stays
/// self-contained.
struct MorphismAInfty {
  AInftyAlgebra source;
  AInftyAlgebra target;
  std::vector<std::map<DegTuple, Mat>> f;  ///< index 1..arity bound

  Mat component(int n, const DegTuple& degs) const;
};

/// Verifies the morphism equations up to max_arity:
/// sum (-1)^{r+st} f_{r+1+t}(1^r (x) m_s (x) 1^t)
///   = sum (-1)^{sum_{i<l}(l-i)(j_i-1)} m'_l(f_{j_1} (x) ... (x) f_{j_l}).
CheckReport check_morphism(const MorphismAInfty& F, int max_arity);

/// Deformation retract data for homotopy transfer onto homology.
struct Contraction {
  std::map<int, GradedPiece> hpieces;
  std::map<int, Mat> incl;  ///< i_d: H_d -> A_d (columns are cycles)
  std::map<int, Mat> proj;  ///< p_d: A_d -> H_d
  std::map<int, Mat> h;     ///< h_d: A_d -> A_{d-1}
};

/// Pivot-greedy contraction: boundaries B = im m1, a greedy complement H of B
/// inside ker m1, a greedy complement L of the cycles, h|_{H(+)L} = 0 and
/// h|_B = -(m1|_L)^{-1}.  Satisfies i p - id = m1 h + h m1.
Contraction canonical_contraction(const AInftyAlgebra& A);

/// Verifies i p - id = m1 h + h m1, p i = id, m1 i = 0, p m1 = 0.
CheckReport check_contraction(const AInftyAlgebra& A, const Contraction& C);

struct TransferResult {
  AInftyAlgebra H;        ///< minimal model on the homology pieces
  MorphismAInfty incl;    ///< quasi-isomorphism H -> A (f_1 = i, f_n = h lambda_n)
  /// lambda tables (on H-degree words, values in A pieces), kept for reuse
  std::vector<std::map<DegTuple, Mat>> lambda;
};

/// Homotopy transfer of the full A-infinity structure along the contraction:
/// lambda_2 = m_2 on embedded cycles and
/// lambda_n = sum_{l != 1, j_1+..+j_l = n} (-1)^{sum_{i<l}(l-i)(j_i-1)}
///            m_l(h lambda_{j_1} (x) ... (x) h lambda_{j_l}),
/// with h lambda_1 := i; the transferred operations are m_n = p lambda_n.
TransferResult merkulov_transfer(const AInftyAlgebra& A, const Contraction& C,
                                 int arity_bound);

}  // namespace forge
