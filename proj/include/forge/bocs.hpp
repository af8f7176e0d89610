#pragma once

#include "forge/ainfty.hpp"
#include "forge/wordspace.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace forge {

/// Semifree differential graded tensor algebra T_A(W): the solid part A is a
/// presented finite-dimensional algebra, W is the free A-bimodule on the
/// dashed arrows placed in degree +1, and the degree +1 differential is
/// determined by its values on the solid arrows (one dashed letter each) and
/// on the dashed arrows (two dashed letters each), extended as a derivation.
struct SemifreeDGA {
  std::shared_ptr<FinDimAlgebra> A;
  std::vector<DashedArrow> dashed;
  std::shared_ptr<WordSpace> W;
  std::vector<BExpr> d0;  ///< per solid arrow id: value on that arrow
  std::vector<BExpr> d1;  ///< per dashed arrow id: value on that arrow

  const Presentation& pres() const { return A->presented->pres; }
};

/// Builds the dg algebra and checks shapes: one d0 entry per solid arrow with
/// every word parallel to the arrow, one d1 entry per dashed arrow likewise.
SemifreeDGA make_dga(const Presentation& pres, std::vector<DashedArrow> dashed,
                     std::vector<BExpr> d0, std::vector<BExpr> d1);

/// Paths of the algebra basis elements (normal forms are paths), by index.
std::vector<Path> basis_paths(const FinDimAlgebra& A);

/// Differential of a literal path, computed by the Leibniz rule from the d0
/// values of its arrows with the subpaths reduced in A.  No signs: solid
/// letters sit in degree 0.
BExpr d_of_path(const SemifreeDGA& g, const Path& p);
/// Differential of a solid basis element (via its normal-form path).
BExpr d_of_solid(const SemifreeDGA& g, std::size_t basis_index);
/// Differential of a k-letter expression; each word contributes one term per
/// factor with sign (-1)^(number of dashed letters to the left).
BExpr apply_d(const SemifreeDGA& g, const BExpr& e);

/// Well-definedness (the relations are killed) and d∘d = 0 on all generators.
CheckReport check_dga(const SemifreeDGA& g);

/// Solid quiver together with the dashed arrows.
struct Biquiver {
  Quiver solid;
  std::vector<DashedArrow> dashed;
  /// True if the combined directed graph (solid and dashed edges) is acyclic.
  bool acyclic() const;
};

/// Generator e_t . φ . b of the kernel as a left module (φ a dashed arrow,
/// b an algebra basis element with target src(φ)).
struct KernelGen {
  int dashed = -1;
  std::size_t b = 0;
};

/// Canonical basis bookkeeping for V ⊗_A V, exploiting that V is free as a
/// left module on ω and the kernel generators: the basis consists of the
/// pairs (u, ω) for every V-basis element u and (u, g) for every kernel
/// generator g and every u with source vertex tgt(φ_g).
struct TensorSquare {
  std::vector<KernelGen> gens;
  /// pairs (u, g) with g = -1 encoding ω, in block order: the ω block first,
  /// then one block per generator, each ordered by u.
  std::vector<std::pair<std::size_t, int>> basis;
  std::map<std::pair<std::size_t, int>, std::size_t> index;
  std::vector<Mat> left, right;  ///< action of each algebra basis element

  std::size_t dim() const { return basis.size(); }
};

/// Coring (A, V) with grouplike, materialized over the canonical word basis
/// of V = Aω ⊕ V̄: the first dim(A) basis vectors are the elements x·ω for x
/// in the algebra basis, followed by the one-dashed-letter words spanning the
/// kernel of the counit.  The dg presentation it came from is kept alongside;
/// the coring data is derived from it but validated independently.
struct Bocs {
  SemifreeDGA dga;
  std::vector<std::string> vlabels;
  Mat eps;                        ///< counit V -> A
  Vec omega;                      ///< the grouplike, in V coordinates
  std::vector<Mat> left_act;      ///< per algebra basis element
  std::vector<Mat> right_act;     ///< twisted by the differential on the ω part
  TensorSquare t2;
  Mat mu;                         ///< comultiplication V -> V ⊗_A V

  std::size_t vdim() const { return vlabels.size(); }
  std::size_t omega_block() const { return dga.A->dim(); }
  const FinDimAlgebra& algebra() const { return *dga.A; }
};

/// Source vertex of a V-basis element (x·ω inherits src(x)).
int v_source(const Bocs& b, std::size_t u);
/// Action of an arbitrary algebra element.
Vec v_left_of(const Bocs& b, const Vec& a, const Vec& v);
Vec v_right_of(const Bocs& b, const Vec& v, const Vec& a);
/// Class of the pure tensor p ⊗ q in the canonical basis of V ⊗_A V.
Vec t2_of(const Bocs& b, const Vec& p, const Vec& q);

/// Coring from a dg presentation: counit, grouplike, twisted actions, and
/// comultiplication read off the differential.
Bocs roiter_from_dga(const SemifreeDGA& g);
/// Dg presentation recomputed from the coring data: d0 from the commutator
/// with the grouplike, d1 from the comultiplication minus its grouplike
/// terms.  Inverse of roiter_from_dga with bit-identical tables.
SemifreeDGA roiter_to_dga(const Bocs& b);

/// Full axiom report: bimodule axioms of V, counit and comultiplication are
/// bimodule maps, coassociativity, counit identities, grouplike axioms,
/// kernel freeness, and the differential checks of the presentation.
CheckReport validate(const Bocs& b);

Biquiver biquiver(const Bocs& b);
bool is_directed(const Bocs& b);

struct RegularityWitness {
  bool regular = true;
  int solid_arrow = -1;  ///< first offending solid arrow
  int dashed = -1;       ///< dashed arrow appearing with idempotent flanks
};
/// Syntactic regularity: no d0 value contains a dashed letter with idempotent
/// coefficients on both sides.
RegularityWitness is_regular(const Bocs& b);

/// Iterates the one-step reduction removing the first non-regular pair (one
/// solid and one dashed arrow, with the dashed generator substituted by the
/// rest of the differential value) until the result is regular.
Bocs regularize(const Bocs& b);

/// The bocs with no dashed arrows over the given algebra (V = Aω).
Bocs trivial_bocs(const Presentation& pres);

}  // namespace forge
