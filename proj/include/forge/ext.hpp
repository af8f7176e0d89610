#pragma once

#include "forge/ainfty.hpp"
#include "forge/resolution.hpp"

namespace forge {

/// One basis element of the dg endomorphism algebra of a family of
/// resolutions: a single-component morphism P_k(j) -> P_{k-n}(i).
struct DgEndElt {
  int k = 0;  ///< homological source index
  int i = 0;  ///< target family member (vertex)
  int j = 0;  ///< source family member (vertex)
  Mat map;    ///< matrix P_{k-n}(i) <- P_k(j)
};

/// Total dg endomorphism algebra of the direct sum of the given resolutions,
/// as a two-operation structure (differential and composition) in the
/// graded-piece container.  Degree n holds (+)_{k,i,j} Hom(P_k(j), P_{k-n}(i));
/// the differential is D(f) = d . f - (-1)^{|f|} f . d; the product is
/// composition.  Basis order within a degree: ascending (k, i, j, basis index).
struct DgEnd {
  AInftyAlgebra alg;
  std::map<int, std::vector<DgEndElt>> elts;  ///< aligned with piece bases
};

/// res[v] must resolve the v-th member of the family, all over one algebra.
DgEnd dg_end(const std::vector<Resolution>& res);

/// Dimensions of Ext^k(M, N) for k = 0..max_deg, computed from the complex
/// Hom(P_*, N) of the given resolution of M.  Requires the resolution to be
/// complete or long enough (max_deg + 1 < terms).
std::vector<std::size_t> ext_dims(const Resolution& RM, const LeftModule& N,
                                  std::size_t max_deg);

}  // namespace forge
