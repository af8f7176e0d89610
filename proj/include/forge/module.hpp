#pragma once

#include "forge/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace forge {

/// Finite-dimensional left module over a FinDimAlgebra, given by the action
/// matrix of every algebra basis element on a chosen basis of the module.
struct LeftModule {
  const FinDimAlgebra* A = nullptr;
  std::size_t dim = 0;
  std::vector<Mat> action;  ///< one dim x dim matrix per algebra basis element

  Mat act(const Vec& a) const;        ///< action matrix of an algebra element
  Mat vertex_projector(int v) const;  ///< action of e_v
  std::vector<std::size_t> dimension_vector() const;  ///< dim e_v M per vertex
  void check_axioms() const;          ///< unit + multiplicativity; throws
};

LeftModule zero_module(const FinDimAlgebra& A);
LeftModule simple_module(const FinDimAlgebra& A, int v);
/// P(v) = A e_v on the basis elements of A with source v.
LeftModule projective_module(const FinDimAlgebra& A, int v);
/// Indices (into A's basis) of the basis of A e_v, ascending; this is the
/// basis order used by projective_module.
std::vector<std::size_t> projective_basis_indices(const FinDimAlgebra& A, int v);

struct SumModule {
  LeftModule mod;
  std::vector<std::size_t> offsets;  ///< start index of each summand
};
SumModule direct_sum(const FinDimAlgebra& A, const std::vector<LeftModule>& parts);

/// Basis of Hom_A(M, N) as matrices N <- M (solved exactly from the
/// intertwining equations for algebra generators).
std::vector<Mat> hom_space(const LeftModule& M, const LeftModule& N);

/// Basis matrix (columns) of the radical submodule J·M inside M.
Mat radical_submodule(const LeftModule& M);

/// Submodule on an explicit column basis: the module structure on the span,
/// with the inclusion matrix.
struct Submodule {
  LeftModule mod;
  Mat inclusion;
};
Submodule submodule_on(const LeftModule& M, const Mat& basis);

/// Quotient of M by the span of the given columns.
struct QuotientModule {
  LeftModule mod;
  Mat projection;  ///< M -> quotient
};
QuotientModule quotient_by(const LeftModule& M, const Mat& sub);

/// Projective cover P -> M: the cover module (a direct sum of P(v)),
/// the vertices of its indecomposable summands, and the covering map.
struct Cover {
  LeftModule P;
  std::vector<int> vertices;
  Mat map;  ///< dim M x dim P
};
Cover projective_cover(const LeftModule& M);

/// Standard module Δ(v) for the given linear order on vertices
/// (order[k] lists the vertex at position k, increasing):
/// Δ(v) = P(v) / trace of all P(w) with w later in the order.
QuotientModule standard_module(const FinDimAlgebra& A, const std::vector<int>& order,
                               int v);

/// Decomposition matrix T with T[i][j] = multiplicity of Δ(order i) in a
/// Δ-filtration of P(order j), solved from dimension vectors.
std::vector<std::vector<long long>> decomposition_matrix(
    const FinDimAlgebra& A, const std::vector<int>& order);

/// True if (A, order) is quasi-hereditary, tested along the heredity chain
/// of trace ideals of the projectives in decreasing order.
bool is_quasi_hereditary(const FinDimAlgebra& A, const std::vector<int>& order);

}  // namespace forge
