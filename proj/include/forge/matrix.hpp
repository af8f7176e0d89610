#pragma once

#include "forge/scalar.hpp"

#include <optional>
#include <vector>

namespace forge {

using Vec = std::vector<Scalar>;

/// Dense matrix over an exact field.  A matrix with r rows and c columns
/// represents a linear map k^c -> k^r acting on column vectors; columns
/// index the source basis.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols, const Field& field);

  static Mat identity(std::size_t n, const Field& field);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows,
                          const Field& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_column(std::size_t j, const Vec& v);

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Scalar& s) const;
  Mat operator-() const;
  bool operator==(const Mat& o) const;

  Mat transpose() const;
  bool is_zero() const;

  /// Horizontal concatenation [A | B].
  static Mat hstack(const Mat& a, const Mat& b);
  /// Vertical concatenation.
  static Mat vstack(const Mat& a, const Mat& b);

private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Mat reduced;                ///< the row-reduced echelon form
  std::vector<std::size_t> pivots;  ///< pivot column indices, ascending
};

/// Row-reduced echelon form with deterministic first-pivot-greedy elimination:
/// columns are scanned left to right, the first nonzero entry at or below the
/// current row becomes the pivot, pivots are normalized to 1.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of the kernel, one column per free variable, in ascending free-column
/// order, with the free variable set to 1 (and the other free variables to 0).
Mat kernel_basis(const Mat& m);

/// Basis of the column space: the pivot columns of m, in ascending order,
/// returned verbatim (not reduced).
Mat image_basis(const Mat& m);

/// One solution x of A x = b with all free variables set to zero, or nullopt
/// if the system is inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Matrix solve: finds X with A X = B column by column; nullopt if any column
/// is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Greedy complement: standard basis vectors of k^n (n = u.rows()), taken in
/// ascending index order, that extend the column space of u to all of k^n.
/// Returned as the columns of a matrix.
Mat complement(const Mat& u);

/// Complement of subspace u inside subspace w (columns spanning each, u ⊆ w):
/// greedily selected columns of w extending a basis of u.  Returned columns
/// are columns of w, verbatim.
Mat complement_in(const Mat& u, const Mat& w);

/// Basis of the intersection of the column spaces of a and b.
Mat intersect(const Mat& a, const Mat& b);

/// True if v lies in the column space of m.
bool in_span(const Mat& m, const Vec& v);

/// Inverse of a square invertible matrix; throws if singular.
Mat inverse(const Mat& m);

/// Kronecker product of the factors in the given order, indexed mixed-radix
/// with the first factor most significant.  An empty list yields the 1x1
/// identity.
Mat kron(const std::vector<Mat>& factors, const Field& field);

/// Quotient of k^ambient by the span of the given columns: proj maps the
/// ambient space onto quotient coordinates (greedy standard-vector
/// complement), lift is a section with proj·lift = id.
struct QuotientSplit {
  Mat proj;
  Mat lift;
  std::size_t dim() const { return lift.cols(); }
};
QuotientSplit quotient_split(const Mat& relations, std::size_t ambient,
                             const Field& field);

Vec scaled(const Vec& v, const Scalar& s);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n, const Field& f);

}  // namespace forge
