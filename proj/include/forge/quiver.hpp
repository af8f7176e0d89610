#pragma once

#include "forge/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace forge {

/// Arrow of a quiver.  Vertices are numbered 1..n.
struct Arrow {
  int id = -1;  // index into Quiver::arrows
  int src = 0;
  int tgt = 0;
  std::string name;
};

struct Quiver {
  int n_vertices = 0;
  std::vector<Arrow> arrows;

  const Arrow* arrow_by_name(const std::string& name) const;
  bool is_acyclic() const;  // no directed cycles through arrows
};

/// A path in a quiver.  Arrows are stored in composition order: arrows[0] is
/// applied last (it is the leftmost factor when the path is written as a
/// product).  An empty arrow list is the lazy path e_v at vertex src == tgt.
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;

  bool is_idempotent() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path& o) const {
    return src == o.src && tgt == o.tgt && arrows == o.arrows;
  }
  /// Canonical order: by length, then arrow sequence, then endpoints.
  bool operator<(const Path& o) const;
};

Path idempotent_path(int v);
/// p∘q: apply q first; requires q.tgt == p.src.
Path compose(const Path& p, const Path& q);
std::string path_str(const Quiver& q, const Path& p);

/// Sparse linear combination of paths.
using PathExpr = std::map<Path, Scalar>;

void add_term(PathExpr& e, const Path& p, const Scalar& c);
PathExpr expr_scale(const PathExpr& e, const Scalar& c);
PathExpr expr_add(const PathExpr& a, const PathExpr& b);
/// Composes every pair of terms (p from a, q from b); drops non-composable pairs.
PathExpr expr_mul(const PathExpr& a, const PathExpr& b);
std::string expr_str(const Quiver& q, const PathExpr& e);

/// Presentation of a finite-dimensional quotient of a path algebra:
/// A = kQ / (relations, paths of length >= nilpotency).
/// The declared nilpotency bound is verified at build time.
struct Presentation {
  Field field;
  Quiver quiver;
  std::vector<PathExpr> relations;
  int nilpotency = 0;
};

/// All paths of length <= max_len, in canonical order (idempotents first).
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len);

}  // namespace forge
