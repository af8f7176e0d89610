#include "forge/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forge {

const Arrow* Quiver::arrow_by_name(const std::string& name) const {
  for (const auto& a : arrows)
    if (a.name == name) return &a;
  return nullptr;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm on the vertex graph.
  std::vector<int> indeg(n_vertices + 1, 0);
  for (const auto& a : arrows) ++indeg[a.tgt];
  std::vector<int> stack;
  for (int v = 1; v <= n_vertices; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows)
      if (a.src == v && --indeg[a.tgt] == 0) stack.push_back(a.tgt);
  }
  return seen == n_vertices;
}

bool Path::operator<(const Path& o) const {
  if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
  if (arrows != o.arrows) return arrows < o.arrows;
  if (src != o.src) return src < o.src;
  return tgt < o.tgt;
}

Path idempotent_path(int v) { return Path{v, v, {}}; }

Path compose(const Path& p, const Path& q) {
  if (q.tgt != p.src) throw std::invalid_argument("compose: paths not composable");
  Path r;
  r.src = q.src;
  r.tgt = p.tgt;
  r.arrows = p.arrows;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.is_idempotent()) return "e" + std::to_string(p.src);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

void add_term(PathExpr& e, const Path& p, const Scalar& c) {
  auto it = e.find(p);
  if (it == e.end()) {
    if (!c.is_zero()) e.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

PathExpr expr_scale(const PathExpr& e, const Scalar& c) {
  PathExpr r;
  if (c.is_zero()) return r;
  for (const auto& [p, x] : e) r.emplace(p, x * c);
  return r;
}

PathExpr expr_add(const PathExpr& a, const PathExpr& b) {
  PathExpr r = a;
  for (const auto& [p, x] : b) add_term(r, p, x);
  return r;
}

PathExpr expr_mul(const PathExpr& a, const PathExpr& b) {
  PathExpr r;
  for (const auto& [p, x] : a)
    for (const auto& [q, y] : b)
      if (q.tgt == p.src) add_term(r, compose(p, q), x * y);
  return r;
}

std::string expr_str(const Quiver& q, const PathExpr& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : e) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.str() << " * ";
    os << path_str(q, p);
  }
  return os.str();
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len) {
  std::vector<Path> out;
  for (int v = 1; v <= q.n_vertices; ++v) out.push_back(idempotent_path(v));
  std::vector<Path> frontier = out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (const auto& a : q.arrows)
        if (a.tgt == p.src) {
          // extend on the right: p then one more arrow applied before it
          Path ext;
          ext.src = a.src;
          ext.tgt = p.tgt;
          ext.arrows = p.arrows;
          ext.arrows.push_back(a.id);
          next.push_back(ext);
        }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

}  // namespace forge
