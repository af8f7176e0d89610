#pragma once

#include "forge/module.hpp"

namespace forge {

/// Minimal projective resolution ... -> P[1] -> P[0] -> M -> 0, built from
/// iterated projective covers of syzygies.
struct Resolution {
  LeftModule M;
  std::vector<LeftModule> P;
  std::vector<std::vector<int>> vertices;  ///< cover vertices per step
  std::vector<Mat> d;                      ///< d[k] : P[k+1] -> P[k]
  Mat aug;                                 ///< P[0] -> M
  bool complete = false;  ///< the last syzygy computed was zero

  std::size_t terms() const { return P.size(); }
};

/// Computes the resolution up to P[max_steps] (or stops earlier when a syzygy
/// vanishes, setting `complete`).
Resolution minimal_resolution(const LeftModule& M, std::size_t max_steps);

/// Verifies aug . d[0] = 0 and d[k-1] . d[k] = 0, plus radical-minimality
/// (every differential lands inside the radical of its target).
void check_resolution(const Resolution& R);

}  // namespace forge
