#include "forge/resolution.hpp"

#include <stdexcept>

namespace forge {

Resolution minimal_resolution(const LeftModule& M, std::size_t max_steps) {
  Resolution R;
  R.M = M;
  Cover c0 = projective_cover(M);
  R.P.push_back(c0.P);
  R.vertices.push_back(c0.vertices);
  R.aug = c0.map;

  Mat cur = R.aug;  // P[k] -> (previous step), kernel = next syzygy
  for (std::size_t k = 1; k <= max_steps; ++k) {
    Mat K = kernel_basis(cur);
    if (K.cols() == 0) {
      R.complete = true;
      break;
    }
    Submodule syz = submodule_on(R.P.back(), K);
    Cover c = projective_cover(syz.mod);
    Mat dk = syz.inclusion * c.map;
    R.P.push_back(c.P);
    R.vertices.push_back(c.vertices);
    R.d.push_back(dk);
    cur = dk;
  }
  if (!R.complete && kernel_basis(cur).cols() == 0) R.complete = true;
  return R;
}

void check_resolution(const Resolution& R) {
  if (R.P.empty()) throw std::logic_error("check_resolution: empty resolution");
  if (!R.d.empty()) {
    if (!(R.aug * R.d[0]).is_zero())
      throw std::logic_error("check_resolution: aug . d[0] != 0");
  }
  for (std::size_t k = 1; k < R.d.size(); ++k)
    if (!(R.d[k - 1] * R.d[k]).is_zero())
      throw std::logic_error("check_resolution: d.d != 0 at step " + std::to_string(k));
  for (std::size_t k = 0; k < R.d.size(); ++k) {
    Mat rad = radical_submodule(R.P[k]);
    for (std::size_t j = 0; j < R.d[k].cols(); ++j)
      if (!in_span(rad, R.d[k].column(j)))
        throw std::logic_error("check_resolution: differential not radical-valued at step " +
                               std::to_string(k + 1));
  }
}

}  // namespace forge
