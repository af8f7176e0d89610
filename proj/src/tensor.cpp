#include "forge/tensor.hpp"

#include "forge/ainfty.hpp"

#include <stdexcept>

namespace forge {

Scalar sign_of(const Field& F, long long e) {
  return ((e % 2 + 2) % 2 == 0) ? F.one() : -F.one();
}

long long slotwise_shift_exponent(const std::vector<int>& degs) {
  long long e = 0;
  const long long n = static_cast<long long>(degs.size());
  for (long long i = 0; i < n; ++i) e += (n - 1 - i) * degs[static_cast<std::size_t>(i)];
  return e;
}

long long shift_collation_exponent(int n) {
  return static_cast<long long>(n) * (n + 1) / 2;
}

std::size_t word_space_dim(const std::vector<std::size_t>& dims) {
  std::size_t d = 1;
  for (std::size_t x : dims) d *= x;
  return d;
}

std::size_t word_index(const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& idx) {
  if (dims.size() != idx.size()) throw std::invalid_argument("word_index: size mismatch");
  std::size_t w = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (idx[k] >= dims[k]) throw std::invalid_argument("word_index: out of range");
    w = w * dims[k] + idx[k];
  }
  return w;
}

std::vector<std::size_t> word_unindex(const std::vector<std::size_t>& dims,
                                      std::size_t w) {
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = w % dims[k];
    w /= dims[k];
  }
  if (w != 0) throw std::invalid_argument("word_unindex: out of range");
  return idx;
}

}  // namespace forge
