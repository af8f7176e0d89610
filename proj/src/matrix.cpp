#include "forge/matrix.hpp"

#include <stdexcept>

namespace forge {

Mat::Mat(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field),
      data_(rows * cols, field.zero()) {}

Mat Mat::identity(std::size_t n, const Field& field) {
  Mat m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows,
                      const Field& field) {
  Mat m(rows, cols.size(), field);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: bad size");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::column(std::size_t j) const {
  Vec v(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_, field_.zero());
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: bad size");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
  Mat r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("Mat*Vec: shape mismatch");
  Vec r(rows_, field_.zero());
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape");
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator*(const Scalar& s) const {
  Mat r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  Mat r(a.rows_, a.cols_ + b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: col mismatch");
  Mat r(a.rows_ + b.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}};
  Mat& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
  RrefResult rr = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> cols;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
      v[rr.pivots[r]] = -rr.reduced.at(r, free);
    cols.push_back(v);
  }
  return Mat::from_columns(cols, m.cols(), f);
}

Mat image_basis(const Mat& m) {
  RrefResult rr = rref(m);
  std::vector<Vec> cols;
  for (auto p : rr.pivots) cols.push_back(m.column(p));
  return Mat::from_columns(cols, m.rows(), m.field());
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat aug = Mat::hstack(a, Mat::from_columns({b}, a.rows(), a.field()));
  RrefResult rr = rref(aug);
  const Field& f = a.field();
  Vec x(a.cols(), f.zero());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[rr.pivots[r]] = rr.reduced.at(r, a.cols());
  }
  return x;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  Mat aug = Mat::hstack(a, b);
  RrefResult rr = rref(aug);
  const Field& f = a.field();
  Mat x(a.cols(), b.cols(), f);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(rr.pivots[r], j) = rr.reduced.at(r, a.cols() + j);
  }
  return x;
}

Mat complement(const Mat& u) {
  const Field& f = u.field();
  std::size_t n = u.rows();
  Mat aug = Mat::hstack(u, Mat::identity(n, f));
  RrefResult rr = rref(aug);
  std::vector<Vec> cols;
  for (auto p : rr.pivots)
    if (p >= u.cols()) {
      Vec e(n, f.zero());
      e[p - u.cols()] = f.one();
      cols.push_back(e);
    }
  return Mat::from_columns(cols, n, f);
}

Mat complement_in(const Mat& u, const Mat& w) {
  Mat aug = Mat::hstack(u, w);
  RrefResult rr = rref(aug);
  std::vector<Vec> cols;
  for (auto p : rr.pivots)
    if (p >= u.cols()) cols.push_back(w.column(p - u.cols()));
  return Mat::from_columns(cols, w.rows(), w.field());
}

Mat intersect(const Mat& a, const Mat& b) {
  // x = a*s = b*t  <=>  [a | -b] (s,t)^T = 0.
  Mat ker = kernel_basis(Mat::hstack(a, -b));
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Vec s(a.cols(), a.field().zero());
    for (std::size_t i = 0; i < a.cols(); ++i) s[i] = ker.at(i, j);
    cols.push_back(a * s);
  }
  Mat raw = Mat::from_columns(cols, a.rows(), a.field());
  return image_basis(raw);
}

bool in_span(const Mat& m, const Vec& v) { return solve(m, v).has_value(); }

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  auto x = solve(m, Mat::identity(m.rows(), m.field()));
  if (!x || rank(m) != m.rows()) throw std::domain_error("inverse: singular matrix");
  return *x;
}

Vec scaled(const Vec& v, const Scalar& s) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec add: size");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec sub: size");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

Mat kron(const std::vector<Mat>& factors, const Field& field) {
  Mat acc = Mat::identity(1, field);
  for (const Mat& f : factors) {
    Mat next(acc.rows() * f.rows(), acc.cols() * f.cols(), field);
    for (std::size_t i = 0; i < acc.rows(); ++i)
      for (std::size_t j = 0; j < acc.cols(); ++j) {
        const Scalar& a = acc.at(i, j);
        if (a.is_zero()) continue;
        for (std::size_t p = 0; p < f.rows(); ++p)
          for (std::size_t q = 0; q < f.cols(); ++q) {
            const Scalar& b = f.at(p, q);
            if (!b.is_zero()) next.at(i * f.rows() + p, j * f.cols() + q) = a * b;
          }
      }
    acc = std::move(next);
  }
  return acc;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec zero_vec(std::size_t n, const Field& f) { return Vec(n, f.zero()); }

}  // namespace forge
