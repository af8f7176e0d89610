#include "forge/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace forge {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

BigInt mod_inverse(const BigInt& a, const BigInt& p) {
  // Extended Euclid on (a mod p, p).
  BigInt r0 = a % p;
  if (r0 < 0) r0 += p;
  if (r0 == 0) throw std::domain_error("mod_inverse: zero has no inverse");
  BigInt r1 = p;
  BigInt s0 = 1, s1 = 0;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: modulus not prime to value");
  s0 %= p;
  if (s0 < 0) s0 += p;
  return s0;
}

void Scalar::normalize() {
  if (den_ == 0) throw std::domain_error("Scalar: zero denominator");
  if (chr_ == 0) {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = big_gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  } else {
    BigInt p(chr_);
    if (den_ != 1) {
      BigInt inv = mod_inverse(den_, p);
      num_ *= inv;
      den_ = 1;
    }
    num_ %= p;
    if (num_ < 0) num_ += p;
  }
}

Scalar Scalar::make_rational(BigInt num, BigInt den, std::uint32_t chr) {
  return Scalar(std::move(num), std::move(den), chr, true);
}

Scalar Scalar::integer(long long v, std::uint32_t chr) {
  return Scalar(BigInt(v), BigInt(1), chr, true);
}

std::uint32_t Scalar::join_chr(const Scalar& a, const Scalar& b) {
  if (a.chr_ == b.chr_) return a.chr_;
  if (!a.tagged_ && a.chr_ == 0) return b.chr_;
  if (!b.tagged_ && b.chr_ == 0) return a.chr_;
  throw std::logic_error("Scalar: mixed characteristics " + std::to_string(a.chr_) +
                         " and " + std::to_string(b.chr_));
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, chr_, tagged_); }

Scalar Scalar::operator+(const Scalar& o) const {
  std::uint32_t c = join_chr(*this, o);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_, c, true);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  std::uint32_t c = join_chr(*this, o);
  return Scalar(num_ * o.num_, den_ * o.den_, c, true);
}

Scalar Scalar::operator/(const Scalar& o) const {
  std::uint32_t c = join_chr(*this, o);
  if (o.num_ == 0) throw std::domain_error("Scalar: division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_, c, true);
}

Scalar Scalar::inverse() const {
  if (num_ == 0) throw std::domain_error("Scalar: inverse of zero");
  return Scalar(den_, num_, chr_, true);
}

bool Scalar::operator==(const Scalar& o) const {
  if (chr_ != o.chr_ && tagged_ && o.tagged_)
    throw std::logic_error("Scalar: comparing different characteristics");
  return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (chr_ == 0) {
    os << num_;
    if (den_ != 1) os << "/" << den_;
  } else {
    os << num_ << " mod " << chr_;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

bool probable_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field::Field(std::uint32_t characteristic) : chr_(characteristic) {
  if (chr_ != 0 && !probable_prime(chr_))
    throw std::invalid_argument("Field: characteristic must be 0 or prime, got " +
                                std::to_string(chr_));
}

Scalar Field::parse(const std::string& text) const {
  std::string t;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  auto mod_pos = t.find("mod");
  if (mod_pos != std::string::npos) {
    BigInt r(t.substr(0, mod_pos));
    BigInt p(t.substr(mod_pos + 3));
    if (chr_ == 0 || BigInt(chr_) != p)
      throw std::invalid_argument("scalar modulus " + p.str() +
                                  " does not match field characteristic " +
                                  std::to_string(chr_));
    return Scalar::make_rational(r, 1, chr_);
  }
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    BigInt n(t.substr(0, slash));
    BigInt d(t.substr(slash + 1));
    return Scalar::make_rational(n, d, chr_);
  }
  return Scalar::make_rational(BigInt(t), 1, chr_);
}

}  // namespace forge
