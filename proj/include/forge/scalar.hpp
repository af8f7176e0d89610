#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace forge {

using BigInt = boost::multiprecision::cpp_int;

/// Exact field element.  Characteristic 0 elements are arbitrary-precision
/// rationals; characteristic p elements are residues in GF(p) (p prime,
/// denominator kept at 1, numerator normalized into [0, p)).
///
/// Every value carries its characteristic.  Mixing characteristics is an
/// error, except that an exact integer zero/one built without a field tag
/// promotes to the other operand's characteristic (so default-constructed
/// zeros are safe to accumulate into).
class Scalar {
public:
  Scalar() : num_(0), den_(1), chr_(0), tagged_(false) {}

  static Scalar make_rational(BigInt num, BigInt den, std::uint32_t chr);
  static Scalar integer(long long v, std::uint32_t chr);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  std::uint32_t characteristic() const { return chr_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form: "n" or "n/d" in characteristic 0, "r mod p" in GF(p).
  std::string str() const;

private:
  Scalar(BigInt num, BigInt den, std::uint32_t chr, bool tagged)
      : num_(std::move(num)), den_(std::move(den)), chr_(chr), tagged_(tagged) {
    normalize();
  }
  void normalize();
  static std::uint32_t join_chr(const Scalar& a, const Scalar& b);

  BigInt num_;
  BigInt den_;
  std::uint32_t chr_;
  bool tagged_;  // false for bare integer literals; they adopt the partner's field
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Field descriptor: characteristic 0 (rationals) or a prime p (GF(p)).
class Field {
public:
  explicit Field(std::uint32_t characteristic = 0);

  std::uint32_t characteristic() const { return chr_; }
  Scalar zero() const { return Scalar::integer(0, chr_); }
  Scalar one() const { return Scalar::integer(1, chr_); }
  Scalar integer(long long v) const { return Scalar::integer(v, chr_); }
  Scalar rational(long long num, long long den) const {
    return Scalar::make_rational(BigInt(num), BigInt(den), chr_);
  }

  /// Parses "n", "-n/m", or "r mod p"; validates the modulus against the field.
  Scalar parse(const std::string& text) const;

  bool operator==(const Field& o) const { return chr_ == o.chr_; }

private:
  std::uint32_t chr_;
};

/// Modular inverse of a modulo p (p prime); throws if a ≡ 0.
BigInt mod_inverse(const BigInt& a, const BigInt& p);

}  // namespace forge
