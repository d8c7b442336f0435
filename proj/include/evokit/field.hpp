#pragma once

/**
 * @file field.hpp
 * @brief Exact scalar arithmetic over the rationals and odd prime fields.
 *
 * Two field types are provided, both satisfying the ExactField concept used by
 * every other header:
 *
 * - Rationals: arbitrary-precision fractions (GMP), always kept reduced with a
 *   positive denominator.
 * - PrimeField: residues modulo an odd prime p < 2^16. Each Residue carries its
 *   modulus, so mixing elements of different prime fields is detected.
 *
 * Characteristic 2 is rejected everywhere.
 */

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "evokit/error.hpp"

namespace evokit {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "a" or "a/b" with optional sign on either part.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den = 1;
      if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
      mpq_class q(num, den);
      q.canonicalize();
      return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::ParseError, "not a rational number: '" + s + "'");
    }
  }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }

  std::string str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
    return Rational(mpq_class(1 / value_));
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, a.str() + " / 0");
    return Rational(mpq_class(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

/// Element of F_p. The modulus travels with the value.
class Residue {
 public:
  Residue() = default;
  Residue(std::uint32_t value, std::uint32_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  std::string str() const { return std::to_string(value_); }

  Residue inverse() const {
    if (value_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 mod " + std::to_string(modulus_));
    // extended Euclid on small ints
    std::int64_t r0 = modulus_, r1 = value_, t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t t2 = t0 - q * t1;
      t0 = t1;
      t1 = t2;
    }
    if (t0 < 0) t0 += modulus_;
    return Residue(static_cast<std::uint32_t>(t0), modulus_);
  }

  friend Residue operator+(Residue a, Residue b) {
    check(a, b);
    std::uint32_t s = a.value_ + b.value_;
    return Residue(s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_);
  }
  friend Residue operator-(Residue a, Residue b) {
    check(a, b);
    return Residue(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_, a.modulus_);
  }
  friend Residue operator*(Residue a, Residue b) {
    check(a, b);
    return Residue(static_cast<std::uint32_t>((std::uint64_t{a.value_} * b.value_) % a.modulus_), a.modulus_);
  }
  friend Residue operator/(Residue a, Residue b) {
    check(a, b);
    return a * b.inverse();
  }
  Residue operator-() const { return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  Residue& operator+=(Residue o) { return *this = *this + o; }
  Residue& operator-=(Residue o) { return *this = *this - o; }
  Residue& operator*=(Residue o) { return *this = *this * o; }
  friend bool operator==(Residue a, Residue b) { return a.value_ == b.value_ && a.modulus_ == b.modulus_; }

  friend std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value_; }

 private:
  static void check(Residue a, Residue b) {
    if (a.modulus_ != b.modulus_) {
      throw Error(ErrorCode::FieldMismatch,
                  "F" + std::to_string(a.modulus_) + " vs F" + std::to_string(b.modulus_));
    }
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 3;
};

/// Serializable description of a field: "Q" or "F<p>".
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint32_t modulus = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) { return {Kind::PrimeField, p}; }

  static FieldSpec parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text.front() == 'F') {
      std::uint64_t p = 0;
      for (char c : text.substr(1)) {
        if (c < '0' || c > '9' || p > (1ULL << 32)) {
          throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(text) + "'");
        }
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      if (p > (1ULL << 32)) throw Error(ErrorCode::UnsupportedModulus, std::string(text));
      return prime(static_cast<std::uint32_t>(p));
    }
    throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(text) + "'");
  }

  std::string str() const { return kind == Kind::Rationals ? "Q" : "F" + std::to_string(modulus); }
  bool is_finite() const { return kind == Kind::PrimeField; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

class Rationals {
 public:
  using value_type = Rational;
  static constexpr bool finite = false;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long v) const { return Rational(static_cast<long>(v)); }
  Rational parse(std::string_view text) const { return Rational::parse(text); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

class PrimeField {
 public:
  using value_type = Residue;
  static constexpr bool finite = true;
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
    if (p >= kMaxModulus) throw Error(ErrorCode::UnsupportedModulus, "modulus must be below 65536");
  }

  std::uint32_t modulus() const { return p_; }
  std::uint32_t size() const { return p_; }
  Residue zero() const { return Residue(0, p_); }
  Residue one() const { return Residue(1, p_); }
  Residue from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Residue(static_cast<std::uint32_t>(r), p_);
  }
  /// i-th element in ascending residue order.
  Residue element(std::uint32_t i) const { return Residue(i, p_); }

  /// Accepts integers and fractions; "a/b" means a * b^-1.
  Residue parse(std::string_view text) const {
    Rational q = Rational::parse(text);
    Residue num = from_mpz(q.numerator());
    Residue den = from_mpz(q.denominator());
    if (den.is_zero()) {
      throw Error(ErrorCode::DivisionByZero, "'" + std::string(text) + "' has denominator divisible by " +
                                                 std::to_string(p_));
    }
    return num / den;
  }

  FieldSpec spec() const { return FieldSpec::prime(p_); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  Residue from_mpz(const mpz_class& z) const {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return Residue(static_cast<std::uint32_t>(r.get_ui()), p_);
  }

  std::uint32_t p_;
};

template <class F>
concept ExactField = std::equality_comparable<F> && requires(const F& f, const typename F::value_type& a,
                                                             std::string_view s) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(1) } -> std::same_as<typename F::value_type>;
  { f.parse(s) } -> std::same_as<typename F::value_type>;
  { f.spec() } -> std::same_as<FieldSpec>;
  { a + a } -> std::same_as<typename F::value_type>;
  { a - a } -> std::same_as<typename F::value_type>;
  { a * a } -> std::same_as<typename F::value_type>;
  { a / a } -> std::same_as<typename F::value_type>;
  { -a } -> std::same_as<typename F::value_type>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<typename F::value_type>;
  { a.str() } -> std::same_as<std::string>;
};

template <ExactField F>
using Scalar_t = typename F::value_type;

/// Runtime field handle, for code that only learns the field from input data.
using AnyField = std::variant<Rationals, PrimeField>;

inline AnyField make_field(const FieldSpec& spec) {
  if (spec.kind == FieldSpec::Kind::Rationals) return Rationals{};
  return PrimeField(spec.modulus);
}

/// A scalar of either field kind, as read from or written to files.
using Scalar = std::variant<Rational, Residue>;

enum class ArithOp { Add, Sub, Mul, Div };

inline Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  if (a.index() != b.index()) throw Error(ErrorCode::FieldMismatch, "rational combined with residue");
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        switch (op) {
          case ArithOp::Add: return x + y;
          case ArithOp::Sub: return x - y;
          case ArithOp::Mul: return x * y;
          case ArithOp::Div: return x / y;
        }
        return x;
      },
      a);
}

inline std::string to_string(const Scalar& s) {
  return std::visit([](const auto& x) { return x.str(); }, s);
}

inline Scalar parse_scalar(const FieldSpec& spec, std::string_view text) {
  return std::visit([&](const auto& f) -> Scalar { return f.parse(text); }, make_field(spec));
}

}  // namespace evokit
