// Copyright 2026 The bincurve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact scalar types: prime-field residues and unbounded rationals.
//
// Both are plain value types usable as Eigen scalars. An Fp carries its own
// modulus so that matrix code needs no side channel; the only values allowed
// without a modulus are the literals 0 and 1 that Eigen itself creates.

#ifndef BINCURVE_FIELD_HPP
#define BINCURVE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bincurve {

bool is_prime(std::uint64_t n);

class Fp {
 public:
  Fp() = default;
  // Modulus-free literal; only 0 and 1 are meaningful here.
  Fp(int v);  // NOLINT(google-explicit-constructor)
  Fp(std::int64_t v, std::uint32_t p);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const;

  // Residues compare by value; a literal 0 equals the zero of any field.
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) {
    return a.v_ <=> b.v_;
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  static std::uint32_t common_modulus(const Fp& a, const Fp& b);

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "n" or "n/d" in base 10.
  static Rational parse(const std::string& text);

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

// Which exact field a computation runs over.
class FieldCtx {
 public:
  enum class Kind { kRationals, kPrimeField };

  static FieldCtx rationals() { return FieldCtx(Kind::kRationals, 0); }
  // Requires p prime and p >= 5.
  static FieldCtx prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::kPrimeField; }
  std::uint32_t characteristic() const { return p_; }

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  FieldCtx(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

std::string to_string(const FieldCtx& ctx);

// The p-1 nonzero residues in ascending order. Throws for the rationals.
std::vector<Fp> units(const FieldCtx& ctx);

// Per-scalar glue between a FieldCtx and the scalar type that realizes it.
template <class Scalar>
struct FieldTraits;

template <>
struct FieldTraits<Fp> {
  static constexpr bool kFinite = true;
  static bool accepts(const FieldCtx& ctx) { return ctx.is_prime_field(); }
  static Fp make(const FieldCtx& ctx, std::int64_t v) { return Fp(v, ctx.characteristic()); }
  static Fp parse(const FieldCtx& ctx, const std::string& text);
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool kFinite = false;
  static bool accepts(const FieldCtx& ctx) { return !ctx.is_prime_field(); }
  static Rational make(const FieldCtx&, std::int64_t v) { return Rational(v, 1); }
  static Rational parse(const FieldCtx&, const std::string& text) { return Rational::parse(text); }
};

template <class Scalar>
Scalar make_scalar(const FieldCtx& ctx, std::int64_t v) {
  return FieldTraits<Scalar>::make(ctx, v);
}

// Factorial as a field element; used for formal derivative rows.
template <class Scalar>
Scalar factorial(const FieldCtx& ctx, int n) {
  Scalar r = make_scalar<Scalar>(ctx, 1);
  for (int k = 2; k <= n; ++k) r *= make_scalar<Scalar>(ctx, k);
  return r;
}

template <class Scalar>
Scalar power(const Scalar& base, int e, const Scalar& one) {
  Scalar r = one;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace bincurve

#endif  // BINCURVE_FIELD_HPP
