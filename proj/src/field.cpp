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

#include "bincurve/field.hpp"

#include <limits>

namespace bincurve {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(int v) {
  if (v != 0 && v != 1) throw std::logic_error("Fp literal without modulus must be 0 or 1");
  v_ = static_cast<std::uint32_t>(v);
}

Fp::Fp(std::int64_t v, std::uint32_t p) : p_(p) {
  if (p == 0) throw std::invalid_argument("Fp: zero modulus");
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

std::uint32_t Fp::common_modulus(const Fp& a, const Fp& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
    throw std::logic_error("Fp: mixing residues of different fields");
  return a.p_ != 0 ? a.p_ : b.p_;
}

Fp& Fp::operator+=(const Fp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  std::uint64_t s = std::uint64_t{v_} + o.v_;
  if (p != 0) s %= p;
  v_ = static_cast<std::uint32_t>(s);
  p_ = p;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    if (o.v_ > v_) throw std::logic_error("Fp: negative literal without modulus");
    v_ -= o.v_;
    return *this;
  }
  const std::uint64_t a = v_ % p;
  const std::uint64_t b = o.v_ % p;
  v_ = static_cast<std::uint32_t>((a + p - b) % p);
  p_ = p;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  std::uint64_t m = std::uint64_t{v_} * o.v_;
  if (p != 0) m %= p;
  v_ = static_cast<std::uint32_t>(m);
  p_ = p;
  return *this;
}

Fp Fp::operator-() const {
  Fp r = *this;
  if (p_ == 0) {
    if (v_ != 0) throw std::logic_error("Fp: negative literal without modulus");
    return r;
  }
  r.v_ = v_ == 0 ? 0 : p_ - v_;
  return r;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
  if (p_ == 0) return *this;  // literal 1
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = v_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return Fp(t, p_);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp r = p_ == 0 ? Fp(1) : Fp(1, p_);
  while (e != 0) {
    if (e & 1U) r *= base;
    base *= base;
    e >>= 1U;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  // mpz_class has no int64 constructor on every platform; go through strings.
  q_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

FieldCtx FieldCtx::prime(std::uint32_t p) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("prime field needs a prime p >= 5, got " + std::to_string(p));
  return FieldCtx(Kind::kPrimeField, p);
}

std::string to_string(const FieldCtx& ctx) {
  return ctx.is_prime_field() ? "F_" + std::to_string(ctx.characteristic()) : "Q";
}

std::vector<Fp> units(const FieldCtx& ctx) {
  if (!ctx.is_prime_field()) throw std::invalid_argument("units: the rationals have no finite unit group");
  std::vector<Fp> out;
  out.reserve(ctx.characteristic() - 1);
  for (std::uint32_t v = 1; v < ctx.characteristic(); ++v) out.emplace_back(v, ctx.characteristic());
  return out;
}

Fp FieldTraits<Fp>::parse(const FieldCtx& ctx, const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used, 10);
  } catch (const std::exception&) {
    throw std::invalid_argument("Fp: cannot parse '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("Fp: cannot parse '" + text + "'");
  if (v < 0 || v >= static_cast<long long>(ctx.characteristic()))
    throw std::invalid_argument("Fp: residue '" + text + "' outside [0, p)");
  return Fp(v, ctx.characteristic());
}

}  // namespace bincurve
