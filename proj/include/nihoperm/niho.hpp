// Copyright 2026 The nihoperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file niho.hpp
 * @brief Trinomials x + x^(s(2^m-1)+1) + x^(t(2^m-1)+1) over GF(2^(2m)).
 *
 * With (s, t) = (4/11, 10/11) mod 2^m + 1 the trinomial is x * h(x^(2^m-1))
 * for h(x) = 1 + x^s + x^t. On the unit circle the induced map
 * x -> x h(x)^(2^m-1) becomes x^11 (1 + x^4 + x^10)^(2^m-1), which equals
 *
 *     (x^11 + x^7 + x) / (x^10 + x^4 + 1)
 *
 * whenever the denominator is nonzero. It is a bijection of the circle iff
 *
 *     F_t(x) = x^11 + t x^10 + x^7 + t x^4 + x + t
 *
 * has exactly one root on the circle for every circle element t.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "nihoperm/error.hpp"
#include "nihoperm/field.hpp"
#include "nihoperm/numtheory.hpp"
#include "nihoperm/parallel.hpp"
#include "nihoperm/poly.hpp"
#include "nihoperm/unit_circle.hpp"

namespace nihoperm {

inline constexpr unsigned kMaxNihoM = 31;

/// How much the theorem says about a given m.
enum class Regime {
  kProved,         // gcd(m, 5) = 1
  kNotInvertible,  // 11 divides 2^m + 1, i.e. m = 5 mod 10
  kOutOfTheorem,   // 5 | m but 11 is still invertible (m = 10, 20, ...)
};

constexpr std::string_view RegimeName(Regime r) {
  switch (r) {
    case Regime::kProved: return "proved";
    case Regime::kNotInvertible: return "not-invertible";
    case Regime::kOutOfTheorem: return "out-of-theorem";
  }
  return "unknown";
}

inline Regime ClassifyRegime(unsigned m) {
  if (std::gcd(m, 5u) == 1) return Regime::kProved;
  const Word modulus = (Word{1} << m) + 1;
  return modulus % 11 == 0 ? Regime::kNotInvertible : Regime::kOutOfTheorem;
}

struct ExponentPair {
  Word modulus = 0;  // 2^m + 1
  Word s = 0;
  Word t = 0;
};

/// (s, t) = (4 * 11^-1, 10 * 11^-1) mod 2^m + 1.
inline ExponentPair ConjectureExponents(unsigned m) {
  if (m < 1 || m > kMaxNihoM) throw Error(ErrorCode::kInvalidArgument, "m must be in [1, 31]");
  const Word modulus = (Word{1} << m) + 1;
  const auto inv11 = nt::InverseMod(11, modulus);
  if (!inv11) {
    throw Error(ErrorCode::kNotInvertible, "11 is not invertible modulo 2^" + std::to_string(m) + " + 1 = " +
                                               std::to_string(modulus));
  }
  return {modulus, nt::MulMod(4, *inv11, modulus), nt::MulMod(10, *inv11, modulus)};
}

/// f(x) = x + x^(e_s) + x^(e_t) with e = r (2^m - 1) + 1.
class NihoTrinomial {
 public:
  NihoTrinomial(unsigned m, Word s, Word t) : m_(m) {
    if (m < 1 || m > kMaxNihoM) throw Error(ErrorCode::kInvalidArgument, "m must be in [1, 31]");
    const Word modulus = (Word{1} << m) + 1;
    s_ = s % modulus;
    t_ = t % modulus;
    exp_s_ = NihoExponent(s_);
    exp_t_ = NihoExponent(t_);
  }

  static NihoTrinomial Conjecture(unsigned m) {
    const auto e = ConjectureExponents(m);
    return {m, e.s, e.t};
  }

  unsigned m() const { return m_; }
  Word s() const { return s_; }
  Word t() const { return t_; }
  Word exponent_s() const { return exp_s_; }
  Word exponent_t() const { return exp_t_; }

  /// Terms that collide cancel in characteristic two; nothing is special-cased.
  Word Eval(const Field& field, Word x) const {
    RequireField(field);
    return x ^ field.PowU(x, exp_s_) ^ field.PowU(x, exp_t_);
  }

  FieldElement Eval(const FieldElement& x) const { return {x.field(), Eval(x.field(), x.bits())}; }

  /// h with f(x) = x * h(x^(2^m - 1)): h(x) = 1 + x^s + x^t.
  UniPoly CircleFactor(const Field& field) const {
    RequireField(field);
    std::vector<Word> c(std::max(s_, t_) + 1, 0);
    c[0] ^= 1;
    c[s_] ^= 1;
    c[t_] ^= 1;
    return {field, std::move(c)};
  }

 private:
  // Representative in [1, 2^(2m) - 1] so that 0 still maps to 0.
  Word NihoExponent(Word r) const {
    const Word q1 = (Word{1} << (2 * m_)) - 1;
    const Word e = (r * ((Word{1} << m_) - 1) + 1) % q1;
    return e == 0 ? q1 : e;
  }

  void RequireField(const Field& field) const {
    if (field.degree() != 2 * m_) {
      throw Error(ErrorCode::kDegreeMismatch, "trinomial for m=" + std::to_string(m_) + " evaluated in " +
                                                  field.spec().ToString());
    }
  }

  unsigned m_;
  Word s_ = 0, t_ = 0;
  Word exp_s_ = 1, exp_t_ = 1;
};

struct CircleMapSpec {
  UniPoly numerator;    // x^11 + x^7 + x
  UniPoly denominator;  // x^10 + x^4 + 1

  explicit CircleMapSpec(const Field& field)
      : numerator(UniPoly::Parse(field, "11:1,7:1,1:1")), denominator(UniPoly::Parse(field, "10:1,4:1,0:1")) {}
};

namespace detail {

inline void RequireOnCircle(const UnitCircle& circle, Word x, const char* what) {
  if (!circle.Contains(x)) throw Error(ErrorCode::kNotOnCircle, std::string(what) + ": " + ToHex(x));
}

}  // namespace detail

/// (x^11 + x^7 + x) / (x^10 + x^4 + 1) for x on the circle.
inline Word CircleMapEval(const UnitCircle& circle, Word x) {
  detail::RequireOnCircle(circle, x, "CircleMapEval");
  const CircleMapSpec spec(circle.field());
  const Word den = spec.denominator.Eval(x);
  if (den == 0) {
    throw Error(ErrorCode::kDenominatorVanished, "x^10 + x^4 + 1 vanishes at " + ToHex(x) + " (m=" +
                                                     std::to_string(circle.m()) + ")");
  }
  return circle.field().Div(spec.numerator.Eval(x), den);
}

inline FieldElement CircleMapEval(const UnitCircle& circle, const FieldElement& x) {
  detail::RequireSameField(circle.field(), x.field(), "CircleMapEval");
  return {circle.field(), CircleMapEval(circle, x.bits())};
}

/// x^11 (1 + x^4 + x^10)^(2^m - 1); agrees with CircleMapEval on the circle.
inline Word CircleMapPowerForm(const UnitCircle& circle, Word x) {
  detail::RequireOnCircle(circle, x, "CircleMapPowerForm");
  const Field& f = circle.field();
  const Word inner = 1 ^ f.PowU(x, 4) ^ f.PowU(x, 10);
  return f.Mul(f.PowU(x, 11), f.PowU(inner, (Word{1} << circle.m()) - 1));
}

/// F_t(x) = x^11 + t x^10 + x^7 + t x^4 + x + t.
inline UniPoly FtPolynomial(const Field& field, Word t) {
  std::vector<Word> c(12, 0);
  c[11] = 1;
  c[10] = t;
  c[7] = 1;
  c[4] = t;
  c[1] = 1;
  c[0] = t;
  return {field, std::move(c)};
}

/// Number of circle elements x with F_t(x) = 0.
inline std::size_t CircleRootCount(const UnitCircle& circle, Word t) {
  detail::RequireOnCircle(circle, t, "CircleRootCount");
  return RootsInSet(FtPolynomial(circle.field(), t), circle.elements()).size();
}

inline std::size_t CircleRootCount(const UnitCircle& circle, const FieldElement& t) {
  detail::RequireSameField(circle.field(), t.field(), "CircleRootCount");
  return CircleRootCount(circle, t.bits());
}

/// Root counts of F_t on the circle for every circle t, in enumeration
/// order. Uses F_t(x) = N(x) + t D(x) with N = x^11 + x^7 + x and
/// D = x^10 + x^4 + 1 precomputed once per x, so each (t, x) pair costs a
/// single multiplication.
inline std::vector<std::uint32_t> CircleRootCounts(const UnitCircle& circle, unsigned parallelism = 1) {
  const CircleMapSpec spec(circle.field());
  const auto& mu = circle.elements();
  std::vector<Word> num(mu.size()), den(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    num[i] = spec.numerator.Eval(mu[i]);
    den[i] = spec.denominator.Eval(mu[i]);
  }
  const Field& f = circle.field();
  auto chunks = MapChunks(mu.size(), parallelism, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> counts;
    counts.reserve(hi - lo);
    for (std::uint64_t ti = lo; ti < hi; ++ti) {
      const Word t = mu[ti];
      std::uint32_t count = 0;
      for (std::size_t i = 0; i < mu.size(); ++i) count += (num[i] ^ f.Mul(t, den[i])) == 0;
      counts.push_back(count);
    }
    return counts;
  });
  std::vector<std::uint32_t> all;
  all.reserve(mu.size());
  for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  return all;
}

}  // namespace nihoperm
