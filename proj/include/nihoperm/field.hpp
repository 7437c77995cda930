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
 * @file field.hpp
 * @brief Binary finite fields GF(2^k) in polynomial basis.
 *
 * A Field is an immutable, cheaply copyable handle to a context built from a
 * FieldSpec (degree k and an irreducible reduction polynomial). Elements are
 * k-bit words; bit i is the coefficient of x^i.
 *
 * Two layers are exposed:
 * - raw word arithmetic on Field (Mul, Inv, Pow, ...) for exhaustive sweeps,
 *   where carrying a context pointer per value would dominate the cost;
 * - FieldElement, a value type bound to its Field that rejects mixing
 *   elements of different fields.
 *
 * Multiplication uses log/exp tables when 2^k <= 2^22 and carry-less
 * shift-and-reduce otherwise. Both strategies are bit-exact.
 */

#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nihoperm/error.hpp"
#include "nihoperm/gf2x.hpp"
#include "nihoperm/numtheory.hpp"

namespace nihoperm {

using Word = std::uint64_t;

inline std::string ToHex(Word value) {
  std::array<char, 20> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, 16);
  return "0x" + std::string(buf.data(), end);
}

/// Parses "0x1f" or "1f" as a hexadecimal word.
inline Word ParseHex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  Word value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "bad hex value '" + std::string(text) + "'");
  }
  return value;
}

struct FieldSpec {
  unsigned degree = 1;
  Word reduction_poly = 0b11;

  /// Default representation: the lexicographically smallest irreducible.
  static FieldSpec Default(unsigned k) { return FieldSpec{k, gf2x::SmallestIrreducible(k)}; }

  /// Parses `k=<degree>,poly=0x<hex>`.
  static FieldSpec Parse(std::string_view text) {
    auto fail = [&]() -> FieldSpec {
      throw Error(ErrorCode::kParseError, "field spec must look like k=5,poly=0x25, got '" +
                                              std::string(text) + "'");
    };
    const auto comma = text.find(',');
    if (!text.starts_with("k=") || comma == std::string_view::npos) return fail();
    const auto deg_text = text.substr(2, comma - 2);
    auto rest = text.substr(comma + 1);
    if (!rest.starts_with("poly=")) return fail();
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(deg_text.data(), deg_text.data() + deg_text.size(), k);
    if (deg_text.empty() || ec != std::errc() || ptr != deg_text.data() + deg_text.size()) return fail();
    FieldSpec spec{k, ParseHex(rest.substr(5))};
    if (gf2x::Degree(spec.reduction_poly) != static_cast<int>(k)) {
      throw Error(ErrorCode::kParseError, "degree k=" + std::to_string(k) +
                                              " does not match polynomial " +
                                              ToHex(spec.reduction_poly));
    }
    return spec;
  }

  std::string ToString() const { return "k=" + std::to_string(degree) + ",poly=" + ToHex(reduction_poly); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

enum class MulStrategy { kTable, kShiftReduce };

inline constexpr unsigned kMaxTableDegree = 22;

namespace detail {

struct FieldData {
  FieldSpec spec;
  MulStrategy strategy = MulStrategy::kShiftReduce;
  Word mask = 0;
  Word order = 0;      // 2^k - 1, size of the multiplicative group
  Word low_poly = 0;   // reduction polynomial without its leading term
  Word primitive = 1;  // first primitive element in coefficient order
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  // XOR basis of the images of y -> y^2 + y keyed by pivot bit, with the
  // preimage tracked alongside; solves y^2 + y = c for even degree.
  std::vector<Word> artin_image;
  std::vector<Word> artin_preimage;
};

inline Word MulShiftReducePortable(Word a, Word b, const FieldData& f) {
  const unsigned k = f.spec.degree;
  const Word top = Word{1} << (k - 1);
  Word acc = 0;
  while (b != 0) {
    if (b & 1) acc ^= a;
    b >>= 1;
    const bool carry = (a & top) != 0;
    a = (a << 1) & f.mask;
    if (carry) a ^= f.low_poly;
  }
  return acc;
}

inline Word FoldReduce(gf2x::Wide p, const FieldData& f) {
  const unsigned k = f.spec.degree;
  for (Word hi = static_cast<Word>(p >> k); hi != 0; hi = static_cast<Word>(p >> k)) {
    p = (p & f.mask) ^ gf2x::ClMul(hi, f.low_poly);
  }
  return static_cast<Word>(p);
}

inline Word MulShiftReduce(Word a, Word b, const FieldData& f) {
  if (gf2x::HardwareClMulAvailable()) return FoldReduce(gf2x::ClMulHardware(a, b), f);
  return MulShiftReducePortable(a, b, f);
}

inline Word MulTable(Word a, Word b, const FieldData& f) {
  if (a == 0 || b == 0) return 0;
  Word s = Word{f.log_table[a]} + f.log_table[b];
  if (s >= f.order) s -= f.order;
  return f.exp_table[s];
}

}  // namespace detail

class FieldElement;

/// Immutable GF(2^k) context; copies share one underlying table set.
class Field {
 public:
  explicit Field(const FieldSpec& spec, std::optional<MulStrategy> strategy = std::nullopt) {
    auto data = std::make_shared<detail::FieldData>();
    const unsigned k = spec.degree;
    if (k < 1 || k > gf2x::kMaxDegree) {
      throw Error(ErrorCode::kInvalidArgument, "field degree must be in [1, 63], got " + std::to_string(k));
    }
    if (gf2x::Degree(spec.reduction_poly) != static_cast<int>(k)) {
      throw Error(ErrorCode::kInvalidArgument, "reduction polynomial " + ToHex(spec.reduction_poly) +
                                                   " is not of degree " + std::to_string(k));
    }
    if ((spec.reduction_poly & 1) == 0) {
      if (k == 1) throw Error(ErrorCode::kInvalidArgument, "reduction polynomial needs a constant term");
      throw Error(ErrorCode::kReduciblePolynomial, ToHex(spec.reduction_poly) + " is divisible by x");
    }
    if (!gf2x::IsIrreducible(spec.reduction_poly)) {
      throw Error(ErrorCode::kReduciblePolynomial, ToHex(spec.reduction_poly) + " factors over GF(2)");
    }
    data->spec = spec;
    data->mask = (Word{1} << k) - 1;
    data->order = data->mask;
    data->low_poly = spec.reduction_poly & data->mask;
    data->strategy = MulStrategy::kShiftReduce;

    const MulStrategy wanted = strategy.value_or(k <= kMaxTableDegree ? MulStrategy::kTable : MulStrategy::kShiftReduce);
    if (wanted == MulStrategy::kTable && k > kMaxTableDegree) {
      throw Error(ErrorCode::kInvalidArgument, "table strategy needs degree <= 22");
    }
    data_ = data;
    data->primitive = FindPrimitive();
    if (wanted == MulStrategy::kTable) BuildTables(*data);
    BuildArtinSolver(*data);
    data->strategy = wanted;
  }

  /// GF(2^k) under the default reduction polynomial.
  static Field OfDegree(unsigned k, std::optional<MulStrategy> strategy = std::nullopt) {
    return Field(FieldSpec::Default(k), strategy);
  }

  const FieldSpec& spec() const { return data_->spec; }
  unsigned degree() const { return data_->spec.degree; }
  MulStrategy strategy() const { return data_->strategy; }
  /// Number of elements, 2^k.
  Word size() const { return data_->mask + 1; }
  Word mask() const { return data_->mask; }
  /// 2^k - 1.
  Word order() const { return data_->order; }
  Word primitive() const { return data_->primitive; }

  bool SameAs(const Field& other) const { return data_ == other.data_ || data_->spec == other.data_->spec; }
  bool IsMember(Word a) const { return (a & ~data_->mask) == 0; }

  Word Add(Word a, Word b) const { return a ^ b; }

  Word Mul(Word a, Word b) const {
    return data_->strategy == MulStrategy::kTable ? detail::MulTable(a, b, *data_)
                                                  : detail::MulShiftReduce(a, b, *data_);
  }

  Word Square(Word a) const { return Mul(a, a); }

  Word Inv(Word a) const {
    if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
    if (data_->strategy == MulStrategy::kTable) {
      const Word l = data_->log_table[a];
      return data_->exp_table[l == 0 ? 0 : data_->order - l];
    }
    return PowU(a, data_->order - 1);
  }

  Word Div(Word a, Word b) const { return Mul(a, Inv(b)); }

  /// a^e for e >= 0; 0^0 = 1.
  Word PowU(Word a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e %= data_->order;
    Word result = 1;
    while (e != 0) {
      if (e & 1) result = Mul(result, a);
      a = Mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// a^e; negative exponents go through the inverse.
  Word Pow(Word a, std::int64_t e) const {
    if (e >= 0) return PowU(a, static_cast<std::uint64_t>(e));
    if (a == 0) throw Error(ErrorCode::kDivisionByZero, "negative power of zero");
    return PowU(Inv(a), std::uint64_t{0} - static_cast<std::uint64_t>(e));
  }

  /// a^(2^j).
  Word Frobenius(Word a, std::uint64_t j) const {
    j %= degree();
    for (std::uint64_t i = 0; i < j; ++i) a = Mul(a, a);
    return a;
  }

  /// Absolute trace to GF(2); always 0 or 1.
  Word Trace(Word a) const {
    Word acc = a;
    for (unsigned j = 1; j < degree(); ++j) {
      a = Mul(a, a);
      acc ^= a;
    }
    return acc;
  }

  /// Sum of a^(4^i), i = 0..(k-1)/2; solves y^2 + y = a when k is odd and
  /// Trace(a) = 0.
  Word HalfTrace(Word a) const {
    if (degree() % 2 == 0) throw Error(ErrorCode::kInvalidArgument, "half-trace needs odd degree");
    Word acc = a;
    for (unsigned i = 1; i <= (degree() - 1) / 2; ++i) {
      a = Mul(a, a);
      a = Mul(a, a);
      acc ^= a;
    }
    return acc;
  }

  /// a^(2^m + 1); for degree 2m this lands in the subfield GF(2^m).
  Word RelativeNorm(Word a, unsigned m) const { return Mul(Frobenius(a, m), a); }

  bool InSubfield(Word a, unsigned m) const { return Frobenius(a, m) == a; }

  /// Roots of x^2 + a x + b in ascending order (0, 1 or 2 of them).
  std::vector<Word> SolveQuadratic(Word a, Word b) const {
    if (a == 0) return {Frobenius(b, degree() - 1)};
    const Word a_inv = Inv(a);
    const Word c = Mul(b, Mul(a_inv, a_inv));
    if (Trace(c) != 0) return {};
    const Word y = degree() % 2 == 1 ? HalfTrace(c) : SolveArtinSchreier(c);
    Word r0 = Mul(a, y), r1 = Mul(a, y ^ 1);
    if (r0 > r1) std::swap(r0, r1);
    return {r0, r1};
  }

  /// Some y with y^2 + y = c, using the precomputed linear-algebra basis;
  /// nullopt when Trace(c) = 1.
  std::optional<Word> TrySolveArtinSchreier(Word c) const {
    Word y = 0;
    for (int bit = static_cast<int>(degree()) - 1; bit >= 0; --bit) {
      if (((c >> bit) & 1) == 0) continue;
      if (data_->artin_image[bit] == 0) return std::nullopt;
      c ^= data_->artin_image[bit];
      y ^= data_->artin_preimage[bit];
    }
    return y;
  }

  FieldElement Element(Word bits) const;
  FieldElement Zero() const;
  FieldElement One() const;
  /// The class of x, i.e. the word 0b10 (or 1 in GF(2)).
  FieldElement X() const;

 private:
  Word SolveArtinSchreier(Word c) const {
    auto y = TrySolveArtinSchreier(c);
    if (!y) throw Error(ErrorCode::kInvalidArgument, "y^2 + y = c has no solution");
    return *y;
  }

  // Runs while the context still multiplies by shift-and-reduce.
  Word FindPrimitive() const {
    const auto primes = nt::PrimeDivisors(order());
    for (Word g = 1; g <= mask(); ++g) {
      bool primitive = true;
      for (auto p : primes) {
        if (PowU(g, order() / p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) return g;
    }
    throw Error(ErrorCode::kInvalidArgument, "no primitive element");
  }

  static void BuildTables(detail::FieldData& f) {
    const Word size = f.mask + 1;
    f.exp_table.assign(f.order, 0);
    f.log_table.assign(size, 0);
    Word v = 1;
    for (Word i = 0; i < f.order; ++i) {
      f.exp_table[i] = static_cast<std::uint32_t>(v);
      f.log_table[v] = static_cast<std::uint32_t>(i);
      v = detail::MulShiftReduce(v, f.primitive, f);
    }
  }

  static void BuildArtinSolver(detail::FieldData& f) {
    const unsigned k = f.spec.degree;
    f.artin_image.assign(k, 0);
    f.artin_preimage.assign(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      const Word e = Word{1} << i;
      Word img = detail::MulShiftReduce(e, e, f) ^ e;
      Word pre = e;
      for (int bit = static_cast<int>(k) - 1; bit >= 0 && img != 0; --bit) {
        if (((img >> bit) & 1) == 0) continue;
        if (f.artin_image[bit] == 0) {
          f.artin_image[bit] = img;
          f.artin_preimage[bit] = pre;
          break;
        }
        img ^= f.artin_image[bit];
        pre ^= f.artin_preimage[bit];
      }
    }
  }

  std::shared_ptr<const detail::FieldData> data_;
};

/// A value of GF(2^k) bound to its field.
class FieldElement {
 public:
  FieldElement(Field field, Word bits) : field_(std::move(field)), bits_(bits) {
    if (!field_.IsMember(bits_)) {
      throw Error(ErrorCode::kInvalidArgument, nihoperm::ToHex(bits_) + " has bits at or above the field degree");
    }
  }

  const Field& field() const { return field_; }
  Word bits() const { return bits_; }
  bool IsZero() const { return bits_ == 0; }
  std::string ToHex() const { return nihoperm::ToHex(bits_); }

  FieldElement Inv() const { return {field_, field_.Inv(bits_)}; }
  FieldElement Pow(std::int64_t e) const { return {field_, field_.Pow(bits_, e)}; }
  FieldElement Frobenius(std::uint64_t j) const { return {field_, field_.Frobenius(bits_, j)}; }
  FieldElement Trace() const { return {field_, field_.Trace(bits_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    CheckSame(a, b);
    return {a.field_, a.bits_ ^ b.bits_};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    CheckSame(a, b);
    return {a.field_, a.field_.Mul(a.bits_, b.bits_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    CheckSame(a, b);
    return {a.field_, a.field_.Div(a.bits_, b.bits_)};
  }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.bits_ == b.bits_ && a.field_.SameAs(b.field_);
  }

 private:
  static void CheckSame(const FieldElement& a, const FieldElement& b) {
    if (!a.field_.SameAs(b.field_)) {
      throw Error(ErrorCode::kContextMismatch,
                  "elements of " + a.field_.spec().ToString() + " and " + b.field_.spec().ToString());
    }
  }

  Field field_;
  Word bits_;
};

inline FieldElement Field::Element(Word bits) const { return {*this, bits}; }
inline FieldElement Field::Zero() const { return {*this, 0}; }
inline FieldElement Field::One() const { return {*this, 1}; }
inline FieldElement Field::X() const { return {*this, degree() == 1 ? Word{1} : Word{2}}; }

/// Element-level spelling of Field::SolveQuadratic.
inline std::vector<FieldElement> SolveQuadratic(const FieldElement& a, const FieldElement& b) {
  if (!a.field().SameAs(b.field())) throw Error(ErrorCode::kContextMismatch, "SolveQuadratic");
  std::vector<FieldElement> roots;
  for (Word r : a.field().SolveQuadratic(a.bits(), b.bits())) roots.emplace_back(a.field(), r);
  return roots;
}

}  // namespace nihoperm
