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

#pragma once

#include <string>
#include <vector>

#include "nihoperm/error.hpp"
#include "nihoperm/field.hpp"
#include "nihoperm/numtheory.hpp"

namespace nihoperm {

/// Largest m whose circle is materialized (2^24 + 1 words).
inline constexpr unsigned kMaxCircleM = 24;

/// The order-(2^m + 1) subgroup of GF(2^(2m))^*, i.e. the kernel of the
/// relative norm x -> x^(2^m + 1). Elements are stored as generator powers
/// g^0, g^1, ..., g^(2^m).
class UnitCircle {
 public:
  UnitCircle(Field field, unsigned m) : field_(std::move(field)), m_(m) {
    if (m == 0 || field_.degree() != 2 * m) {
      throw Error(ErrorCode::kDegreeMismatch, "unit circle for m=" + std::to_string(m) + " needs a field of degree " +
                                                  std::to_string(2 * m) + ", got " + field_.spec().ToString());
    }
    if (m > kMaxCircleM) throw Error(ErrorCode::kDomainTooLarge, "unit circle with m > 24");
    const Word size = (Word{1} << m) + 1;
    generator_ = field_.PowU(field_.primitive(), (Word{1} << m) - 1);
    if (field_.PowU(generator_, size) != 1) throw Error(ErrorCode::kInvalidArgument, "generator order check");
    for (auto p : nt::PrimeDivisors(size)) {
      if (field_.PowU(generator_, size / p) == 1) throw Error(ErrorCode::kInvalidArgument, "generator order check");
    }
    elements_.reserve(size);
    Word x = 1;
    for (Word i = 0; i < size; ++i) {
      elements_.push_back(x);
      x = field_.Mul(x, generator_);
    }
  }

  /// Circle inside GF(2^(2m)) under the default reduction polynomial.
  static UnitCircle OfM(unsigned m) { return UnitCircle(Field::OfDegree(2 * m), m); }

  const Field& field() const { return field_; }
  unsigned m() const { return m_; }
  Word size() const { return elements_.size(); }
  Word generator() const { return generator_; }

  /// x^(2^m + 1) = 1, computed as x^(2^m) * x.
  bool Contains(Word x) const { return x != 0 && field_.RelativeNorm(x, m_) == 1; }

  bool Contains(const FieldElement& x) const { return x.field().SameAs(field_) && Contains(x.bits()); }

  const std::vector<Word>& elements() const { return elements_; }

 private:
  Field field_;
  unsigned m_;
  Word generator_ = 1;
  std::vector<Word> elements_;
};

}  // namespace nihoperm
