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

// Dense univariate and bivariate polynomials over a binary field. All
// polynomials here have small degree (a dozen terms at most), so plain
// coefficient vectors are used throughout.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nihoperm/error.hpp"
#include "nihoperm/field.hpp"

namespace nihoperm {

namespace detail {

inline void RequireSameField(const Field& a, const Field& b, const char* what) {
  if (!a.SameAs(b)) {
    throw Error(ErrorCode::kContextMismatch,
                std::string(what) + ": " + a.spec().ToString() + " vs " + b.spec().ToString());
  }
}

}  // namespace detail

/// Univariate polynomial; coeffs[i] is the coefficient of x^i. The leading
/// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(std::move(field)) {}

  UniPoly(Field field, std::vector<Word> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Word c : coeffs_) {
      if (!field_.IsMember(c)) throw Error(ErrorCode::kInvalidArgument, "coefficient " + ToHex(c) + " not in field");
    }
    Normalize();
  }

  static UniPoly Monomial(const Field& field, Word coeff, std::size_t degree) {
    std::vector<Word> c(degree + 1, 0);
    c[degree] = coeff;
    return {field, std::move(c)};
  }

  /// Parses the `deg:coeff_hex` literal, e.g. "11:1,10:1f,0:3".
  static UniPoly Parse(const Field& field, std::string_view text) {
    std::vector<Word> coeffs;
    std::vector<bool> seen;
    while (!text.empty()) {
      const auto comma = text.find(',');
      const auto term = text.substr(0, comma);
      text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
      const auto colon = term.find(':');
      if (colon == std::string_view::npos) {
        throw Error(ErrorCode::kParseError, "term '" + std::string(term) + "' is not deg:coeff");
      }
      std::size_t deg = 0;
      auto [ptr, ec] = std::from_chars(term.data(), term.data() + colon, deg);
      if (colon == 0 || ec != std::errc() || ptr != term.data() + colon) {
        throw Error(ErrorCode::kParseError, "bad degree in term '" + std::string(term) + "'");
      }
      if (deg >= coeffs.size()) {
        coeffs.resize(deg + 1, 0);
        seen.resize(deg + 1, false);
      }
      if (seen[deg]) throw Error(ErrorCode::kParseError, "degree " + std::to_string(deg) + " repeated");
      seen[deg] = true;
      coeffs[deg] = ParseHex(term.substr(colon + 1));
    }
    return {field, std::move(coeffs)};
  }

  /// Inverse of Parse, descending degree, zero terms omitted; "0:0" for zero.
  std::string ToString() const {
    if (IsZero()) return "0:0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i] == 0) continue;
      if (!out.empty()) out += ',';
      out += std::to_string(i) + ":" + ToHex(coeffs_[i]).substr(2);
    }
    return out;
  }

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  std::span<const Word> coeffs() const { return coeffs_; }
  Word coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  /// Horner evaluation at a raw field word.
  Word Eval(Word x) const {
    Word acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.Mul(acc, x) ^ coeffs_[i];
    return acc;
  }

  FieldElement Eval(const FieldElement& x) const {
    detail::RequireSameField(field_, x.field(), "UniPoly::Eval");
    return {field_, Eval(x.bits())};
  }

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    detail::RequireSameField(p.field_, q.field_, "UniPoly +");
    std::vector<Word> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) ^ q.coeff(i);
    return {p.field_, std::move(c)};
  }

  friend UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    detail::RequireSameField(p.field_, q.field_, "UniPoly *");
    if (p.IsZero() || q.IsZero()) return UniPoly(p.field_);
    std::vector<Word> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] ^= p.field_.Mul(p.coeffs_[i], q.coeffs_[j]);
    }
    return {p.field_, std::move(c)};
  }

  friend bool operator==(const UniPoly& p, const UniPoly& q) {
    return p.field_.SameAs(q.field_) && p.coeffs_ == q.coeffs_;
  }

 private:
  void Normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  Field field_;
  std::vector<Word> coeffs_;
};

/// Quotient and remainder with num = den * quotient + remainder and
/// deg remainder < deg den.
inline std::pair<UniPoly, UniPoly> DivMod(const UniPoly& num, const UniPoly& den) {
  detail::RequireSameField(num.field(), den.field(), "DivMod");
  if (den.IsZero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  const Field& f = num.field();
  if (num.degree() < den.degree()) return {UniPoly(f), num};
  std::vector<Word> rem(num.coeffs().begin(), num.coeffs().end());
  const auto dd = static_cast<std::size_t>(den.degree());
  std::vector<Word> quot(rem.size() - dd, 0);
  const Word lead_inv = f.Inv(den.coeffs()[dd]);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Word c = f.Mul(rem[i], lead_inv);
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] ^= f.Mul(c, den.coeffs()[j]);
  }
  rem.resize(dd);
  return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

/// True iff x^2 + a x + b divides p. Synthetic division with no
/// allocation; this sits inside exhaustive (a, b, t) loops.
inline bool DividesQuadratic(Word a, Word b, const UniPoly& p) {
  const auto c = p.coeffs();
  if (c.size() < 3) return c.empty();
  constexpr std::size_t kInline = 32;
  Word buf[kInline];
  std::vector<Word> heap;
  Word* r = buf;
  if (c.size() > kInline) {
    heap.assign(c.begin(), c.end());
    r = heap.data();
  } else {
    std::copy(c.begin(), c.end(), buf);
  }
  const Field& f = p.field();
  for (std::size_t i = c.size() - 1; i >= 2; --i) {
    const Word lead = r[i];
    if (lead == 0) continue;
    r[i - 1] ^= f.Mul(a, lead);
    r[i - 2] ^= f.Mul(b, lead);
  }
  return r[0] == 0 && r[1] == 0;
}

inline bool DividesQuadratic(const FieldElement& a, const FieldElement& b, const UniPoly& p) {
  detail::RequireSameField(a.field(), p.field(), "DividesQuadratic");
  detail::RequireSameField(b.field(), p.field(), "DividesQuadratic");
  return DividesQuadratic(a.bits(), b.bits(), p);
}

/// The members of `set` at which p vanishes, in the order given.
inline std::vector<Word> RootsInSet(const UniPoly& p, std::span<const Word> set) {
  if (p.IsZero()) throw Error(ErrorCode::kInvalidArgument, "RootsInSet of the zero polynomial");
  std::vector<Word> roots;
  for (Word x : set) {
    if (p.Eval(x) == 0) roots.push_back(x);
  }
  return roots;
}

/// Bivariate polynomial; coeff(i, j) multiplies x^i y^j. Stored as a dense
/// rectangle with trailing zero rows and columns trimmed.
class BiPoly {
 public:
  explicit BiPoly(Field field) : field_(std::move(field)) {}

  BiPoly(Field field, std::vector<std::vector<Word>> coeffs) : field_(std::move(field)), rows_(std::move(coeffs)) {
    Normalize();
  }

  static BiPoly Term(const Field& field, std::size_t x_deg, std::size_t y_deg, Word coeff) {
    std::vector<std::vector<Word>> c(x_deg + 1, std::vector<Word>(y_deg + 1, 0));
    c[x_deg][y_deg] = coeff;
    return {field, std::move(c)};
  }

  const Field& field() const { return field_; }
  bool IsZero() const { return rows_.empty(); }
  int degree_x() const { return static_cast<int>(rows_.size()) - 1; }
  int degree_y() const { return rows_.empty() ? -1 : static_cast<int>(rows_[0].size()) - 1; }

  Word coeff(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= rows_[i].size()) return 0;
    return rows_[i][j];
  }

  /// Horner in x over Horner-in-y row values.
  Word Eval(Word x, Word y) const {
    Word acc = 0;
    for (std::size_t i = rows_.size(); i-- > 0;) {
      Word row = 0;
      for (std::size_t j = rows_[i].size(); j-- > 0;) row = field_.Mul(row, y) ^ rows_[i][j];
      acc = field_.Mul(acc, x) ^ row;
    }
    return acc;
  }

  FieldElement Eval(const FieldElement& x, const FieldElement& y) const {
    detail::RequireSameField(field_, x.field(), "BiPoly::Eval");
    detail::RequireSameField(field_, y.field(), "BiPoly::Eval");
    return {field_, Eval(x.bits(), y.bits())};
  }

  /// Coefficients of the univariate polynomial in x obtained by fixing y.
  UniPoly SpecializeY(Word y) const {
    std::vector<Word> c(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Word row = 0;
      for (std::size_t j = rows_[i].size(); j-- > 0;) row = field_.Mul(row, y) ^ rows_[i][j];
      c[i] = row;
    }
    return {field_, std::move(c)};
  }

  friend BiPoly operator+(const BiPoly& p, const BiPoly& q) {
    detail::RequireSameField(p.field_, q.field_, "BiPoly +");
    const std::size_t nx = std::max(p.rows_.size(), q.rows_.size());
    const std::size_t ny = static_cast<std::size_t>(std::max(p.degree_y(), q.degree_y()) + 1);
    std::vector<std::vector<Word>> c(nx, std::vector<Word>(ny, 0));
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) c[i][j] = p.coeff(i, j) ^ q.coeff(i, j);
    }
    return {p.field_, std::move(c)};
  }

  friend BiPoly operator*(const BiPoly& p, const BiPoly& q) {
    detail::RequireSameField(p.field_, q.field_, "BiPoly *");
    if (p.IsZero() || q.IsZero()) return BiPoly(p.field_);
    const std::size_t nx = p.rows_.size() + q.rows_.size() - 1;
    const std::size_t ny = static_cast<std::size_t>(p.degree_y() + q.degree_y() + 1);
    std::vector<std::vector<Word>> c(nx, std::vector<Word>(ny, 0));
    for (std::size_t i1 = 0; i1 < p.rows_.size(); ++i1) {
      for (std::size_t j1 = 0; j1 < p.rows_[i1].size(); ++j1) {
        const Word a = p.rows_[i1][j1];
        if (a == 0) continue;
        for (std::size_t i2 = 0; i2 < q.rows_.size(); ++i2) {
          for (std::size_t j2 = 0; j2 < q.rows_[i2].size(); ++j2) {
            c[i1 + i2][j1 + j2] ^= p.field_.Mul(a, q.rows_[i2][j2]);
          }
        }
      }
    }
    return {p.field_, std::move(c)};
  }

  friend bool operator==(const BiPoly& p, const BiPoly& q) {
    return p.field_.SameAs(q.field_) && p.rows_ == q.rows_;
  }

 private:
  void Normalize() {
    std::size_t ny = 0;
    for (const auto& row : rows_) {
      for (std::size_t j = row.size(); j-- > 0;) {
        if (row[j] != 0) {
          ny = std::max(ny, j + 1);
          break;
        }
      }
      for (Word c : row) {
        if (!field_.IsMember(c)) throw Error(ErrorCode::kInvalidArgument, "coefficient " + ToHex(c) + " not in field");
      }
    }
    if (ny == 0) {
      rows_.clear();
      return;
    }
    for (auto& row : rows_) row.resize(ny, 0);
    while (!rows_.empty() &&
           std::all_of(rows_.back().begin(), rows_.back().end(), [](Word c) { return c == 0; })) {
      rows_.pop_back();
    }
  }

  Field field_;
  std::vector<std::vector<Word>> rows_;
};

struct LinearForm {
  Word y_coeff = 0;   // alpha in x + alpha*y + beta
  Word constant = 0;  // beta
};

/// Expanded product of (x + alpha*y + beta) over the given forms.
inline BiPoly MulLinearForms(const Field& field, std::span<const LinearForm> forms) {
  if (forms.empty()) throw Error(ErrorCode::kInvalidArgument, "MulLinearForms needs at least one form");
  BiPoly product = BiPoly::Term(field, 0, 0, 1);
  for (const auto& form : forms) {
    const BiPoly factor = BiPoly::Term(field, 1, 0, 1) + BiPoly::Term(field, 0, 1, form.y_coeff) +
                          BiPoly::Term(field, 0, 0, form.constant);
    product = product * factor;
  }
  return product;
}

}  // namespace nihoperm
