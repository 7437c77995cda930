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
 * @file perm.hpp
 * @brief Permutation checks for maps on GF(2^k).
 *
 * Two independent routes:
 * - brute force: evaluate the map on every field element and detect a
 *   repeated image with a presence bitset;
 * - the cyclotomic criterion: for q - 1 = d s, the map x^r h(x^s) permutes
 *   GF(q) iff gcd(r, s) = 1 and x -> x^r h(x)^s permutes the d-th roots of
 *   unity. The map fixes 0 whenever r >= 1, so nothing is lost at zero.
 */

#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nihoperm/error.hpp"
#include "nihoperm/field.hpp"
#include "nihoperm/niho.hpp"
#include "nihoperm/parallel.hpp"
#include "nihoperm/poly.hpp"

namespace nihoperm {

enum class VerifyMethod { kBruteforce, kCriterion };

constexpr std::string_view VerifyMethodName(VerifyMethod m) {
  return m == VerifyMethod::kBruteforce ? "bruteforce" : "lemma1";
}

enum class WitnessKind {
  kCollision,  // first != second, same image
  kOffTarget,  // image falls outside the set that should be permuted
};

struct Witness {
  WitnessKind kind = WitnessKind::kCollision;
  Word first = 0;
  Word second = 0;
  Word image = 0;
};

struct VerifyReport {
  VerifyMethod method = VerifyMethod::kBruteforce;
  bool verdict = false;
  std::optional<Witness> witness;
  std::uint64_t domain_size = 0;
  std::uint64_t image_size = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct PermOptions {
  unsigned max_log_domain = 28;
  unsigned parallelism = 1;
};

namespace detail {

class Bitset {
 public:
  explicit Bitset(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}

  /// Sets bit i and returns whether it was already set.
  bool TestAndSet(std::uint64_t i) {
    std::uint64_t& w = words_[i >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    const bool was = (w & bit) != 0;
    w |= bit;
    return was;
  }

  std::uint64_t Count() const {
    std::uint64_t n = 0;
    for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
  }

  bool Any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

struct SeenSets {
  Bitset seen;
  Bitset seen_twice;
};

/// seen_twice picks up both local repeats and cross-chunk overlaps.
inline void MergeInto(SeenSets& acc, const SeenSets& other) {
  auto& s = acc.seen.words();
  auto& t = acc.seen_twice.words();
  const auto& os = other.seen.words();
  const auto& ot = other.seen_twice.words();
  for (std::size_t i = 0; i < s.size(); ++i) {
    t[i] |= ot[i] | (s[i] & os[i]);
    s[i] |= os[i];
  }
}

/// First x2 (in domain order) whose image was already produced, paired
/// with the smallest earlier x1 hitting the same image.
template <class Map>
Witness FirstCollision(std::uint64_t size, Map& map) {
  Bitset seen(size);
  for (Word x2 = 0; x2 < size; ++x2) {
    const Word y = map(x2);
    if (seen.TestAndSet(y)) {
      for (Word x1 = 0; x1 < x2; ++x1) {
        if (map(x1) == y) return {WitnessKind::kCollision, x1, x2, y};
      }
    }
  }
  return {};
}

/// Presence set over field words: a bitset for fields up to 2^28, a hash
/// set above that.
class ImageSet {
 public:
  explicit ImageSet(const Field& field) {
    if (field.degree() <= kMaxBitsetDegree) bits_.emplace(field.size());
  }

  /// Inserts y and returns whether it was already present.
  bool Insert(Word y) {
    if (bits_) {
      const bool was = bits_->TestAndSet(y);
      count_ += !was;
      return was;
    }
    const bool was = !hashed_.insert(y).second;
    count_ += !was;
    return was;
  }

  std::uint64_t size() const { return count_; }

 private:
  static constexpr unsigned kMaxBitsetDegree = 28;
  std::optional<Bitset> bits_;
  std::unordered_set<Word> hashed_;
  std::uint64_t count_ = 0;
};

inline Word EvalSparseOrDense(const Field& f, const UniPoly& h, const std::vector<std::pair<std::size_t, Word>>& terms,
                              Word x) {
  if (h.degree() <= 64) return h.Eval(x);
  Word acc = 0;
  for (const auto& [deg, c] : terms) acc ^= f.Mul(c, f.PowU(x, deg));
  return acc;
}

}  // namespace detail

/// Exhaustive bijectivity check of `map` on GF(2^k).
template <class Map>
VerifyReport IsPermutationBruteforce(const Field& field, Map&& map, PermOptions options = {}) {
  if (field.degree() > options.max_log_domain) {
    throw Error(ErrorCode::kDomainTooLarge, "brute force over 2^" + std::to_string(field.degree()) +
                                                " elements exceeds cap 2^" + std::to_string(options.max_log_domain));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t size = field.size();
  auto parts = MapChunks(size, options.parallelism, [&](std::uint64_t lo, std::uint64_t hi) {
    detail::SeenSets sets{detail::Bitset(size), detail::Bitset(size)};
    for (std::uint64_t x = lo; x < hi; ++x) {
      const Word y = map(static_cast<Word>(x));
      if (!field.IsMember(y)) throw Error(ErrorCode::kInvalidArgument, "map left the field at " + ToHex(x));
      if (sets.seen.TestAndSet(y)) sets.seen_twice.TestAndSet(y);
    }
    return sets;
  });
  detail::SeenSets merged = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) detail::MergeInto(merged, parts[i]);
  parts.clear();

  VerifyReport report;
  report.method = VerifyMethod::kBruteforce;
  report.domain_size = size;
  report.image_size = merged.seen.Count();
  report.verdict = !merged.seen_twice.Any();
  if (!report.verdict) report.witness = detail::FirstCollision(size, map);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

/// Criterion route for x^r h(x^s) on GF(q), q - 1 = d s.
inline VerifyReport IsPermutationCriterion(const Field& field, std::uint64_t r, const UniPoly& h, std::uint64_t d,
                                        std::uint64_t s) {
  detail::RequireSameField(field, h.field(), "IsPermutationCriterion");
  if (r == 0 || d == 0 || s == 0) throw Error(ErrorCode::kInvalidArgument, "r, d, s must be positive");
  if (static_cast<unsigned __int128>(d) * s != field.order()) {
    throw Error(ErrorCode::kBadFactorization, std::to_string(d) + " * " + std::to_string(s) +
                                                  " != q - 1 = " + std::to_string(field.order()));
  }
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.method = VerifyMethod::kCriterion;
  report.domain_size = d;

  std::vector<std::pair<std::size_t, Word>> terms;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    if (h.coeffs()[i] != 0) terms.emplace_back(i, h.coeffs()[i]);
  }

  if (std::gcd(r, s) != 1) {
    report.verdict = false;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }

  const Word omega = field.PowU(field.primitive(), s);
  std::vector<Word> roots;
  roots.reserve(d);
  for (Word x = 1, i = 0; i < d; ++i, x = field.Mul(x, omega)) roots.push_back(x);

  auto restricted = [&](Word x) {
    return field.Mul(field.PowU(x, r), field.PowU(detail::EvalSparseOrDense(field, h, terms, x), s));
  };

  detail::ImageSet seen(field);
  report.verdict = true;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Word y = restricted(roots[i]);
    if (y == 0) {
      report.verdict = false;
      report.witness = Witness{WitnessKind::kOffTarget, roots[i], roots[i], y};
      break;
    }
    if (seen.Insert(y)) {
      report.verdict = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (restricted(roots[j]) == y) {
          report.witness = Witness{WitnessKind::kCollision, roots[j], roots[i], y};
          break;
        }
      }
      break;
    }
  }
  report.image_size = seen.size();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

/// Brute force for the trinomial in its own field GF(2^(2m)).
inline VerifyReport VerifyTrinomialBruteforce(const NihoTrinomial& f, const Field& field, PermOptions options = {}) {
  return IsPermutationBruteforce(field, [&](Word x) { return f.Eval(field, x); }, options);
}

/// The trinomial is x * h(x^(2^m - 1)) with h = 1 + x^s + x^t, so the
/// criterion runs with r = 1, s = 2^m - 1 and d = 2^m + 1.
inline VerifyReport VerifyTrinomialCriterion(const NihoTrinomial& f, const Field& field) {
  const Word half = Word{1} << f.m();
  return IsPermutationCriterion(field, 1, f.CircleFactor(field), half + 1, half - 1);
}

}  // namespace nihoperm
