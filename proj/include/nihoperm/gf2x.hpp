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

// Polynomials over GF(2) packed into a machine word: bit i is the
// coefficient of x^i. Degrees up to 63 are supported.

#pragma once

#include <bit>
#include <cstdint>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define NIHOPERM_HAVE_X86 1
#endif

#include "nihoperm/error.hpp"
#include "nihoperm/numtheory.hpp"

namespace nihoperm::gf2x {

using Word = std::uint64_t;
using Wide = unsigned __int128;

inline constexpr unsigned kMaxDegree = 63;

/// Degree of p; -1 for the zero polynomial.
constexpr int Degree(Wide p) {
  const auto hi = static_cast<Word>(p >> 64);
  if (hi != 0) return 127 - std::countl_zero(hi);
  const auto lo = static_cast<Word>(p);
  return lo == 0 ? -1 : 63 - std::countl_zero(lo);
}

constexpr Wide ClMulPortable(Word a, Word b) {
  Wide acc = 0;
  Wide shifted = a;
  while (b != 0) {
    if (b & 1) acc ^= shifted;
    shifted <<= 1;
    b >>= 1;
  }
  return acc;
}

#ifdef NIHOPERM_HAVE_X86
__attribute__((target("pclmul,sse4.1"))) inline Wide ClMulHardware(Word a, Word b) {
  const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
  const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
  const __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
  const auto lo = static_cast<Word>(_mm_extract_epi64(r, 0));
  const auto hi = static_cast<Word>(_mm_extract_epi64(r, 1));
  return (static_cast<Wide>(hi) << 64) | lo;
}

inline bool HardwareClMulAvailable() {
  static const bool available = __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1");
  return available;
}
#else
inline Wide ClMulHardware(Word a, Word b) { return ClMulPortable(a, b); }
inline bool HardwareClMulAvailable() { return false; }
#endif

inline Wide ClMul(Word a, Word b) {
  return HardwareClMulAvailable() ? ClMulHardware(a, b) : ClMulPortable(a, b);
}

/// Remainder of p modulo `mod` (any nonzero modulus, not necessarily
/// irreducible), by schoolbook long division.
constexpr Word Reduce(Wide p, Word mod) {
  const int dm = Degree(mod);
  for (int d = Degree(p); d >= dm; d = Degree(p)) {
    p ^= static_cast<Wide>(mod) << (d - dm);
  }
  return static_cast<Word>(p);
}

inline Word MulMod(Word a, Word b, Word mod) { return Reduce(ClMul(a, b), mod); }

constexpr Word Gcd(Word a, Word b) {
  while (b != 0) {
    const Word r = Reduce(a, b);
    a = b;
    b = r;
  }
  return a;
}

/// Rabin's test: f of degree k is irreducible iff x^(2^k) = x mod f and
/// gcd(x^(2^(k/p)) - x, f) = 1 for every prime p dividing k.
inline bool IsIrreducible(Word poly) {
  const int k = Degree(poly);
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "irreducibility needs degree >= 1");
  const Word x = Reduce(Word{2}, poly);
  auto frobenius_power = [&](int j) {
    Word r = x;
    for (int i = 0; i < j; ++i) r = MulMod(r, r, poly);
    return r;
  };
  if (frobenius_power(k) != x) return false;
  for (auto p : nt::PrimeDivisors(static_cast<std::uint64_t>(k))) {
    const Word h = frobenius_power(k / static_cast<int>(p)) ^ x;
    if (Gcd(poly, h) != 1) return false;
  }
  return true;
}

/// Lexicographically smallest irreducible of degree k with nonzero constant
/// term (coefficient bitstring read as an integer).
inline Word SmallestIrreducible(unsigned k) {
  if (k < 1 || k > kMaxDegree) throw Error(ErrorCode::kInvalidArgument, "degree out of range");
  const Word lead = Word{1} << k;
  for (Word p = lead | 1; p < (lead << 1) || k == 63; p += 2) {
    if (IsIrreducible(p)) return p;
  }
  throw Error(ErrorCode::kInvalidArgument, "no irreducible found");
}

}  // namespace nihoperm::gf2x
