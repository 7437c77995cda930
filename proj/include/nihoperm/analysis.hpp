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
 * @file analysis.hpp
 * @brief Executable checks of the quadratic-factor analysis of
 *        F_t(x) = x^11 + t x^10 + x^7 + t x^4 + x + t over GF(2^(2m)).
 *
 * The chain being checked:
 *  - a quadratic x^2 + a x + b (ab != 0) dividing F_t satisfies one of three
 *    coefficient conditions;
 *  - if both of its roots lie on the unit circle then a^(2^m) b = a;
 *  - under that relation, u = a^-1 + a^-(2^m) and v = a^-1 a^-(2^m) lie in
 *    GF(2^m) and satisfy
 *      v^5 + (u^4 + u^2) v^3 + v^2 + (u^6 + u^4) v + u^10 + u^4 + 1 = 0,
 *    which is G(v, u^2) for
 *      G(x, y) = x^5 + (y^2 + y) x^3 + x^2 + (y^3 + y^2) x + y^5 + y^2 + 1;
 *  - G splits into the linear forms x + y/theta + theta over the roots theta
 *    of x^5 + x^2 + 1, and has no zero in GF(2^m)^2 when gcd(m, 5) = 1.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nihoperm/error.hpp"
#include "nihoperm/field.hpp"
#include "nihoperm/niho.hpp"
#include "nihoperm/parallel.hpp"
#include "nihoperm/poly.hpp"
#include "nihoperm/unit_circle.hpp"

namespace nihoperm {

struct QuadFactorReport {
  Word a = 0;
  Word b = 0;
  Word t = 0;
  bool divides = false;
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  unsigned circle_roots = 0;
  bool relation_holds = false;
};

struct UVPair {
  Word u = 0;
  Word v = 0;
  Word residual = 0;
};

struct FactorConditions {
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;

  bool Any() const { return cond1 || cond2 || cond3; }
};

namespace detail {

inline void RequireDegree2m(const Field& field, unsigned m, const char* what) {
  if (m == 0 || field.degree() != 2 * m) {
    throw Error(ErrorCode::kDegreeMismatch, std::string(what) + ": m=" + std::to_string(m) + " needs degree " +
                                                std::to_string(2 * m) + ", got " + field.spec().ToString());
  }
}

/// Small power table p[i] = x^i.
template <std::size_t N>
std::array<Word, N> Powers(const Field& f, Word x) {
  std::array<Word, N> p{};
  p[0] = 1;
  for (std::size_t i = 1; i < N; ++i) p[i] = f.Mul(p[i - 1], x);
  return p;
}

/// F_t for every circle element t, in enumeration order.
inline std::vector<UniPoly> FtPolynomials(const UnitCircle& circle) {
  std::vector<UniPoly> polys;
  polys.reserve(circle.elements().size());
  for (Word t : circle.elements()) polys.push_back(FtPolynomial(circle.field(), t));
  return polys;
}

}  // namespace detail

/// The three coefficient conditions, evaluated exactly as printed:
///  (1) a b^3 + b^2 + b + a^2 = 0  and  b^6 + (a^4 + 1) b^4 + b^3 + a^2 = 0
///  (2) b^2 + b^3 + a^2 b^2 + a = 0  and  a^2 b^6 + b^5 + b^4 + b^2 + a^4 = 0
///  (3) a^10 + (b^4 + b^2 + 1) a^6 + (b^5 + b) a^4 + (b^7 + b) a^2
///        + b^10 + b^8 + b^7 + b^5 + b^3 + b^2 + 1 = 0
inline FactorConditions EvaluateFactorConditions(const Field& f, Word a, Word b) {
  const auto A = detail::Powers<11>(f, a);
  const auto B = detail::Powers<11>(f, b);
  auto mul = [&](Word x, Word y) { return f.Mul(x, y); };

  const Word c1a = mul(a, B[3]) ^ B[2] ^ b ^ A[2];
  const Word c1b = B[6] ^ mul(A[4] ^ 1, B[4]) ^ B[3] ^ A[2];
  const Word c2a = B[2] ^ B[3] ^ mul(A[2], B[2]) ^ a;
  const Word c2b = mul(A[2], B[6]) ^ B[5] ^ B[4] ^ B[2] ^ A[4];
  const Word deg10 = A[10] ^ mul(B[4] ^ B[2] ^ 1, A[6]) ^ mul(B[5] ^ b, A[4]) ^ mul(B[7] ^ b, A[2]) ^ B[10] ^ B[8] ^
                     B[7] ^ B[5] ^ B[3] ^ B[2] ^ 1;
  return {c1a == 0 && c1b == 0, c2a == 0 && c2b == 0, deg10 == 0};
}

/// Cofactor coefficients of F_t = (x^2 + a x + b)(x^9 + c1 x^8 + ... + c9)
/// from the closed forms obtained by matching the top five and the bottom
/// six coefficients. c4 and c5 have one form from each end.
struct CofactorClosedForms {
  std::array<Word, 10> from_top{};     // indices 1..5 used
  std::array<Word, 10> from_bottom{};  // indices 4..9 used
};

inline CofactorClosedForms ComputeCofactorClosedForms(const Field& f, Word a, Word b, Word t) {
  if (b == 0) throw Error(ErrorCode::kZeroCoefficient, "closed forms divide by b");
  const auto A = detail::Powers<6>(f, a);
  const auto B = detail::Powers<7>(f, b);
  auto mul = [&](Word x, Word y) { return f.Mul(x, y); };
  auto div = [&](Word x, Word y) { return f.Div(x, y); };
  CofactorClosedForms c;
  c.from_top[1] = a ^ t;
  c.from_top[2] = b ^ A[2] ^ mul(a, t);
  c.from_top[3] = A[3] ^ mul(A[2], t) ^ mul(b, t);
  c.from_top[4] = 1 ^ B[2] ^ mul(A[2], b) ^ A[4] ^ mul(A[3], t);
  c.from_top[5] = a ^ mul(a, B[2]) ^ A[5] ^ mul(mul(A[2], b), t) ^ mul(B[2], t) ^ mul(A[4], t);

  c.from_bottom[9] = div(t, b);
  c.from_bottom[8] = div(b ^ mul(a, t), B[2]);
  c.from_bottom[7] = div(mul(b, t) ^ mul(a, b) ^ mul(A[2], t), B[3]);
  c.from_bottom[6] = div(B[2] ^ mul(A[2], b) ^ mul(A[3], t), B[4]);
  c.from_bottom[5] = div(mul(B[4], t) ^ mul(B[2], t) ^ mul(mul(A[2], b), t) ^ mul(A[4], t) ^ mul(A[3], b), B[5]);
  c.from_bottom[4] = div(B[3] ^ mul(A[2], B[2]) ^ mul(mul(a, B[4]), t) ^ mul(mul(a, B[2]), t) ^ mul(A[5], t) ^
                             mul(A[4], b),
                         B[6]);
  return c;
}

/// Roots of x^2 + a x + b on the circle, and whether a^(2^m) b = a.
struct CircleRootRelation {
  unsigned circle_roots = 0;
  bool relation_holds = false;
};

inline CircleRootRelation ComputeCircleRootRelation(const Field& f, unsigned m, Word a, Word b) {
  detail::RequireDegree2m(f, m, "CircleRootRelation");
  CircleRootRelation out;
  for (Word r : f.SolveQuadratic(a, b)) {
    if (r != 0 && f.RelativeNorm(r, m) == 1) ++out.circle_roots;
  }
  out.relation_holds = f.Mul(f.Frobenius(a, m), b) == a;
  return out;
}

inline CircleRootRelation ComputeCircleRootRelation(const FieldElement& a, const FieldElement& b, unsigned m) {
  detail::RequireSameField(a.field(), b.field(), "CircleRootRelation");
  return ComputeCircleRootRelation(a.field(), m, a.bits(), b.bits());
}

/// Divisibility of F_t by x^2 + a x + b (through full polynomial division),
/// the three conditions, and the circle-root data for one triple.
inline QuadFactorReport ClassifyQuadratic(const Field& f, unsigned m, Word a, Word b, Word t) {
  detail::RequireDegree2m(f, m, "ClassifyQuadratic");
  if (a == 0 || b == 0) throw Error(ErrorCode::kZeroCoefficient, "ClassifyQuadratic needs a*b != 0");
  if (t == 0 || f.RelativeNorm(t, m) != 1) throw Error(ErrorCode::kNotOnCircle, "t = " + ToHex(t));
  QuadFactorReport r;
  r.a = a;
  r.b = b;
  r.t = t;
  const UniPoly quadratic(f, {b, a, 1});
  r.divides = DivMod(FtPolynomial(f, t), quadratic).second.IsZero();
  const auto conds = EvaluateFactorConditions(f, a, b);
  r.cond1 = conds.cond1;
  r.cond2 = conds.cond2;
  r.cond3 = conds.cond3;
  const auto rel = ComputeCircleRootRelation(f, m, a, b);
  r.circle_roots = rel.circle_roots;
  r.relation_holds = rel.relation_holds;
  return r;
}

inline QuadFactorReport ClassifyQuadratic(const FieldElement& a, const FieldElement& b, const FieldElement& t,
                                       unsigned m) {
  detail::RequireSameField(a.field(), b.field(), "ClassifyQuadratic");
  detail::RequireSameField(a.field(), t.field(), "ClassifyQuadratic");
  return ClassifyQuadratic(a.field(), m, a.bits(), b.bits(), t.bits());
}

struct QuadraticScanResult {
  std::uint64_t triples = 0;
  std::uint64_t dividing = 0;
  std::uint64_t violations = 0;  // divides but no condition holds
  std::vector<QuadFactorReport> rows;
};

/// Every (a, b, t) with ab != 0 and t on the circle. Rows are kept for all
/// triples when `keep_all`, otherwise only for dividing ones.
inline QuadraticScanResult QuadraticScan(const UnitCircle& circle, bool keep_all = false, unsigned parallelism = 1) {
  const Field& f = circle.field();
  const unsigned m = circle.m();
  const Word n = f.size();
  const auto ft = detail::FtPolynomials(circle);
  auto parts = MapChunks(n - 1, parallelism, [&](std::uint64_t lo, std::uint64_t hi) {
    QuadraticScanResult part;
    for (Word a = lo + 1; a < hi + 1; ++a) {
      for (Word b = 1; b < n; ++b) {
        const auto conds = EvaluateFactorConditions(f, a, b);
        const auto rel = ComputeCircleRootRelation(f, m, a, b);
        for (std::size_t ti = 0; ti < ft.size(); ++ti) {
          const Word t = circle.elements()[ti];
          ++part.triples;
          const bool divides = DividesQuadratic(a, b, ft[ti]);
          if (divides) {
            ++part.dividing;
            if (!conds.Any()) ++part.violations;
          }
          if (divides || keep_all) {
            part.rows.push_back({a, b, t, divides, conds.cond1, conds.cond2, conds.cond3, rel.circle_roots,
                                 rel.relation_holds});
          }
        }
      }
    }
    return part;
  });
  QuadraticScanResult out;
  for (auto& p : parts) {
    out.triples += p.triples;
    out.dividing += p.dividing;
    out.violations += p.violations;
    out.rows.insert(out.rows.end(), p.rows.begin(), p.rows.end());
  }
  return out;
}

struct CircleQuadraticScanResult {
  std::uint64_t pairs = 0;               // quadratics with two distinct circle roots
  std::uint64_t relation_failures = 0;   // among them, a^(2^m) b != a
  std::uint64_t root_count_mismatch = 0; // solver did not report both roots on the circle
  std::vector<QuadFactorReport> dividing;  // (a, b, t) with x^2 + a x + b | F_t
};

/// Builds every monic quadratic (x - x1)(x - x2), x1 != x2 on the circle,
/// checks the relation, and tests divisibility of F_t for every circle t.
inline CircleQuadraticScanResult CircleQuadraticScan(const UnitCircle& circle, unsigned parallelism = 1) {
  const Field& f = circle.field();
  const auto& mu = circle.elements();
  const auto ft = detail::FtPolynomials(circle);
  auto parts = MapChunks(mu.size(), parallelism, [&](std::uint64_t lo, std::uint64_t hi) {
    CircleQuadraticScanResult part;
    for (std::uint64_t i = lo; i < hi; ++i) {
      for (std::uint64_t j = i + 1; j < mu.size(); ++j) {
        const Word a = mu[i] ^ mu[j];
        const Word b = f.Mul(mu[i], mu[j]);
        ++part.pairs;
        const auto rel = ComputeCircleRootRelation(f, circle.m(), a, b);
        if (!rel.relation_holds) ++part.relation_failures;
        if (rel.circle_roots != 2) ++part.root_count_mismatch;
        for (std::size_t ti = 0; ti < mu.size(); ++ti) {
          if (DividesQuadratic(a, b, ft[ti])) {
            const auto conds = EvaluateFactorConditions(f, a, b);
            part.dividing.push_back(
                {a, b, mu[ti], true, conds.cond1, conds.cond2, conds.cond3, rel.circle_roots, rel.relation_holds});
          }
        }
      }
    }
    return part;
  });
  CircleQuadraticScanResult out;
  for (auto& p : parts) {
    out.pairs += p.pairs;
    out.relation_failures += p.relation_failures;
    out.root_count_mismatch += p.root_count_mismatch;
    out.dividing.insert(out.dividing.end(), p.dividing.begin(), p.dividing.end());
  }
  return out;
}

/// Root pairing: for every circle t, the roots of F_t on the circle are
/// found through F_t = N + t D, and each pair of distinct roots x1, x2 gives
/// the dividing quadratic (x - x1)(x - x2).
inline std::vector<QuadFactorReport> CirclePairFactors(const UnitCircle& circle, unsigned parallelism = 1) {
  const Field& f = circle.field();
  const auto& mu = circle.elements();
  const CircleMapSpec spec(f);
  std::vector<Word> num(mu.size()), den(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    num[i] = spec.numerator.Eval(mu[i]);
    den[i] = spec.denominator.Eval(mu[i]);
  }
  auto parts = MapChunks(mu.size(), parallelism, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<QuadFactorReport> rows;
    std::vector<Word> roots;
    for (std::uint64_t ti = lo; ti < hi; ++ti) {
      const Word t = mu[ti];
      roots.clear();
      for (std::size_t i = 0; i < mu.size(); ++i) {
        if ((num[i] ^ f.Mul(t, den[i])) == 0) roots.push_back(mu[i]);
      }
      for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
          const Word a = roots[i] ^ roots[j];
          const Word b = f.Mul(roots[i], roots[j]);
          const auto conds = EvaluateFactorConditions(f, a, b);
          const auto rel = ComputeCircleRootRelation(f, circle.m(), a, b);
          rows.push_back({a, b, t, true, conds.cond1, conds.cond2, conds.cond3, rel.circle_roots, rel.relation_holds});
        }
      }
    }
    return rows;
  });
  std::vector<QuadFactorReport> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

/// Left side of v^5 + (u^4 + u^2) v^3 + v^2 + (u^6 + u^4) v + u^10 + u^4 + 1.
inline Word UVResidual(const Field& f, Word u, Word v) {
  const auto U = detail::Powers<11>(f, u);
  const auto V = detail::Powers<6>(f, v);
  return V[5] ^ f.Mul(U[4] ^ U[2], V[3]) ^ V[2] ^ f.Mul(U[6] ^ U[4], v) ^ U[10] ^ U[4] ^ 1;
}

/// u = a^-1 + (a^-1)^(2^m), v = a^-1 (a^-1)^(2^m), for a^(2^m) b = a.
inline UVPair ComputeUV(const Field& f, unsigned m, Word a, Word b) {
  detail::RequireDegree2m(f, m, "ComputeUV");
  if (a == 0 || f.Mul(f.Frobenius(a, m), b) != a) {
    throw Error(ErrorCode::kRelationViolated, "a^(2^m) b != a for a=" + ToHex(a) + ", b=" + ToHex(b));
  }
  const Word ai = f.Inv(a);
  const Word ai_conj = f.Frobenius(ai, m);
  UVPair p{ai ^ ai_conj, f.Mul(ai, ai_conj), 0};
  if (!f.InSubfield(p.u, m) || !f.InSubfield(p.v, m)) {
    throw Error(ErrorCode::kInvalidArgument, "u or v escaped GF(2^m)");
  }
  p.residual = UVResidual(f, p.u, p.v);
  return p;
}

inline UVPair ComputeUV(const FieldElement& a, const FieldElement& b, unsigned m) {
  detail::RequireSameField(a.field(), b.field(), "ComputeUV");
  return ComputeUV(a.field(), m, a.bits(), b.bits());
}

/// G(x, y) = x^5 + (y^2 + y) x^3 + x^2 + (y^3 + y^2) x + y^5 + y^2 + 1.
inline BiPoly GPolynomial(const Field& field) {
  std::vector<std::vector<Word>> c(6, std::vector<Word>(6, 0));
  c[5][0] = 1;
  c[3][2] = 1;
  c[3][1] = 1;
  c[2][0] = 1;
  c[1][3] = 1;
  c[1][2] = 1;
  c[0][5] = 1;
  c[0][2] = 1;
  c[0][0] = 1;
  return {field, std::move(c)};
}

/// UV residual as a formal polynomial: coeff(i, j) multiplies u^i v^j.
inline BiPoly UVPolynomial(const Field& field) {
  std::vector<std::vector<Word>> c(11, std::vector<Word>(6, 0));
  c[0][5] = 1;
  c[4][3] = 1;
  c[2][3] = 1;
  c[0][2] = 1;
  c[6][1] = 1;
  c[4][1] = 1;
  c[10][0] = 1;
  c[4][0] = 1;
  c[0][0] = 1;
  return {field, std::move(c)};
}

/// G(v, u^2) expanded symbolically into the same (u, v) layout.
inline BiPoly GAtVAndUSquared(const Field& field) {
  const BiPoly g = GPolynomial(field);
  std::vector<std::vector<Word>> c(2 * (g.degree_y() + 1), std::vector<Word>(g.degree_x() + 1, 0));
  for (int i = 0; i <= g.degree_x(); ++i) {
    for (int j = 0; j <= g.degree_y(); ++j) c[2 * j][i] ^= g.coeff(i, j);
  }
  return {field, std::move(c)};
}

/// Formal identity residual(u, v) = G(v, u^2) over GF(2).
inline bool UVBridgeFormal() {
  const Field gf2 = Field::OfDegree(1);
  return UVPolynomial(gf2) == GAtVAndUSquared(gf2);
}

struct RelationScanRow {
  QuadFactorReport quad;
  UVPair uv;
};

struct RelationScanResult {
  std::uint64_t candidates = 0;  // (a, t) pairs with b forced by the relation
  std::uint64_t nonzero_residuals = 0;
  std::uint64_t case12_hits = 0;  // dividing quadratics meeting condition 1 or 2
  std::vector<RelationScanRow> rows;
};

/// For every a != 0 the relation forces b = a / a^(2^m). Each such
/// quadratic is tested against every F_t; dividing ones must have a zero
/// residual and must not satisfy conditions (1) or (2).
inline RelationScanResult RelationScan(const UnitCircle& circle, unsigned parallelism = 1) {
  const Field& f = circle.field();
  const unsigned m = circle.m();
  const auto ft = detail::FtPolynomials(circle);
  auto parts = MapChunks(f.size() - 1, parallelism, [&](std::uint64_t lo, std::uint64_t hi) {
    RelationScanResult part;
    for (Word a = lo + 1; a < hi + 1; ++a) {
      const Word b = f.Div(a, f.Frobenius(a, m));
      for (std::size_t ti = 0; ti < ft.size(); ++ti) {
        const Word t = circle.elements()[ti];
        ++part.candidates;
        if (!DividesQuadratic(a, b, ft[ti])) continue;
        const auto conds = EvaluateFactorConditions(f, a, b);
        const auto rel = ComputeCircleRootRelation(f, m, a, b);
        const UVPair uv = ComputeUV(f, m, a, b);
        if (uv.residual != 0) ++part.nonzero_residuals;
        if (conds.cond1 || conds.cond2) ++part.case12_hits;
        part.rows.push_back(
            {{a, b, t, true, conds.cond1, conds.cond2, conds.cond3, rel.circle_roots, rel.relation_holds}, uv});
      }
    }
    return part;
  });
  RelationScanResult out;
  for (auto& p : parts) {
    out.candidates += p.candidates;
    out.nonzero_residuals += p.nonzero_residuals;
    out.case12_hits += p.case12_hits;
    out.rows.insert(out.rows.end(), p.rows.begin(), p.rows.end());
  }
  return out;
}

/// Roots of x^5 + x^2 + 1 in the field, ascending.
inline std::vector<Word> SplittingSetH(const Field& f) {
  if (f.degree() > kMaxCircleM) throw Error(ErrorCode::kDomainTooLarge, "root scan over a field above 2^24");
  const UniPoly p = UniPoly::Parse(f, "5:1,2:1,0:1");
  std::vector<Word> roots;
  for (Word x = 0; x < f.size(); ++x) {
    if (p.Eval(x) == 0) roots.push_back(x);
  }
  return roots;
}

struct FactorizationResult {
  bool identity = false;
  std::vector<Word> h;  // the five roots theta
  BiPoly product;
  BiPoly g;
  std::size_t slots_compared = 0;
  std::size_t slots_equal = 0;
};

/// Expands prod (x + theta^-1 y + theta) over GF(2^m_ext) and compares it
/// slot by slot with G.
inline FactorizationResult CheckGFactorization(unsigned m_ext) {
  const Field f = Field::OfDegree(m_ext);
  auto h = SplittingSetH(f);
  if (h.size() < 5) {
    throw Error(ErrorCode::kFieldTooSmall, "x^5 + x^2 + 1 has " + std::to_string(h.size()) + " roots in GF(2^" +
                                               std::to_string(m_ext) + ")");
  }
  std::vector<LinearForm> forms;
  for (Word theta : h) forms.push_back({f.Inv(theta), theta});
  FactorizationResult r{false, h, MulLinearForms(f, forms), GPolynomial(f), 0, 0};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      ++r.slots_compared;
      if (r.product.coeff(i, j) == r.g.coeff(i, j)) ++r.slots_equal;
    }
  }
  r.identity = r.slots_equal == r.slots_compared && r.product == r.g;
  return r;
}

inline constexpr unsigned kDefaultGSearchMaxM = 14;

/// All zeros (x, y) of G in GF(2^m)^2, sorted by (x, y).
inline std::vector<std::pair<Word, Word>> SearchGZeros(unsigned m, unsigned parallelism = 1,
                                                       unsigned max_m = kDefaultGSearchMaxM) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  if (m > max_m) {
    throw Error(ErrorCode::kDomainTooLarge, "G zero scan at m=" + std::to_string(m) + " exceeds cap " +
                                                std::to_string(max_m));
  }
  const Field f = Field::OfDegree(m);
  auto parts = MapChunks(f.size(), parallelism, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::pair<Word, Word>> zeros;
    for (Word y = lo; y < hi; ++y) {
      const Word y2 = f.Mul(y, y);
      const Word y3 = f.Mul(y2, y);
      const Word y5 = f.Mul(y3, y2);
      const Word c3 = y2 ^ y;
      const Word c1 = y3 ^ y2;
      const Word c0 = y5 ^ y2 ^ 1;
      for (Word x = 0; x < f.size(); ++x) {
        // ((((x) x + c3) x + 1) x + c1) x + c0
        Word acc = f.Mul(x, x) ^ c3;
        acc = f.Mul(acc, x) ^ 1;
        acc = f.Mul(acc, x) ^ c1;
        acc = f.Mul(acc, x) ^ c0;
        if (acc == 0) zeros.emplace_back(x, y);
      }
    }
    return zeros;
  });
  std::vector<std::pair<Word, Word>> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace nihoperm
