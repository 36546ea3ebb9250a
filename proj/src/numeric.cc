// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discforge/numeric.h"

#include <cstdlib>

#include "discforge/error.h"

namespace discforge {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kDuplicateColumns: return "DuplicateColumns";
    case ErrorCode::kDegenerateDual: return "DegenerateDual";
    case ErrorCode::kNotInSpan: return "NotInSpan";
    case ErrorCode::kNotHomogeneous: return "NotHomogeneous";
    case ErrorCode::kPyramidInput: return "PyramidInput";
    case ErrorCode::kNonPrimitive: return "NonPrimitive";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kNegativeUExponent: return "NegativeUExponent";
    case ErrorCode::kNoVariable: return "NoVariable";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kOnExceptionalLocus: return "OnExceptionalLocus";
    case ErrorCode::kKernelDimensionNotOne: return "KernelDimensionNotOne";
    case ErrorCode::kInconsistentSplit: return "InconsistentSplit";
    case ErrorCode::kZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::kSizeBound: return "SizeBound";
    case ErrorCode::kNoChain: return "NoChain";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Integer Content(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVector PrimitivePart(const IntVector& v) {
  Integer g = Content(v);
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

bool IsZero(const IntVector& v) {
  for (const Integer& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Integer Dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "dot product of unequal lengths");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "sum of unequal lengths");
  }
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator-(const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IntVector operator*(const Integer& c, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

IntVector ToIntVector(const std::vector<long>& v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

long ToLong(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorCode::kOverflow, "integer " + z.get_str() +
                                          " does not fit in a machine word");
  }
  return z.get_si();
}

Rational Power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw Error(ErrorCode::kInvalidArgument, "zero to a negative power");
    }
    Rational inv = 1 / base;
    return Power(inv, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  out.canonicalize();
  return out;
}

Rational ParseRational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::kParse, "not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace discforge
