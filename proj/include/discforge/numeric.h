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

#ifndef DISCFORGE_NUMERIC_H_
#define DISCFORGE_NUMERIC_H_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace discforge {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

inline std::string ToString(const Integer& z) { return z.get_str(); }
inline std::string ToString(const Rational& q) { return q.get_str(); }

// gcd of all entries; zero for the zero vector.
Integer Content(const IntVector& v);

// v / Content(v), or v itself when v is zero.
IntVector PrimitivePart(const IntVector& v);

bool IsZero(const IntVector& v);

Integer Dot(const IntVector& a, const IntVector& b);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& c, const IntVector& v);

IntVector ToIntVector(const std::vector<long>& v);

// Converts to long; throws Error(kOverflow) if the value does not fit.
long ToLong(const Integer& z);

// Integer power for exact rationals; negative exponents invert.
Rational Power(const Rational& base, long exponent);

// Parses "p" or "p/q".
Rational ParseRational(const std::string& text);

}  // namespace discforge

#endif  // DISCFORGE_NUMERIC_H_
