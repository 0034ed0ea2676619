// Copyright 2026 The bacore authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BACORE_RATIONAL_HPP
#define BACORE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bacore {

/// Exact rational number. All arithmetic in the library is exact; there is
/// no floating point on any decision path.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or a plain integer string.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("invalid rational: '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("invalid rational (zero denominator): '" + text + "'");
  q.canonicalize();
  return q;
}

/// Serializes as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace bacore

#endif  // BACORE_RATIONAL_HPP
