/*
   Copyright 2026 The spotty Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Sparse univariate polynomials in z with arbitrary-precision integer
// coefficients. Zero coefficients are never stored, so equality is
// term-map equality.

#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace spotty {

using Integer = boost::multiprecision::cpp_int;

class Polynomial {
 public:
  using Terms = std::map<unsigned, Integer>;

  Polynomial() = default;
  explicit Polynomial(Integer constant);
  // {{exp, coeff}, ...}; repeated exponents accumulate.
  Polynomial(std::initializer_list<std::pair<unsigned, Integer>> terms);

  static Polynomial monomial(Integer coeff, unsigned exp);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Highest exponent; 0 for the zero polynomial.
  unsigned degree() const noexcept;
  Integer coefficient(unsigned exp) const;
  Integer evaluate(const Integer& z) const;

  // Adds coeff * z^exp in place.
  void add_term(unsigned exp, const Integer& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

Polynomial operator+(Polynomial p, const Polynomial& q);
Polynomial operator-(Polynomial p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_pow(const Polynomial& p, unsigned exponent);
Polynomial poly_scale(const Polynomial& p, const Integer& factor);

// Coefficientwise p / d. Throws IntegrityError when d does not divide every
// coefficient, ParameterError when d <= 0.
Polynomial exact_div_scalar(const Polynomial& p, const Integer& d);

// "1 + 85z + 3153z^2", "1 - z^2", "0".
std::string to_string(const Polynomial& p);

}  // namespace spotty
