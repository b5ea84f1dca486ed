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

#include "spotty/polynomial.hpp"

#include "spotty/error.hpp"

namespace spotty {

Polynomial::Polynomial(Integer constant) { add_term(0, constant); }

Polynomial::Polynomial(std::initializer_list<std::pair<unsigned, Integer>> terms) {
  for (const auto& [exp, coeff] : terms) add_term(exp, coeff);
}

Polynomial Polynomial::monomial(Integer coeff, unsigned exp) {
  Polynomial p;
  p.add_term(exp, coeff);
  return p;
}

unsigned Polynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

Integer Polynomial::coefficient(unsigned exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? Integer{0} : it->second;
}

Integer Polynomial::evaluate(const Integer& z) const {
  // Horner over the sparse exponents, highest first.
  Integer acc = 0;
  unsigned prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= boost::multiprecision::pow(z, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return acc * boost::multiprecision::pow(z, prev);
}

void Polynomial::add_term(unsigned exp, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [exp, coeff] : other.terms_) add_term(exp, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [exp, coeff] : other.terms_) add_term(exp, -coeff);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  Polynomial product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) product.add_term(ea + eb, ca * cb);
  }
  *this = std::move(product);
  return *this;
}

Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
Polynomial operator-(const Polynomial& p) { return Polynomial{} - p; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  r *= q;
  return r;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial poly_pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(Integer{1});
  Polynomial base = p;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial poly_scale(const Polynomial& p, const Integer& factor) {
  Polynomial r;
  for (const auto& [exp, coeff] : p.terms()) r.add_term(exp, coeff * factor);
  return r;
}

Polynomial exact_div_scalar(const Polynomial& p, const Integer& d) {
  if (d <= 0) throw ParameterError("divisor must be positive, got " + d.str());
  Polynomial r;
  for (const auto& [exp, coeff] : p.terms()) {
    Integer q, rem;
    boost::multiprecision::divide_qr(coeff, d, q, rem);
    if (rem != 0) {
      throw IntegrityError("coefficient " + coeff.str() + " of z^" + std::to_string(exp) +
                           " is not divisible by " + d.str());
    }
    r.add_term(exp, q);
  }
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [exp, coeff] : p.terms()) {
    const bool negative = coeff < 0;
    const Integer magnitude = negative ? Integer{-coeff} : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (exp == 0 || magnitude != 1) out += magnitude.str();
    if (exp >= 1) out += "z";
    if (exp >= 2) out += "^" + std::to_string(exp);
  }
  return out;
}

}  // namespace spotty
