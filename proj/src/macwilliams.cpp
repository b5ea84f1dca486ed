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

#include "spotty/macwilliams.hpp"

#include <map>
#include <string>

#include "spotty/error.hpp"

namespace spotty {

namespace {

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Polynomial f_poly(unsigned j, unsigned b, unsigned m, unsigned t) {
  if (m < 1 || m > kMaxNilpotency) throw ParameterError("m=" + std::to_string(m) + " outside [1, 16]");
  if (t < 1 || t > b) {
    throw ParameterError("t=" + std::to_string(t) + " outside [1, b=" + std::to_string(b) + "]");
  }
  if (j > b) throw ParameterError("byte weight j=" + std::to_string(j) + " exceeds b=" + std::to_string(b));

  const Integer nonzero = (Integer{1} << m) - 1;
  Polynomial p;
  for (unsigned j1 = 0; j1 <= j; ++j1) {
    const Integer left = (j1 % 2 ? -1 : 1) * binomial(j, j1);
    for (unsigned j2 = 0; j2 <= b - j; ++j2) {
      p.add_term(ceil_div(j1 + j2, t), left * boost::multiprecision::pow(nonzero, j2) * binomial(b - j, j2));
    }
  }
  return p;
}

Polynomial enumerator_from_distribution(const DistributionTable& dist, unsigned t) {
  Polynomial w;
  for (const auto& [alpha, count] : dist.entries()) w.add_term(alpha.spotty_weight(t), count);
  return w;
}

Polynomial transform(const DistributionTable& dist, std::uint64_t code_size, unsigned m, unsigned t,
                     unsigned workers) {
  if (code_size == 0) throw ParameterError("code size must be positive");
  if (dist.total() != code_size) {
    throw ParameterError("distribution totals " + std::to_string(dist.total()) + " codewords, code size is " +
                         std::to_string(code_size));
  }
  const unsigned b = dist.layout().b();

  std::vector<Polynomial> kernels;
  kernels.reserve(b + 1);
  for (unsigned j = 0; j <= b; ++j) kernels.push_back(f_poly(j, b, m, t));

  // Powers F_j^e are shared across alpha-vectors; precompute them serially.
  std::map<std::pair<unsigned, unsigned>, Polynomial> powers;
  for (const auto& [alpha, count] : dist.entries()) {
    for (unsigned j = 0; j <= b; ++j) {
      const auto key = std::make_pair(j, alpha[j]);
      if (!powers.contains(key)) powers.emplace(key, poly_pow(kernels[j], alpha[j]));
    }
  }

  const std::vector<std::pair<AlphaVector, Count>> entries(dist.entries().begin(), dist.entries().end());
  std::vector<Polynomial> terms(entries.size());
  const auto n_entries = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers < 1 ? 1 : workers)
  for (std::int64_t e = 0; e < n_entries; ++e) {
    const auto& [alpha, count] = entries[static_cast<std::size_t>(e)];
    Polynomial term(Integer{count});
    for (unsigned j = 0; j <= b; ++j) term *= powers.at({j, alpha[j]});
    terms[static_cast<std::size_t>(e)] = std::move(term);
  }

  Polynomial numerator;
  for (const auto& term : terms) numerator += term;

  Polynomial result = exact_div_scalar(numerator, code_size);
  for (const auto& [exp, coeff] : result.terms()) {
    if (coeff < 0) {
      throw IntegrityError("dual enumerator has negative coefficient " + coeff.str() + " at z^" +
                           std::to_string(exp));
    }
  }
  if (result.coefficient(0) < 1) throw IntegrityError("dual enumerator lacks the zero word");
  return result;
}

}  // namespace spotty
