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

#include "spotty/weight.hpp"

#include <numeric>
#include <string>

#include "spotty/error.hpp"
#include "spotty/kernels.hpp"

namespace spotty {

unsigned hamming_weight(std::span<const RingElement> v) noexcept {
  unsigned w = 0;
  for (const auto& x : v) w += !x.is_zero();
  return w;
}

std::vector<std::size_t> support(std::span<const RingElement> v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> complement_support(std::span<const RingElement> v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) out.push_back(i);
  }
  return out;
}

namespace {

void check_conforms(std::span<const RingElement> coords, const ByteLayout& layout) {
  if (coords.size() != layout.length()) {
    throw ParameterError("word length " + std::to_string(coords.size()) +
                         " does not match layout length " + std::to_string(layout.length()));
  }
}

}  // namespace

unsigned m_spotty_weight(std::span<const RingElement> coords, const ByteLayout& layout) {
  check_conforms(coords, layout);
  unsigned w = 0;
  for (std::size_t i = 0; i < layout.n(); ++i) {
    w += ceil_div(hamming_weight(coords.subspan(i * layout.b(), layout.b())), layout.t());
  }
  return w;
}

unsigned m_spotty_distance(const Word& x, const Word& y) {
  if (x.layout() != y.layout()) throw ParameterError("m-spotty distance: layout mismatch");
  const ByteLayout& layout = x.layout();
  unsigned d = 0;
  for (std::size_t i = 0; i < layout.n(); ++i) {
    unsigned differing = 0;
    for (std::size_t j = i * layout.b(); j < (i + 1) * layout.b(); ++j) {
      if (x[j].m() != y[j].m()) throw ParameterError("m-spotty distance: ring mismatch");
      differing += x[j] != y[j];
    }
    d += ceil_div(differing, layout.t());
  }
  return d;
}

AlphaVector::AlphaVector(std::vector<unsigned> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw ParameterError("alpha-vector needs at least one entry");
}

unsigned AlphaVector::bytes() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

unsigned AlphaVector::spotty_weight(unsigned t) const {
  if (t == 0) throw ParameterError("spotty parameter t must be positive");
  unsigned w = 0;
  for (unsigned j = 0; j < counts_.size(); ++j) w += ceil_div(j, t) * counts_[j];
  return w;
}

AlphaVector alpha_vector(std::span<const RingElement> coords, const ByteLayout& layout) {
  check_conforms(coords, layout);
  std::vector<unsigned> counts(layout.b() + 1, 0);
  for (std::size_t i = 0; i < layout.n(); ++i) {
    ++counts[hamming_weight(coords.subspan(i * layout.b(), layout.b()))];
  }
  return AlphaVector(std::move(counts));
}

void DistributionTable::add(const AlphaVector& alpha, Count count) {
  if (alpha.b() != layout_.b() || alpha.bytes() != layout_.n()) {
    throw ParameterError("alpha-vector of length " + std::to_string(alpha.counts().size()) +
                         " summing to " + std::to_string(alpha.bytes()) +
                         " does not fit b=" + std::to_string(layout_.b()) +
                         ", n=" + std::to_string(layout_.n()));
  }
  if (count == 0) return;
  entries_[alpha] += count;
  total_ += count;
}

void DistributionTable::merge(const DistributionTable& other) {
  if (other.layout_.b() != layout_.b() || other.layout_.n() != layout_.n()) {
    throw ParameterError("cannot merge distribution tables with different layouts");
  }
  for (const auto& [alpha, count] : other.entries_) add(alpha, count);
}

Count DistributionTable::count(const AlphaVector& alpha) const {
  const auto it = entries_.find(alpha);
  return it == entries_.end() ? 0 : it->second;
}

DistributionTable distribution(const LinearCode& code, unsigned workers) {
  return workers <= 1 ? kernels::distribution_serial(code)
                      : kernels::distribution_omp(code, workers);
}

Polynomial enumerator(const LinearCode& code) {
  std::vector<Count> histogram;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const unsigned w = m_spotty_weight(code.codeword(i), code.layout());
    if (w >= histogram.size()) histogram.resize(w + 1, 0);
    ++histogram[w];
  }
  Polynomial p;
  for (unsigned w = 0; w < histogram.size(); ++w) p.add_term(w, histogram[w]);
  return p;
}

}  // namespace spotty
