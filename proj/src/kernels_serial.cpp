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

// Serial reference kernels. Straight loops over the checked ring types; no
// packing, no tables.

#include <algorithm>

#include "spotty/error.hpp"
#include "spotty/kernels.hpp"

namespace spotty::kernels {

std::vector<RingElement> decode_index(const Ring& ring, std::size_t length, std::uint64_t index) {
  std::vector<RingElement> v(length, ring.zero());
  for (std::size_t j = length; j-- > 0;) {
    v[j] = ring.element(static_cast<std::uint32_t>(index & ring.mask()));
    index >>= ring.m();
  }
  return v;
}

std::vector<RingElement> span_serial(const GeneratorMatrix& g) {
  const Ring& ring = g.ring();
  const std::size_t len = g.layout().length();
  const std::size_t k = g.rows().size();
  const std::uint64_t tuples = ambient_size(ring, k);

  std::vector<std::vector<RingElement>> words;
  words.reserve(tuples);
  for (std::uint64_t index = 0; index < tuples; ++index) {
    const auto coeffs = decode_index(ring, k, index);
    std::vector<RingElement> w(len, ring.zero());
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t j = 0; j < len; ++j) w[j] = w[j] + coeffs[r] * g.rows()[r][j];
    }
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  std::vector<RingElement> flat;
  flat.reserve(words.size() * len);
  for (const auto& w : words) flat.insert(flat.end(), w.begin(), w.end());
  return flat;
}

namespace {

template <class Visit>
void scan_dual_serial(const GeneratorMatrix& g, Visit&& visit) {
  const Ring& ring = g.ring();
  const std::size_t len = g.layout().length();
  const std::uint64_t space = ambient_size(ring, len);
  for (std::uint64_t index = 0; index < space; ++index) {
    const auto v = decode_index(ring, len, index);
    const bool orthogonal = std::all_of(g.rows().begin(), g.rows().end(), [&](const auto& row) {
      return inner_product(row, v).is_zero();
    });
    if (orthogonal) visit(index, v);
  }
}

}  // namespace

std::vector<std::uint64_t> dual_members_serial(const GeneratorMatrix& g) {
  std::vector<std::uint64_t> out;
  scan_dual_serial(g, [&](std::uint64_t index, const auto&) { out.push_back(index); });
  return out;
}

DualTally dual_tally_serial(const GeneratorMatrix& g) {
  DualTally tally(g.layout());
  scan_dual_serial(g, [&](std::uint64_t, const std::vector<RingElement>& v) {
    ++tally.count;
    const unsigned w = m_spotty_weight(v, g.layout());
    if (w >= tally.spotty_histogram.size()) tally.spotty_histogram.resize(w + 1, 0);
    ++tally.spotty_histogram[w];
    tally.distribution.add(alpha_vector(v, g.layout()));
  });
  return tally;
}

DistributionTable distribution_serial(const LinearCode& code) {
  DistributionTable table(code.layout());
  for (std::size_t i = 0; i < code.size(); ++i) {
    table.add(alpha_vector(code.codeword(i), code.layout()));
  }
  return table;
}

}  // namespace spotty::kernels
