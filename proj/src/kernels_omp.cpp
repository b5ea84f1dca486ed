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

// OpenMP kernels. Vectors are packed into 64-bit lanes, m bits per symbol,
// with symbol 0 in the most significant position of lane 0, so comparing
// lane arrays compares coefficient vectors lexicographically.

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "spotty/error.hpp"
#include "spotty/kernels.hpp"

namespace spotty::kernels {

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;

class Packing {
 public:
  Packing(unsigned m, std::size_t slots)
      : m_(m), per_lane_(64 / m), lanes_((slots + per_lane_ - 1) / per_lane_) {}

  std::size_t lanes() const noexcept { return lanes_; }
  std::size_t lane(std::size_t slot) const noexcept { return slot / per_lane_; }
  unsigned shift(std::size_t slot) const noexcept {
    return static_cast<unsigned>((per_lane_ - 1 - slot % per_lane_) * m_);
  }
  void put(std::uint64_t* lanes, std::size_t slot, std::uint32_t value) const noexcept {
    lanes[lane(slot)] |= std::uint64_t{value} << shift(slot);
  }
  std::uint32_t get(const std::uint64_t* lanes, std::size_t slot, std::uint32_t mask) const noexcept {
    return static_cast<std::uint32_t>(lanes[lane(slot)] >> shift(slot)) & mask;
  }

 private:
  unsigned m_;
  std::size_t per_lane_;
  std::size_t lanes_;
};

unsigned thread_count(unsigned workers) { return std::max(1u, workers); }

// Bit-packed alpha-vector key: alpha_j occupies bits [j*width, (j+1)*width).
class AlphaKey {
 public:
  static std::optional<AlphaKey> make(const ByteLayout& layout) {
    const unsigned width = static_cast<unsigned>(std::bit_width(layout.n()));
    if (std::size_t{width} * (layout.b() + 1) > 64) return std::nullopt;
    return AlphaKey(layout, width);
  }

  std::uint64_t unit(unsigned byte_weight) const noexcept {
    return std::uint64_t{1} << (byte_weight * width_);
  }

  AlphaVector decode(std::uint64_t key) const {
    std::vector<unsigned> counts(b_ + 1);
    const std::uint64_t mask = (std::uint64_t{1} << width_) - 1;
    for (unsigned j = 0; j <= b_; ++j) counts[j] = static_cast<unsigned>((key >> (j * width_)) & mask);
    return AlphaVector(std::move(counts));
  }

 private:
  AlphaKey(const ByteLayout& layout, unsigned width) : b_(layout.b()), width_(width) {}

  unsigned b_;
  unsigned width_;
};

using KeyCounts = std::unordered_map<std::uint64_t, Count>;

void flush_keys(const KeyCounts& counts, const AlphaKey& key, DistributionTable& table) {
  std::vector<std::pair<std::uint64_t, Count>> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [k, c] : sorted) table.add(key.decode(k), c);
}

// Packed inner-product contributions: entry (j, x) holds row_r[j] * x in
// slot r for every row r. A vector is orthogonal to all rows iff the XOR
// of its entries is zero.
struct DualPlan {
  unsigned m;
  std::uint32_t mask;
  std::size_t length;
  std::size_t lanes;
  std::uint64_t space;
  std::vector<std::uint64_t> table;  // [j][x][lane]

  explicit DualPlan(const GeneratorMatrix& g)
      : m(g.ring().m()),
        mask(g.ring().mask()),
        length(g.layout().length()),
        lanes(Packing(m, g.rows().size()).lanes()),
        space(ambient_size(g.ring(), length)) {
    if (std::size_t{m} * length > 63) {
      throw ResourceError("dual scan index does not fit 63 bits", space, std::uint64_t{1} << 63);
    }
    const Packing packing(m, g.rows().size());
    const std::size_t q = g.ring().size();
    table.assign(length * q * lanes, 0);
    for (std::size_t j = 0; j < length; ++j) {
      for (std::uint32_t x = 0; x < q; ++x) {
        std::uint64_t* entry = &table[(j * q + x) * lanes];
        for (std::size_t r = 0; r < g.rows().size(); ++r) {
          packing.put(entry, r, detail::clmul(g.rows()[r][j].bits(), x, mask));
        }
      }
    }
  }

  std::uint32_t digit(std::uint64_t index, std::size_t j) const noexcept {
    return static_cast<std::uint32_t>(index >> ((length - 1 - j) * m)) & mask;
  }

  bool orthogonal(std::uint64_t index) const noexcept {
    const std::size_t q = std::size_t{mask} + 1;
    if (lanes == 1) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < length; ++j) acc ^= table[j * q + digit(index, j)];
      return acc == 0;
    }
    for (std::size_t l = 0; l < lanes; ++l) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < length; ++j) acc ^= table[(j * q + digit(index, j)) * lanes + l];
      if (acc != 0) return false;
    }
    return true;
  }

  std::uint64_t chunks() const noexcept { return (space + kChunk - 1) / kChunk; }
};

}  // namespace

std::vector<RingElement> span_omp(const GeneratorMatrix& g, unsigned workers) {
  const Ring& ring = g.ring();
  const unsigned m = ring.m();
  const std::size_t len = g.layout().length();
  const std::size_t k = g.rows().size();
  const std::size_t q = ring.size();
  const std::uint64_t tuples = ambient_size(ring, k);
  const Packing packing(m, len);
  const std::size_t lanes = packing.lanes();

  // scaled[(r * q + a) * lanes + l] = lane l of a * row_r
  std::vector<std::uint64_t> scaled(k * q * lanes, 0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::size_t j = 0; j < len; ++j) {
        packing.put(&scaled[(r * q + a) * lanes], j, detail::clmul(a, g.rows()[r][j].bits(), ring.mask()));
      }
    }
  }

  std::vector<std::uint64_t> words(tuples * lanes, 0);
  const auto n_tuples = static_cast<std::int64_t>(tuples);
#pragma omp parallel for schedule(static) num_threads(thread_count(workers))
  for (std::int64_t t = 0; t < n_tuples; ++t) {
    std::uint64_t* out = &words[static_cast<std::size_t>(t) * lanes];
    auto index = static_cast<std::uint64_t>(t);
    for (std::size_t r = k; r-- > 0;) {
      const std::uint64_t* row = &scaled[(r * q + (index & ring.mask())) * lanes];
      for (std::size_t l = 0; l < lanes; ++l) out[l] ^= row[l];
      index >>= m;
    }
  }

  std::vector<std::size_t> order;
  if (lanes == 1) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    order.resize(words.size());
    std::iota(order.begin(), order.end(), 0);
  } else {
    order.resize(tuples);
    std::iota(order.begin(), order.end(), 0);
    auto lane_view = [&](std::size_t i) { return words.begin() + static_cast<std::ptrdiff_t>(i * lanes); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(lane_view(a), lane_view(a) + lanes, lane_view(b), lane_view(b) + lanes);
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t a, std::size_t b) {
                              return std::equal(lane_view(a), lane_view(a) + lanes, lane_view(b));
                            }),
                order.end());
  }

  std::vector<RingElement> flat;
  flat.reserve(order.size() * len);
  for (std::size_t i : order) {
    for (std::size_t j = 0; j < len; ++j) {
      flat.push_back(ring.element(packing.get(&words[i * lanes], j, ring.mask())));
    }
  }
  return flat;
}

std::vector<std::uint64_t> dual_members_omp(const GeneratorMatrix& g, unsigned workers) {
  const DualPlan plan(g);
  const auto n_chunks = static_cast<std::int64_t>(plan.chunks());
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(n_chunks));

#pragma omp parallel for schedule(dynamic) num_threads(thread_count(workers))
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(plan.space, begin + kChunk);
    auto& out = found[static_cast<std::size_t>(c)];
    for (std::uint64_t index = begin; index < end; ++index) {
      if (plan.orthogonal(index)) out.push_back(index);
    }
  }

  std::vector<std::uint64_t> members;
  for (const auto& part : found) members.insert(members.end(), part.begin(), part.end());
  return members;
}

DualTally dual_tally_omp(const GeneratorMatrix& g, unsigned workers) {
  const DualPlan plan(g);
  const ByteLayout layout = g.layout();
  const auto key = AlphaKey::make(layout);
  if (!key) {
    throw ParameterError("alpha-vectors for b=" + std::to_string(layout.b()) + ", n=" +
                         std::to_string(layout.n()) + " do not pack into 64 bits");
  }
  const std::size_t max_weight = std::size_t{layout.n()} * ceil_div(layout.b(), layout.t());
  const auto n_chunks = static_cast<std::int64_t>(plan.chunks());
  const unsigned threads = thread_count(workers);

  std::vector<std::uint64_t> counts(threads, 0);
  std::vector<std::vector<std::uint64_t>> histograms(threads, std::vector<std::uint64_t>(max_weight + 1, 0));
  std::vector<KeyCounts> alphas(threads);

#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < n_chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(plan.space, begin + kChunk);
      for (std::uint64_t index = begin; index < end; ++index) {
        if (!plan.orthogonal(index)) continue;
        std::uint64_t alpha = 0;
        unsigned spotty = 0;
        for (std::size_t byte = 0; byte < layout.n(); ++byte) {
          unsigned w = 0;
          for (std::size_t j = byte * layout.b(); j < (byte + 1) * layout.b(); ++j) w += plan.digit(index, j) != 0;
          alpha += key->unit(w);
          spotty += ceil_div(w, layout.t());
        }
        ++counts[tid];
        ++histograms[tid][spotty];
        ++alphas[tid][alpha];
      }
    }
  }

  DualTally tally(layout);
  tally.spotty_histogram.assign(max_weight + 1, 0);
  KeyCounts merged;
  for (unsigned tid = 0; tid < threads; ++tid) {
    tally.count += counts[tid];
    for (std::size_t w = 0; w <= max_weight; ++w) tally.spotty_histogram[w] += histograms[tid][w];
    for (const auto& [k, c] : alphas[tid]) merged[k] += c;
  }
  while (!tally.spotty_histogram.empty() && tally.spotty_histogram.back() == 0) {
    tally.spotty_histogram.pop_back();
  }
  flush_keys(merged, *key, tally.distribution);
  return tally;
}

DistributionTable distribution_omp(const LinearCode& code, unsigned workers) {
  const ByteLayout layout = code.layout();
  const auto key = AlphaKey::make(layout);
  if (!key) return distribution_serial(code);

  const unsigned threads = thread_count(workers);
  std::vector<KeyCounts> alphas(threads);
  const auto n_words = static_cast<std::int64_t>(code.size());

#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n_words; ++i) {
      const auto word = code.codeword(static_cast<std::size_t>(i));
      std::uint64_t alpha = 0;
      for (std::size_t byte = 0; byte < layout.n(); ++byte) {
        alpha += key->unit(hamming_weight(word.subspan(byte * layout.b(), layout.b())));
      }
      ++alphas[tid][alpha];
    }
  }

  KeyCounts merged;
  for (const auto& part : alphas) {
    for (const auto& [k, c] : part) merged[k] += c;
  }
  DistributionTable table(layout);
  flush_keys(merged, *key, table);
  return table;
}

}  // namespace spotty::kernels
