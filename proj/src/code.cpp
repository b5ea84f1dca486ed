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

#include "spotty/code.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "spotty/error.hpp"
#include "spotty/kernels.hpp"

namespace spotty {

ByteLayout::ByteLayout(unsigned b, unsigned t, unsigned n) : b_(b), t_(t), n_(n) {
  if (b < 1) throw ParameterError("byte size b must be at least 1");
  if (t < 1 || t > b) {
    throw ParameterError("spotty parameter t=" + std::to_string(t) + " outside [1, b=" +
                         std::to_string(b) + "]");
  }
  if (n < 1) throw ParameterError("a word needs at least one byte");
}

Word::Word(ByteLayout layout, std::vector<RingElement> coords)
    : layout_(layout), coords_(std::move(coords)) {
  if (coords_.size() != layout_.length()) {
    throw ParameterError("word has " + std::to_string(coords_.size()) + " coordinates, layout needs " +
                         std::to_string(layout_.length()));
  }
  for (const auto& x : coords_) {
    if (x.m() != coords_.front().m()) throw ParameterError("word mixes rings");
  }
}

Word::Word(const Ring& ring, ByteLayout layout)
    : Word(layout, std::vector<RingElement>(layout.length(), ring.zero())) {}

std::span<const RingElement> Word::byte(std::size_t i) const {
  if (i >= layout_.n()) throw ParameterError("byte index " + std::to_string(i) + " out of range");
  return std::span<const RingElement>(coords_).subspan(i * layout_.b(), layout_.b());
}

Word operator+(const Word& x, const Word& y) {
  if (x.layout() != y.layout()) throw ParameterError("word addition: layout mismatch");
  std::vector<RingElement> sum;
  sum.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sum.push_back(x[i] + y[i]);
  return Word(x.layout(), std::move(sum));
}

Word operator*(RingElement r, const Word& x) {
  std::vector<RingElement> out;
  out.reserve(x.size());
  for (const auto& c : x.coords()) out.push_back(r * c);
  return Word(x.layout(), std::move(out));
}

GeneratorMatrix::GeneratorMatrix(Ring ring, ByteLayout layout,
                                 std::vector<std::vector<RingElement>> rows)
    : ring_(ring), layout_(layout), rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != layout_.length()) {
      throw ParameterError("row " + std::to_string(r) + " has length " +
                           std::to_string(rows_[r].size()) + ", expected " +
                           std::to_string(layout_.length()));
    }
    for (const auto& x : rows_[r]) {
      if (x.m() != ring_.m()) throw ParameterError("row " + std::to_string(r) + " mixes rings");
    }
  }
}

LinearCode::LinearCode(Ring ring, ByteLayout layout, std::vector<RingElement> flat_symbols)
    : ring_(ring), layout_(layout), symbols_(std::move(flat_symbols)) {
  const std::size_t len = layout_.length();
  if (symbols_.size() % len != 0) throw ParameterError("flat codeword buffer is not a multiple of N");
  count_ = symbols_.size() / len;
  for (std::size_t i = 1; i < count_; ++i) {
    if (!word_less(codeword(i - 1), codeword(i))) {
      throw ParameterError("codewords must be distinct and in ascending order");
    }
  }
}

std::span<const RingElement> LinearCode::codeword(std::size_t i) const {
  const std::size_t len = layout_.length();
  return std::span<const RingElement>(symbols_).subspan(i * len, len);
}

Word LinearCode::word(std::size_t i) const {
  const auto c = codeword(i);
  return Word(layout_, std::vector<RingElement>(c.begin(), c.end()));
}

bool LinearCode::contains(std::span<const RingElement> w) const {
  std::size_t lo = 0;
  std::size_t hi = count_;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (word_less(codeword(mid), w)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < count_ && std::ranges::equal(codeword(lo), w);
}

bool word_less(std::span<const RingElement> x, std::span<const RingElement> y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

RingElement inner_product(std::span<const RingElement> c, std::span<const RingElement> v) {
  if (c.size() != v.size()) {
    throw ParameterError("inner product of lengths " + std::to_string(c.size()) + " and " +
                         std::to_string(v.size()));
  }
  if (c.empty()) throw ParameterError("inner product of empty vectors has no ring");
  RingElement acc(0, c.front().m());
  for (std::size_t i = 0; i < c.size(); ++i) acc = acc + c[i] * v[i];
  return acc;
}

std::uint64_t ambient_size(const Ring& ring, std::size_t length) noexcept {
  if (std::size_t{ring.m()} * length >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (ring.m() * length);
}

LinearCode span(const GeneratorMatrix& g, std::uint64_t budget, unsigned workers) {
  const std::uint64_t tuples = ambient_size(g.ring(), g.rows().size());
  if (tuples > budget) {
    throw ResourceError("span needs |R|^k = 2^" + std::to_string(g.ring().m() * g.rows().size()) +
                            " coefficient tuples",
                        tuples, budget);
  }
  auto flat = workers <= 1 ? kernels::span_serial(g) : kernels::span_omp(g, workers);
  return LinearCode(g.ring(), g.layout(), std::move(flat));
}

LinearCode dual(const GeneratorMatrix& g, std::uint64_t budget, unsigned workers) {
  const std::size_t len = g.layout().length();
  const std::uint64_t space = ambient_size(g.ring(), len);
  if (space > budget) {
    throw ResourceError("dual scan needs |R|^N = 2^" + std::to_string(g.ring().m() * len) + " vectors",
                        space, budget);
  }
  // The packed kernel is used even for one worker; the serial reference is
  // kept for cross-checking.
  const auto members = kernels::dual_members_omp(g, workers);
  std::vector<RingElement> flat;
  flat.reserve(members.size() * len);
  for (std::uint64_t index : members) {
    const auto v = kernels::decode_index(g.ring(), len, index);
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return LinearCode(g.ring(), g.layout(), std::move(flat));
}

GeneratorMatrix generators_of(const LinearCode& code) {
  const Ring& ring = code.ring();
  const auto elements = ring.elements();
  std::vector<bool> reached(code.size(), false);
  std::vector<std::size_t> members;  // indices of the current span

  auto index_of = [&](std::span<const RingElement> w) {
    std::size_t lo = 0;
    std::size_t hi = code.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (word_less(code.codeword(mid), w)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo == code.size() || !std::ranges::equal(code.codeword(lo), w)) {
      throw IntegrityError("codeword set is not closed under R-linear combinations");
    }
    return lo;
  };

  const std::size_t len = code.layout().length();
  const std::vector<RingElement> zero(len, ring.zero());
  const std::size_t zero_index = index_of(zero);
  reached[zero_index] = true;
  members.push_back(zero_index);

  std::vector<std::vector<RingElement>> rows;
  std::vector<RingElement> scratch(len, ring.zero());
  for (std::size_t g = 0; g < code.size(); ++g) {
    if (reached[g]) continue;
    const auto gen = code.codeword(g);
    rows.emplace_back(gen.begin(), gen.end());

    // New span = old span + R * gen.
    std::vector<std::vector<RingElement>> multiples;
    for (const auto& r : elements) {
      std::vector<RingElement> m(len, ring.zero());
      for (std::size_t j = 0; j < len; ++j) m[j] = r * gen[j];
      multiples.push_back(std::move(m));
    }
    std::sort(multiples.begin(), multiples.end());
    multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());

    const std::size_t old_size = members.size();
    for (std::size_t s = 0; s < old_size; ++s) {
      const auto base = code.codeword(members[s]);
      for (const auto& m : multiples) {
        for (std::size_t j = 0; j < len; ++j) scratch[j] = base[j] + m[j];
        const std::size_t idx = index_of(scratch);
        if (!reached[idx]) {
          reached[idx] = true;
          members.push_back(idx);
        }
      }
    }
  }
  return GeneratorMatrix(ring, code.layout(), std::move(rows));
}

std::uint64_t code_size_from_profile(std::span<const unsigned> k_profile) {
  const std::size_t m = k_profile.size();
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < m; ++i) s += (m - i) * std::uint64_t{k_profile[i]};
  if (s >= 64) throw ParameterError("code size 2^" + std::to_string(s) + " does not fit 64 bits");
  return std::uint64_t{1} << s;
}

bool is_linear(const LinearCode& code, std::uint64_t seed, std::size_t exhaustive_limit,
               std::size_t samples) {
  const std::size_t len = code.layout().length();
  const auto elements = code.ring().elements();
  std::vector<RingElement> scratch(len, code.ring().zero());

  auto sum_in = [&](std::size_t a, std::size_t b) {
    const auto x = code.codeword(a);
    const auto y = code.codeword(b);
    for (std::size_t j = 0; j < len; ++j) scratch[j] = x[j] + y[j];
    return code.contains(scratch);
  };
  auto multiples_in = [&](std::size_t a) {
    const auto x = code.codeword(a);
    return std::all_of(elements.begin(), elements.end(), [&](RingElement r) {
      for (std::size_t j = 0; j < len; ++j) scratch[j] = r * x[j];
      return code.contains(scratch);
    });
  };

  if (!code.contains(std::vector<RingElement>(len, code.ring().zero()))) return false;
  for (std::size_t a = 0; a < code.size(); ++a) {
    if (!multiples_in(a)) return false;
  }
  if (code.size() <= exhaustive_limit) {
    for (std::size_t a = 0; a < code.size(); ++a) {
      for (std::size_t b = a; b < code.size(); ++b) {
        if (!sum_in(a, b)) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, code.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    if (!sum_in(pick(rng), pick(rng))) return false;
  }
  return true;
}

}  // namespace spotty
