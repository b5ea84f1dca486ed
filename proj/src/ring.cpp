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

#include "spotty/ring.hpp"

#include <algorithm>
#include <charconv>

#include "spotty/error.hpp"

namespace spotty {

namespace {

void check_m(unsigned m) {
  if (m < 1 || m > kMaxNilpotency) {
    throw ParameterError("nilpotency index m=" + std::to_string(m) + " outside [1, 16]");
  }
}

void check_same(RingElement a, RingElement b) {
  if (a.m() != b.m()) {
    throw ParameterError("ring mismatch: m=" + std::to_string(a.m()) + " vs m=" +
                         std::to_string(b.m()));
  }
}

}  // namespace

RingElement::RingElement(std::uint32_t bits, unsigned m) {
  check_m(m);
  if (bits >> m) {
    throw ParameterError("coefficient vector " + std::to_string(bits) + " has bits above u^" +
                         std::to_string(m - 1));
  }
  bits_ = static_cast<std::uint16_t>(bits);
  m_ = static_cast<std::uint8_t>(m);
}

RingElement add(RingElement a, RingElement b) {
  check_same(a, b);
  return RingElement(a.bits() ^ b.bits(), a.m());
}

RingElement mul(RingElement a, RingElement b) {
  check_same(a, b);
  return RingElement(detail::clmul(a.bits(), b.bits(), (1u << a.m()) - 1), a.m());
}

bool is_unit(RingElement x) noexcept { return x.coeff(0); }

int chi(RingElement x) noexcept { return x.coeff(x.m() - 1) ? -1 : 1; }

Ring::Ring(unsigned m) : m_(m) { check_m(m); }

std::vector<RingElement> Ring::elements() const {
  std::vector<RingElement> out;
  out.reserve(size());
  for (std::uint32_t x = 0; x < size(); ++x) out.push_back(element(x));
  return out;
}

std::vector<RingElement> Ring::ideal(unsigned k) const {
  if (k > m_) {
    throw ParameterError("ideal index k=" + std::to_string(k) + " outside [0, " +
                         std::to_string(m_) + "]");
  }
  // u^k R is exactly the set of vectors whose low k coefficients vanish.
  std::vector<RingElement> out;
  out.reserve(std::size_t{1} << (m_ - k));
  for (std::uint32_t r = 0; r < (1u << (m_ - k)); ++r) out.push_back(element(r << k));
  return out;
}

Partition Ring::partition() const {
  if (m_ < 2) {
    throw ParameterError("the A/B partition needs m >= 2 (1 must lie in A)");
  }
  Partition p;
  for (auto x : elements()) (chi(x) == 1 ? p.a : p.b).push_back(x);
  return p;
}

Census Ring::census() const noexcept {
  const std::uint32_t half = 1u << (m_ - 1);
  return {half, half - 1};
}

RingElement Ring::parse(std::string_view text) const {
  if (text.empty()) throw ParseError("empty ring element");
  if (text == "0") return zero();

  std::uint32_t bits = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find('+', pos), text.size());
    const std::string_view mono = text.substr(pos, end - pos);
    const std::string where = " at offset " + std::to_string(pos);
    if (mono.empty()) throw ParseError("empty monomial in '" + std::string(text) + "'" + where);

    unsigned power = 0;
    if (mono == "1") {
      power = 0;
    } else if (mono == "u") {
      power = 1;
    } else if (mono.front() == 'u') {
      std::string_view digits = mono.substr(1);
      if (!digits.empty() && digits.front() == '^') digits.remove_prefix(1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() ||
          digits.front() == '0' || power < 2 || power > 15) {
        throw ParseError("bad monomial '" + std::string(mono) + "'" + where);
      }
    } else {
      throw ParseError("bad monomial '" + std::string(mono) + "'" + where);
    }

    if (power >= m_) {
      throw ParseError("monomial '" + std::string(mono) + "' vanishes in a ring with m=" +
                       std::to_string(m_) + where);
    }
    if (bits & (1u << power)) {
      throw ParseError("duplicate monomial '" + std::string(mono) + "'" + where);
    }
    bits |= 1u << power;

    if (end == text.size()) break;
    pos = end + 1;
  }
  return element(bits);
}

std::string to_string(RingElement x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (unsigned i = 0; i < x.m(); ++i) {
    if (!x.coeff(i)) continue;
    if (!out.empty()) out += '+';
    out += i == 0 ? "1" : i == 1 ? "u" : "u" + std::to_string(i);
  }
  return out;
}

}  // namespace spotty
