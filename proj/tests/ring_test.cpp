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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "spotty/error.hpp"
#include "spotty/ring.hpp"

namespace spotty {
namespace {

TEST(RingTest, AddIsXor) {
  const Ring r(4);
  for (auto a : r.elements()) {
    EXPECT_EQ(a + a, r.zero());
    EXPECT_EQ(r.zero() + a, a);
  }
  EXPECT_EQ(r.parse("u+u2") + r.parse("u2+u3"), r.parse("u+u3"));
}

TEST(RingTest, MulTruncatesAtUm) {
  const Ring r(4);
  EXPECT_EQ(r.u_pow(1) * r.u_pow(3), r.zero());
  for (unsigned m = 1; m <= 16; ++m) {
    const Ring rm(m);
    EXPECT_TRUE((rm.u_pow(1) * rm.u_pow(m - 1)).is_zero()) << "m=" << m;
  }
  const auto x = r.parse("u+u2");
  EXPECT_EQ(x * x, r.parse("u2"));
  for (auto a : r.elements()) EXPECT_EQ(r.one() * a, a);
}

TEST(RingTest, MismatchedRingsThrow) {
  const Ring a(3);
  const Ring b(4);
  EXPECT_THROW(a.one() + b.one(), ParameterError);
  EXPECT_THROW(a.one() * b.one(), ParameterError);
}

TEST(RingTest, ParameterRange) {
  EXPECT_THROW(Ring(0), ParameterError);
  EXPECT_THROW(Ring(17), ParameterError);
  EXPECT_NO_THROW(Ring(16));
  EXPECT_THROW(RingElement(8, 3), ParameterError);
}

TEST(RingTest, UnitCriterion) {
  const Ring r(4);
  EXPECT_TRUE(is_unit(r.parse("1+u3")));
  EXPECT_FALSE(is_unit(r.parse("u")));
  EXPECT_FALSE(is_unit(r.zero()));
}

TEST(RingTest, UnitIffInvertible) {
  for (unsigned m = 1; m <= 8; ++m) {
    const Ring r(m);
    for (auto x : r.elements()) {
      bool invertible = false;
      for (auto y : r.elements()) invertible = invertible || x * y == r.one();
      EXPECT_EQ(is_unit(x), invertible) << to_string(x) << " m=" << m;
    }
  }
}

TEST(RingTest, IdealChain) {
  const Ring r(4);
  EXPECT_EQ(r.ideal(2), (std::vector{r.zero(), r.parse("u2"), r.parse("u3"), r.parse("u2+u3")}));
  EXPECT_EQ(r.ideal(3), (std::vector{r.zero(), r.parse("u3")}));
  EXPECT_EQ(r.ideal(0).size(), 16u);
  EXPECT_EQ(r.ideal(4), std::vector{r.zero()});
  EXPECT_THROW(r.ideal(5), ParameterError);

  // <u^k> = u^k R
  for (unsigned k = 0; k <= 4; ++k) {
    std::set<RingElement> multiples;
    for (auto x : r.elements()) multiples.insert(r.u_pow(k) * x);
    const auto ideal = r.ideal(k);
    EXPECT_EQ(std::set<RingElement>(ideal.begin(), ideal.end()), multiples) << "k=" << k;
  }
}

TEST(RingTest, Character) {
  const Ring r(4);
  EXPECT_EQ(chi(r.zero()), 1);
  EXPECT_EQ(chi(r.parse("u3")), -1);
  EXPECT_EQ(chi(r.parse("1+u+u2")), 1);
  // m = 1 uses the binary character, so 1 is not in the kernel.
  EXPECT_EQ(chi(Ring(1).one()), -1);
}

TEST(RingTest, CharacterIsAdditive) {
  for (unsigned m = 1; m <= 8; ++m) {
    const Ring r(m);
    for (auto a : r.elements()) {
      for (auto b : r.elements()) ASSERT_EQ(chi(a + b), chi(a) * chi(b));
    }
  }
}

TEST(RingTest, CharacterSumsVanish) {
  for (unsigned m = 1; m <= 8; ++m) {
    const Ring r(m);
    for (unsigned k = 0; k < m; ++k) {
      int s = 0;
      for (auto a : r.ideal(k)) s += chi(a);
      EXPECT_EQ(s, 0) << "m=" << m << " k=" << k;
    }
    for (auto a : r.elements()) {
      int s = 0;
      for (auto x : r.elements()) s += chi(a * x);
      EXPECT_EQ(s, a.is_zero() ? static_cast<int>(r.size()) : 0);
    }
  }
}

TEST(RingTest, PartitionMatchesListedSets) {
  const Ring r(4);
  const auto p = r.partition();
  std::vector<RingElement> a;
  for (const char* s : {"0", "1", "u", "1+u", "u2", "u+u2", "1+u2", "1+u+u2"}) a.push_back(r.parse(s));
  std::sort(a.begin(), a.end());
  EXPECT_EQ(p.a, a);
  std::vector<RingElement> b;
  for (const char* s : {"u3", "u+u3", "u2+u3", "u+u2+u3", "1+u3", "1+u+u3", "1+u2+u3", "1+u+u2+u3"}) {
    b.push_back(r.parse(s));
  }
  std::sort(b.begin(), b.end());
  EXPECT_EQ(p.b, b);
}

TEST(RingTest, SmallPartitions) {
  const Ring r2(2);
  EXPECT_EQ(r2.partition().a, (std::vector{r2.zero(), r2.one()}));
  EXPECT_EQ(r2.partition().b, (std::vector{r2.parse("u"), r2.parse("1+u")}));
  const Ring r3(3);
  EXPECT_EQ(r3.partition().a, (std::vector{r3.zero(), r3.one(), r3.parse("u"), r3.parse("1+u")}));
  EXPECT_THROW(Ring(1).partition(), ParameterError);
  for (unsigned m = 2; m <= 8; ++m) {
    const auto p = Ring(m).partition();
    EXPECT_EQ(p.a.size(), p.b.size());
  }
}

TEST(RingTest, Census) {
  EXPECT_EQ(Ring(4).census(), (Census{8, 7}));
  EXPECT_EQ(Ring(1).census(), (Census{1, 0}));
  EXPECT_EQ(Ring(3).census(), (Census{4, 3}));
  for (unsigned m = 1; m <= 12; ++m) {
    const Ring r(m);
    Census counted{0, 0};
    for (auto x : r.elements()) {
      if (is_unit(x)) {
        ++counted.units;
      } else if (!x.is_zero()) {
        ++counted.nonzero_zero_divisors;
      }
    }
    EXPECT_EQ(r.census(), counted) << "m=" << m;
  }
}

TEST(RingTest, RingAxiomsExhaustive) {
  for (unsigned m = 1; m <= 4; ++m) {
    const Ring r(m);
    for (auto a : r.elements()) {
      for (auto b : r.elements()) {
        ASSERT_EQ(a * b, b * a);
        for (auto c : r.elements()) {
          ASSERT_EQ((a * b) * c, a * (b * c));
          ASSERT_EQ(a * (b + c), a * b + a * c);
        }
      }
    }
  }
}

TEST(RingTest, RingAxiomsRandomized) {
  std::mt19937_64 rng(7);
  for (unsigned m : {9u, 12u, 16u}) {
    const Ring r(m);
    std::uniform_int_distribution<std::uint32_t> pick(0, r.mask());
    for (int i = 0; i < 2000; ++i) {
      const auto a = r.element(pick(rng));
      const auto b = r.element(pick(rng));
      const auto c = r.element(pick(rng));
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(RingTest, TextRoundTrip) {
  for (unsigned m : {1u, 4u, 7u}) {
    const Ring r(m);
    for (auto x : r.elements()) EXPECT_EQ(r.parse(to_string(x)), x);
  }
  const Ring r(16);
  EXPECT_EQ(to_string(r.parse("u15+1+u^2")), "1+u2+u15");
}

TEST(RingTest, TextErrors) {
  const Ring r(4);
  EXPECT_THROW(r.parse(""), ParseError);
  EXPECT_THROW(r.parse("u+u"), ParseError);
  EXPECT_THROW(r.parse("u2+u^2"), ParseError);
  EXPECT_THROW(r.parse("u4"), ParseError);  // vanishes for m=4
  EXPECT_THROW(r.parse("x"), ParseError);
  EXPECT_THROW(r.parse("u+"), ParseError);
  EXPECT_THROW(r.parse("u1"), ParseError);
  EXPECT_THROW(r.parse("u02"), ParseError);
  EXPECT_THROW(r.parse("0+u"), ParseError);
}

}  // namespace
}  // namespace spotty
