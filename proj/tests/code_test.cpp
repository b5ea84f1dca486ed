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

#include "fixtures.hpp"
#include "spotty/code.hpp"
#include "spotty/error.hpp"

namespace spotty {
namespace {

std::vector<RingElement> parse_all(const Ring& r, std::initializer_list<const char*> items) {
  std::vector<RingElement> out;
  for (const char* s : items) out.push_back(r.parse(s));
  return out;
}

GeneratorMatrix random_matrix(std::mt19937_64& rng, unsigned m, unsigned b, unsigned n, unsigned k) {
  const Ring r(m);
  const ByteLayout layout(b, 1, n);
  std::uniform_int_distribution<std::uint32_t> pick(0, r.mask());
  std::vector<std::vector<RingElement>> rows(k);
  for (auto& row : rows) {
    for (std::size_t j = 0; j < layout.length(); ++j) row.push_back(r.element(pick(rng)));
  }
  return GeneratorMatrix(r, layout, rows);
}

TEST(ByteLayoutTest, Bounds) {
  EXPECT_THROW(ByteLayout(3, 4, 1), ParameterError);
  EXPECT_THROW(ByteLayout(3, 0, 1), ParameterError);
  EXPECT_THROW(ByteLayout(3, 1, 0), ParameterError);
  EXPECT_THROW(ByteLayout(0, 1, 1), ParameterError);
  EXPECT_EQ(ByteLayout(3, 2, 5).length(), 15u);
}

TEST(WordTest, BytesAndArithmetic) {
  const Ring r(4);
  const ByteLayout layout(2, 1, 2);
  const Word x(layout, parse_all(r, {"1", "u", "0", "u3"}));
  EXPECT_EQ(x.byte(1)[1], r.parse("u3"));
  EXPECT_THROW(x.byte(2), ParameterError);
  EXPECT_EQ(x + x, Word(r, layout));
  EXPECT_EQ(r.parse("u") * x, Word(layout, parse_all(r, {"u", "u2", "0", "0"})));
  EXPECT_THROW(Word(layout, parse_all(r, {"1"})), ParameterError);
}

TEST(InnerProductTest, Values) {
  const Ring r(4);
  EXPECT_EQ(inner_product(parse_all(r, {"1", "u"}), parse_all(r, {"0", "0"})), r.zero());
  EXPECT_EQ(inner_product(parse_all(r, {"1", "u"}), parse_all(r, {"u", "1"})), r.zero());
  EXPECT_EQ(inner_product(parse_all(r, {"u", "u2"}), parse_all(r, {"u2", "1"})), r.parse("u2+u3"));
  EXPECT_THROW(inner_product(parse_all(r, {"u"}), parse_all(r, {"u", "1"})), ParameterError);
}

TEST(InnerProductTest, SymmetricAndBilinear) {
  std::mt19937_64 rng(11);
  for (unsigned m : {1u, 3u, 6u}) {
    const Ring r(m);
    std::uniform_int_distribution<std::uint32_t> pick(0, r.mask());
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<RingElement> a, b, v;
      for (int i = 0; i < 5; ++i) {
        a.push_back(r.element(pick(rng)));
        b.push_back(r.element(pick(rng)));
        v.push_back(r.element(pick(rng)));
      }
      std::vector<RingElement> sum;
      for (int i = 0; i < 5; ++i) sum.push_back(a[i] + b[i]);
      ASSERT_EQ(inner_product(a, v), inner_product(v, a));
      ASSERT_EQ(inner_product(sum, v), inner_product(a, v) + inner_product(b, v));
    }
  }
}

TEST(SpanTest, WorkedExampleHas512Codewords) {
  const auto code = span(testing::example_matrix());
  EXPECT_EQ(code.size(), 512u);
  EXPECT_TRUE(is_linear(code));
}

TEST(SpanTest, Degenerate) {
  const Ring r(2);
  const GeneratorMatrix zero_row(r, ByteLayout(1, 1, 1), {{r.zero()}});
  EXPECT_EQ(span(zero_row).size(), 1u);

  const GeneratorMatrix u_row(r, ByteLayout(1, 1, 1), {{r.parse("u")}});
  const auto code = span(u_row);
  ASSERT_EQ(code.size(), 2u);
  EXPECT_EQ(code.codeword(0)[0], r.zero());
  EXPECT_EQ(code.codeword(1)[0], r.parse("u"));

  const GeneratorMatrix empty(r, ByteLayout(2, 1, 1), {});
  EXPECT_EQ(span(empty).size(), 1u);
}

TEST(SpanTest, BudgetIsEnforced) {
  const auto g = testing::example_matrix();
  try {
    span(g, 4095);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.required(), 4096u);
  }
}

TEST(SpanTest, WorkerCountDoesNotChangeResult) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_matrix(rng, 3, 2, 2, 2);
    const auto one = span(g, kDefaultSpanBudget, 1);
    const auto four = span(g, kDefaultSpanBudget, 4);
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i) ASSERT_EQ(one.word(i), four.word(i));
  }
}

TEST(SpanTest, LexicographicOrder) {
  const auto code = span(testing::example_matrix());
  for (std::size_t i = 1; i < code.size(); ++i) ASSERT_TRUE(word_less(code.codeword(i - 1), code.codeword(i)));
}

TEST(DualTest, WorkedExampleHas32768Codewords) {
  const auto g = testing::example_matrix();
  const auto d = dual(g, kDefaultDualBudget, 2);
  EXPECT_EQ(d.size(), 32768u);
  EXPECT_EQ(std::uint64_t{span(g).size()} * d.size(), std::uint64_t{1} << 24);
}

TEST(DualTest, FullSpaceAndEmpty) {
  const Ring r(2);
  const ByteLayout layout(2, 1, 1);
  const GeneratorMatrix identity(r, layout, {{r.one(), r.zero()}, {r.zero(), r.one()}});
  EXPECT_EQ(dual(identity).size(), 1u);
  const GeneratorMatrix empty(r, layout, {});
  EXPECT_EQ(dual(empty).size(), 16u);
}

TEST(DualTest, BudgetIsEnforced) {
  EXPECT_THROW(dual(testing::example_matrix(), 1 << 20), ResourceError);
}

TEST(DualTest, CardinalityAndDoubleDual) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned m = 1 + trial % 3;
    const unsigned n = 1 + trial % 4;
    const auto g = random_matrix(rng, m, 1, n, 1 + trial % 3);
    const auto c = span(g);
    const auto d = dual(g);
    EXPECT_EQ(std::uint64_t{c.size()} * d.size(), ambient_size(g.ring(), n));
    EXPECT_TRUE(is_linear(d));

    const auto dd = dual(generators_of(d));
    ASSERT_EQ(dd.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) ASSERT_EQ(dd.word(i), c.word(i));
  }
}

TEST(GeneratorsOfTest, RegeneratesCode) {
  const auto code = span(testing::example_matrix());
  const auto gens = generators_of(code);
  EXPECT_LE(gens.rows().size(), 9u);
  const auto again = span(gens);
  ASSERT_EQ(again.size(), code.size());
  for (std::size_t i = 0; i < code.size(); ++i) ASSERT_EQ(again.word(i), code.word(i));
}

TEST(ProfileTest, CodeSize) {
  EXPECT_EQ(code_size_from_profile(std::vector<unsigned>{1, 1, 1, 0}), 512u);
  EXPECT_EQ(code_size_from_profile(std::vector<unsigned>{0, 0, 0}), 1u);
  EXPECT_EQ(code_size_from_profile(std::vector<unsigned>{2, 1}), 32u);
}

TEST(ProfileTest, MatchesStandardFormSpan) {
  const Ring r(2);
  // profile (2, 1): rows (1,0,0,1), (0,1,0,u), (0,0,u,u)
  const GeneratorMatrix g(r, ByteLayout(1, 1, 4),
                          {{r.one(), r.zero(), r.zero(), r.one()},
                           {r.zero(), r.one(), r.zero(), r.parse("u")},
                           {r.zero(), r.zero(), r.parse("u"), r.parse("u")}});
  EXPECT_EQ(span(g).size(), code_size_from_profile(std::vector<unsigned>{2, 1}));

  const Ring r3(3);
  // profile (1, 1, 1) over m = 3: 2^{3 + 2 + 1}
  const GeneratorMatrix g3(r3, ByteLayout(1, 1, 4),
                           {{r3.one(), r3.zero(), r3.zero(), r3.parse("u")},
                            {r3.zero(), r3.parse("u"), r3.zero(), r3.parse("u2")},
                            {r3.zero(), r3.zero(), r3.parse("u2"), r3.parse("u2")}});
  EXPECT_EQ(span(g3).size(), code_size_from_profile(std::vector<unsigned>{1, 1, 1}));
}

TEST(LinearityTest, DetectsNonLinearSet) {
  const Ring r(2);
  // {0, 1} is not closed under multiplication by u.
  const LinearCode not_linear(r, ByteLayout(1, 1, 1), {r.zero(), r.one()});
  EXPECT_FALSE(is_linear(not_linear));
  const LinearCode missing_zero(r, ByteLayout(1, 1, 1), {r.one()});
  EXPECT_FALSE(is_linear(missing_zero));
}

}  // namespace
}  // namespace spotty
