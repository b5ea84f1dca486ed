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

#include "spotty/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>

#include "spotty/error.hpp"
#include "spotty/kernels.hpp"
#include "spotty/macwilliams.hpp"
#include "spotty/weight.hpp"

namespace spotty {

namespace {

void check_byte(const Ring& ring, std::span<const RingElement> c) {
  if (c.empty()) throw ParameterError("byte must have at least one coordinate");
  for (const auto& x : c) {
    if (x.m() != ring.m()) throw ParameterError("byte element from a different ring");
  }
}

void check_indices(std::span<const RingElement> c, std::span<const std::size_t> indices) {
  std::vector<std::size_t> seen(indices.begin(), indices.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ParameterError("index set has repeated entries");
  }
  for (std::size_t i : indices) {
    if (i >= c.size() || c[i].is_zero()) {
      throw ParameterError("index " + std::to_string(i) + " is not in supp(c)");
    }
  }
}

unsigned weight_of(std::span<const std::uint32_t> v) {
  return static_cast<unsigned>(std::count_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; }));
}

}  // namespace

Oracle::Oracle(Ring ring, std::uint64_t budget) : ring_(ring), budget_(budget), chi_(ring.size()) {
  for (const auto& x : ring_.elements()) chi_[x.bits()] = spotty::chi(x);
}

Oracle Oracle::with_flipped_character(RingElement x) const {
  if (x.m() != ring_.m()) throw ParameterError("fault element from a different ring");
  Oracle copy = *this;
  copy.chi_[x.bits()] = -copy.chi_[x.bits()];
  return copy;
}

template <class Visit>
void Oracle::for_each_vector(std::size_t length, bool nonzero_only, Visit&& visit) const {
  const std::uint64_t per_coord = nonzero_only ? ring_.size() - 1 : ring_.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (total > budget_ / std::max<std::uint64_t>(per_coord, 1)) {
      throw ResourceError("brute-force sum over " + std::to_string(length) + " coordinates",
                          ambient_size(ring_, length), budget_);
    }
    total *= per_coord;
  }
  const std::uint32_t first = nonzero_only ? 1 : 0;
  std::vector<std::uint32_t> v(length, first);
  if (nonzero_only && ring_.size() == 1) return;
  while (true) {
    visit(std::span<const std::uint32_t>(v));
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++v[i] < ring_.size()) break;
      v[i] = first;
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

std::uint32_t Oracle::dot(std::span<const RingElement> c, std::span<const std::uint32_t> v) const noexcept {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc ^= detail::clmul(c[i].bits(), v[i], ring_.mask());
  return acc;
}

std::int64_t Oracle::sum_chi_over_ideal(unsigned k) const {
  if (k >= ring_.m()) {
    throw ParameterError("ideal <u^" + std::to_string(k) + "> is zero; the sum needs a non-zero ideal");
  }
  std::int64_t s = 0;
  for (const auto& a : ring_.ideal(k)) s += chi(a);
  return s;
}

std::int64_t Oracle::sum_chi_multiples(RingElement a) const {
  if (a.m() != ring_.m()) throw ParameterError("element from a different ring");
  std::int64_t s = 0;
  for (std::uint32_t r = 0; r < ring_.size(); ++r) s += chi_[detail::clmul(a.bits(), r, ring_.mask())];
  return s;
}

std::int64_t Oracle::sum_chi_subspace(std::span<const RingElement> c, std::span<const std::size_t> indices) const {
  check_byte(ring_, c);
  if (indices.empty()) throw ParameterError("index set must be non-empty");
  check_indices(c, indices);
  std::vector<RingElement> restricted;
  for (std::size_t i : indices) restricted.push_back(c[i]);
  std::int64_t s = 0;
  for_each_vector(indices.size(), false, [&](std::span<const std::uint32_t> v) { s += chi_[dot(restricted, v)]; });
  return s;
}

std::int64_t Oracle::sum_chi_fixed_support(std::span<const RingElement> c,
                                           std::span<const std::size_t> indices) const {
  check_byte(ring_, c);
  check_indices(c, indices);
  std::vector<RingElement> restricted;
  for (std::size_t i : indices) restricted.push_back(c[i]);
  std::int64_t s = 0;
  for_each_vector(indices.size(), true, [&](std::span<const std::uint32_t> v) { s += chi_[dot(restricted, v)]; });
  return s;
}

std::int64_t Oracle::sum_chi_partial_weight(std::span<const RingElement> c, unsigned k) const {
  check_byte(ring_, c);
  std::int64_t s = 0;
  for_each_vector(c.size(), false, [&](std::span<const std::uint32_t> v) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (v[i] != 0 && c[i].is_zero()) return;
    }
    if (weight_of(v) <= k) s += chi_[dot(c, v)];
  });
  return s;
}

std::int64_t Oracle::sum_chi_Sj1j2(std::span<const RingElement> c, unsigned j1, unsigned j2) const {
  check_byte(ring_, c);
  const unsigned j = hamming_weight(c);
  if (j1 > j || j2 > c.size() - j) {
    throw ParameterError("(j1, j2) = (" + std::to_string(j1) + ", " + std::to_string(j2) +
                         ") outside the byte's support split");
  }
  std::int64_t s = 0;
  for_each_vector(c.size(), false, [&](std::span<const std::uint32_t> v) {
    unsigned inside = 0;
    unsigned outside = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (v[i] == 0) continue;
      (c[i].is_zero() ? outside : inside) += 1;
    }
    if (inside == j1 && outside == j2) s += chi_[dot(c, v)];
  });
  return s;
}

std::int64_t Oracle::sum_chi_Sk(std::span<const RingElement> c, unsigned k) const {
  check_byte(ring_, c);
  if (k > hamming_weight(c)) throw ParameterError("k exceeds w(c)");
  return sum_chi_Sj1j2(c, k, 0);
}

std::int64_t Oracle::sum_chi_Sbar(std::span<const RingElement> c, unsigned k) const {
  check_byte(ring_, c);
  if (k > c.size() - hamming_weight(c)) throw ParameterError("k exceeds b - w(c)");
  return sum_chi_Sj1j2(c, 0, k);
}

Polynomial Oracle::byte_transform_bruteforce(std::span<const RingElement> c, unsigned t) const {
  check_byte(ring_, c);
  if (t < 1 || t > c.size()) throw ParameterError("t outside [1, b]");
  std::vector<std::int64_t> by_exp(ceil_div(static_cast<unsigned>(c.size()), t) + 1, 0);
  for_each_vector(c.size(), false, [&](std::span<const std::uint32_t> v) {
    by_exp[ceil_div(weight_of(v), t)] += chi_[dot(c, v)];
  });
  Polynomial p;
  for (unsigned e = 0; e < by_exp.size(); ++e) p.add_term(e, by_exp[e]);
  return p;
}

Polynomial dual_enumerator_bruteforce(const GeneratorMatrix& g, std::uint64_t budget, unsigned workers) {
  const std::uint64_t space = ambient_size(g.ring(), g.layout().length());
  if (space > budget) throw ResourceError("brute-force dual enumerator", space, budget);
  const auto tally = kernels::dual_tally_omp(g, workers);
  Polynomial p;
  for (unsigned w = 0; w < tally.spotty_histogram.size(); ++w) p.add_term(w, tally.spotty_histogram[w]);
  return p;
}

namespace {

std::string byte_text(std::span<const RingElement> c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += to_string(c[i]);
  }
  return s + ")";
}

}  // namespace

LemmaReport poisson_check(const LinearCode& code, unsigned t, std::uint64_t budget, unsigned workers) {
  const ByteLayout layout(code.layout().b(), t, code.layout().n());
  const GeneratorMatrix gens = generators_of(code);
  const GeneratorMatrix g(code.ring(), layout, gens.rows());
  const Polynomial lhs = dual_enumerator_bruteforce(g, budget, workers);

  const Oracle oracle(code.ring());
  std::map<std::vector<RingElement>, Polynomial> byte_cache;
  Polynomial total;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto c = code.codeword(i);
    Polynomial term(Integer{1});
    for (std::size_t byte = 0; byte < layout.n(); ++byte) {
      const auto part = c.subspan(byte * layout.b(), layout.b());
      std::vector<RingElement> key(part.begin(), part.end());
      auto it = byte_cache.find(key);
      if (it == byte_cache.end()) {
        it = byte_cache.emplace(std::move(key), oracle.byte_transform_bruteforce(part, t)).first;
      }
      term *= it->second;
    }
    total += term;
  }
  const Polynomial rhs = exact_div_scalar(total, code.size());

  LemmaReport r;
  r.lemma = "3.7";
  r.name = "poisson-summation";
  r.params = {{"m", std::to_string(code.ring().m())},
              {"b", std::to_string(layout.b())},
              {"t", std::to_string(t)},
              {"n", std::to_string(layout.n())},
              {"code_size", std::to_string(code.size())}};
  r.expected = to_string(lhs);
  r.actual = to_string(rhs);
  r.pass = lhs == rhs;
  return r;
}

bool partition_axioms_hold(const Ring& ring, std::span<const RingElement> a) {
  std::vector<bool> in_a(ring.size(), false);
  for (const auto& x : a) {
    if (x.m() != ring.m() || in_a[x.bits()]) return false;
    in_a[x.bits()] = true;
  }
  if (a.size() * 2 != ring.size()) return false;
  // (i)
  if (!in_a[0] || !in_a[1]) return false;

  // (ii): zero divisors (0 included), each non-zero ideal, and the units all split evenly.
  auto splits_evenly = [&](auto&& members) {
    std::size_t inside = 0;
    std::size_t total = 0;
    for (const auto& x : members) {
      inside += in_a[x.bits()];
      ++total;
    }
    return 2 * inside == total;
  };
  std::vector<RingElement> units;
  std::vector<RingElement> zero_divisors;
  for (const auto& x : ring.elements()) (is_unit(x) ? units : zero_divisors).push_back(x);
  if (!splits_evenly(units) || !splits_evenly(zero_divisors)) return false;
  for (unsigned k = 0; k < ring.m(); ++k) {
    if (!splits_evenly(ring.ideal(k))) return false;
  }

  // (iii)-(v)
  for (std::uint32_t x = 0; x < ring.size(); ++x) {
    for (std::uint32_t y = x; y < ring.size(); ++y) {
      const bool sum_in_a = in_a[x ^ y];
      if (in_a[x] == in_a[y] ? !sum_in_a : sum_in_a) return false;
    }
  }
  return true;
}

bool all_pass(std::span<const LemmaReport> reports) noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const LemmaReport& r) { return r.pass || r.informational; });
}

PartitionSearch partition_uniqueness_search(unsigned m) {
  if (m > 4) {
    throw ResourceError("partition search over all 2^" + std::to_string(1u << m) + " subsets",
                        std::uint64_t{1} << (1u << m), std::uint64_t{1} << 16);
  }
  const Ring ring(m);
  PartitionSearch result;
  const std::uint32_t q = ring.size();
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    if (static_cast<std::uint32_t>(std::popcount(mask)) * 2 != q) continue;
    if ((mask & 0b11u) != 0b11u) continue;  // 0 and 1
    std::vector<RingElement> a;
    for (std::uint32_t x = 0; x < q; ++x) {
      if (mask >> x & 1u) a.push_back(ring.element(x));
    }
    if (partition_axioms_hold(ring, a)) {
      ++result.count;
      result.solutions.push_back(std::move(a));
    }
  }
  return result;
}

namespace {

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer sign(unsigned k) { return k % 2 ? -1 : 1; }

LemmaReport make_report(std::string lemma, std::string name, std::vector<std::pair<std::string, std::string>> params,
                        const Integer& expected, std::int64_t actual, std::string note = {}) {
  LemmaReport r;
  r.lemma = std::move(lemma);
  r.name = std::move(name);
  r.params = std::move(params);
  r.expected = expected.str();
  r.actual = std::to_string(actual);
  r.pass = expected == actual;
  r.note = std::move(note);
  return r;
}

std::string index_text(std::span<const std::size_t> indices) {
  std::string s = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(indices[i]);
  }
  return s + "}";
}

Oracle campaign_oracle(const Ring& ring, std::optional<std::uint32_t> fault) {
  Oracle oracle(ring);
  if (fault && *fault < ring.size()) oracle = oracle.with_flipped_character(ring.element(*fault));
  return oracle;
}

std::vector<LemmaReport> ring_reports(unsigned m, std::optional<std::uint32_t> fault) {
  const Ring ring(m);
  const Oracle oracle = campaign_oracle(ring, fault);
  const std::string ms = std::to_string(m);
  std::vector<LemmaReport> out;

  for (unsigned k = 0; k < m; ++k) {
    out.push_back(make_report("3.1", "ideal-character-sum", {{"m", ms}, {"k", std::to_string(k)}}, 0,
                              oracle.sum_chi_over_ideal(k)));
  }
  for (const auto& a : ring.elements()) {
    const Integer expected = a.is_zero() ? Integer{ring.size()} : Integer{0};
    out.push_back(make_report("3.2", "multiples-character-sum", {{"m", ms}, {"a", to_string(a)}}, expected,
                              oracle.sum_chi_multiples(a)));
  }

  if (m >= 2) {
    const auto p = ring.partition();
    LemmaReport r;
    r.lemma = "def3.1";
    r.name = "partition-axioms";
    r.params = {{"m", ms}};
    r.expected = "true";
    r.pass = partition_axioms_hold(ring, p.a);
    r.actual = r.pass ? "true" : "false";
    out.push_back(std::move(r));
  }
  if (m >= 2 && m <= 4) {
    const auto search = partition_uniqueness_search(m);
    // The axioms admit 2^{m-2} sets (one per linear functional with no r_0
    // term and a non-zero r_{m-1} term), so this is reported, not enforced.
    auto unique = make_report("def3.1-unique", "partition-uniqueness", {{"m", ms}}, 1,
                              static_cast<std::int64_t>(search.count), "solutions satisfying the axioms");
    unique.informational = true;
    out.push_back(std::move(unique));
    if (m == 4) {
      // A = {0, 1, u, 1+u, u2, u+u2, 1+u2, 1+u+u2}
      std::vector<RingElement> listed;
      for (std::uint32_t x : {0u, 1u, 2u, 3u, 4u, 6u, 5u, 7u}) listed.push_back(ring.element(x));
      std::sort(listed.begin(), listed.end());
      LemmaReport r;
      r.lemma = "ex3.1";
      r.name = "partition-m4";
      r.params = {{"m", ms}};
      r.expected = "A={0,1,u,1+u,u2,1+u2,u+u2,1+u+u2}";
      std::string actual = "A={";
      const auto a = ring.partition().a;
      for (std::size_t i = 0; i < a.size(); ++i) actual += (i ? "," : "") + to_string(a[i]);
      r.actual = actual + "}";
      r.pass = a == listed &&
               std::find(search.solutions.begin(), search.solutions.end(), listed) != search.solutions.end();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<std::vector<RingElement>> campaign_bytes(const Ring& ring, unsigned b, const CampaignGrid& grid,
                                                     std::mt19937_64& rng) {
  std::vector<std::vector<RingElement>> bytes;
  if (std::size_t{b} * ring.m() <= grid.exhaustive_bits) {
    const std::uint64_t total = ambient_size(ring, b);
    for (std::uint64_t index = 0; index < total; ++index) bytes.push_back(kernels::decode_index(ring, b, index));
    return bytes;
  }
  std::uniform_int_distribution<std::uint32_t> nonzero(1, ring.mask());
  for (std::size_t s = 0; s < grid.samples; ++s) {
    const unsigned j = static_cast<unsigned>(s % (b + 1));
    std::vector<std::size_t> positions(b);
    for (std::size_t i = 0; i < b; ++i) positions[i] = i;
    std::shuffle(positions.begin(), positions.end(), rng);
    std::vector<RingElement> c(b, ring.zero());
    for (unsigned i = 0; i < j; ++i) c[positions[i]] = ring.element(nonzero(rng));
    bytes.push_back(std::move(c));
  }
  return bytes;
}

std::vector<LemmaReport> byte_reports(const Oracle& oracle, std::span<const RingElement> c, unsigned t) {
  const Ring& ring = oracle.ring();
  const unsigned m = ring.m();
  const unsigned b = static_cast<unsigned>(c.size());
  const unsigned j = hamming_weight(c);
  const Integer nonzero = Integer{ring.size()} - 1;
  const std::vector<std::pair<std::string, std::string>> base = {
      {"m", std::to_string(m)}, {"b", std::to_string(b)}, {"t", std::to_string(t)}, {"c", byte_text(c)}};
  auto with = [&](std::initializer_list<std::pair<std::string, std::string>> extra) {
    auto p = base;
    p.insert(p.end(), extra);
    return p;
  };
  std::vector<LemmaReport> out;

  const auto supp = support(c);
  if (j >= 1) {
    // Every subset I of supp(c).
    for (std::uint32_t mask = 0; mask < (1u << j); ++mask) {
      std::vector<std::size_t> subset;
      for (unsigned i = 0; i < j; ++i) {
        if (mask >> i & 1u) subset.push_back(supp[i]);
      }
      const unsigned k = static_cast<unsigned>(subset.size());
      out.push_back(make_report("3.4", "fixed-support-sum", with({{"I", index_text(subset)}}), sign(k),
                                oracle.sum_chi_fixed_support(c, subset)));
      if (k >= 1) {
        out.push_back(make_report("3.3", "subspace-sum", with({{"I", index_text(subset)}}), 0,
                                  oracle.sum_chi_subspace(c, subset), "factorizing reading"));
      }
    }
    for (unsigned k = 1; k <= j; ++k) {
      out.push_back(make_report("3.3-literal", "partial-weight-sum", with({{"k", std::to_string(k)}}),
                                sign(k) * binomial(j - 1, k), oracle.sum_chi_partial_weight(c, k),
                                "literal reading; equals 0 only at k = w(c)"));
    }
  }
  for (unsigned k = 0; k <= j; ++k) {
    out.push_back(make_report("cor3.1", "support-sum", with({{"k", std::to_string(k)}}), sign(k) * binomial(j, k),
                              oracle.sum_chi_Sk(c, k)));
  }
  for (unsigned k = 0; k <= b - j; ++k) {
    out.push_back(make_report("3.5", "complement-sum", with({{"k", std::to_string(k)}}),
                              boost::multiprecision::pow(nonzero, k) * binomial(b - j, k), oracle.sum_chi_Sbar(c, k)));
  }
  for (unsigned j1 = 0; j1 <= j; ++j1) {
    for (unsigned j2 = 0; j2 <= b - j; ++j2) {
      out.push_back(make_report("cor3.2", "split-support-sum",
                                with({{"j1", std::to_string(j1)}, {"j2", std::to_string(j2)}}),
                                sign(j1) * boost::multiprecision::pow(nonzero, j2) * binomial(j, j1) * binomial(b - j, j2),
                                oracle.sum_chi_Sj1j2(c, j1, j2)));
    }
  }

  LemmaReport r;
  r.lemma = "3.6";
  r.name = "byte-transform";
  r.params = base;
  const Polynomial closed = f_poly(j, b, m, t);
  const Polynomial brute = oracle.byte_transform_bruteforce(c, t);
  r.expected = to_string(closed);
  r.actual = to_string(brute);
  r.pass = closed == brute;
  out.push_back(std::move(r));
  return out;
}

std::vector<LemmaReport> cell_reports(unsigned m, unsigned b, unsigned t, const CampaignGrid& grid,
                                      std::uint64_t seed, std::optional<std::uint32_t> fault) {
  const Ring ring(m);
  const Oracle oracle = campaign_oracle(ring, fault);
  std::seed_seq seq{seed, std::uint64_t{m}, std::uint64_t{b}, std::uint64_t{t}};
  std::mt19937_64 rng(seq);

  std::vector<LemmaReport> out;
  for (const auto& c : campaign_bytes(ring, b, grid, rng)) {
    auto part = byte_reports(oracle, c, t);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }

  // Random two-byte codes; the byte transforms inside poisson_check use
  // the unperturbed character.
  if (!fault && std::size_t{2} * b * m <= 12) {
    const ByteLayout layout(b, t, 2);
    std::uniform_int_distribution<std::uint32_t> any(0, ring.mask());
    std::uniform_int_distribution<unsigned> rows_dist(1, 2);
    for (std::size_t s = 0; s < grid.poisson_codes; ++s) {
      std::vector<std::vector<RingElement>> rows(rows_dist(rng));
      for (auto& row : rows) {
        for (std::size_t j = 0; j < layout.length(); ++j) row.push_back(ring.element(any(rng)));
      }
      const LinearCode code = span(GeneratorMatrix(ring, layout, std::move(rows)));
      out.push_back(poisson_check(code, t));
    }
  }
  return out;
}

}  // namespace

std::vector<LemmaReport> run_campaign(const CampaignGrid& grid, std::uint64_t seed, unsigned workers,
                                      std::optional<std::uint32_t> fault) {
  std::vector<std::function<std::vector<LemmaReport>()>> units;
  for (unsigned m : grid.ms) {
    units.emplace_back([=] { return ring_reports(m, fault); });
  }
  for (unsigned m : grid.ms) {
    for (unsigned b : grid.bs) {
      for (unsigned t = 1; t <= b; ++t) {
        units.emplace_back([=, &grid] { return cell_reports(m, b, t, grid, seed, fault); });
      }
    }
  }

  std::vector<std::vector<LemmaReport>> results(units.size());
  std::vector<std::exception_ptr> errors(units.size());
  const auto n_units = static_cast<std::int64_t>(units.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers < 1 ? 1 : workers)
  for (std::int64_t u = 0; u < n_units; ++u) {
    try {
      results[static_cast<std::size_t>(u)] = units[static_cast<std::size_t>(u)]();
    } catch (...) {
      errors[static_cast<std::size_t>(u)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<LemmaReport> all;
  for (auto& part : results) {
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace spotty
