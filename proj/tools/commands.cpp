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

#include "commands.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "spotty/error.hpp"
#include "spotty/kernels.hpp"
#include "spotty/macwilliams.hpp"
#include "spotty/matrix_file.hpp"

namespace spotty::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

// ---- shared formatting ----------------------------------------------------

std::string alpha_text(const AlphaVector& alpha) {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.counts().size(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
  return s + ")";
}

Json poly_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [exp, coeff] : p.terms()) terms.push_back({{"exp", exp}, {"coeff", coeff.str()}});
  return terms;
}

Json layout_json(const GeneratorMatrix& g) {
  return {{"m", g.ring().m()}, {"b", g.layout().b()}, {"t", g.layout().t()}, {"n", g.layout().n()},
          {"N", g.layout().length()}};
}

Json distribution_json(const DistributionTable& dist) {
  Json rows = Json::array();
  for (const auto& [alpha, count] : dist.entries()) {
    rows.push_back({{"alpha", std::vector<unsigned>(alpha.counts().begin(), alpha.counts().end())}, {"count", count}});
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Rows of "section,key,value" for the table-like commands.
class CsvSink {
 public:
  CsvSink() { text_ = "section,key,value\n"; }
  void row(const std::string& section, const std::string& key, const std::string& value) {
    text_ += csv_field(section) + "," + csv_field(key) + "," + csv_field(value) + "\n";
  }
  void poly(const std::string& section, const Polynomial& p) {
    for (const auto& [exp, coeff] : p.terms()) row(section, std::to_string(exp), coeff.str());
  }
  void distribution(const std::string& section, const DistributionTable& dist) {
    for (const auto& [alpha, count] : dist.entries()) row(section, alpha_text(alpha), std::to_string(count));
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

void text_distribution(std::ostringstream& os, const DistributionTable& dist) {
  std::size_t width = 5;
  for (const auto& [alpha, count] : dist.entries()) width = std::max(width, alpha_text(alpha).size());
  os << std::left;
  os.width(static_cast<std::streamsize>(width + 2));
  os << "alpha" << "count\n";
  for (const auto& [alpha, count] : dist.entries()) {
    os.width(static_cast<std::streamsize>(width + 2));
    os << alpha_text(alpha) << count << "\n";
  }
}

std::string layout_text(const GeneratorMatrix& g) {
  return "m=" + std::to_string(g.ring().m()) + " b=" + std::to_string(g.layout().b()) +
         " t=" + std::to_string(g.layout().t()) + " n=" + std::to_string(g.layout().n()) +
         " N=" + std::to_string(g.layout().length());
}

// ---- published figures ----------------------------------------------------

// Enumerators printed in the literature that disagree with computation.
// A notice is attached whenever an input reproduces the listed
// distribution; the computed value is always the one reported.
struct PublishedFigure {
  unsigned m, b, t, n;
  std::map<std::vector<unsigned>, Count> distribution;
  Polynomial enumerator;
};

const std::vector<PublishedFigure>& published_figures() {
  static const std::vector<PublishedFigure> figures = {
      {4, 3, 2, 2,
       {{{2, 0, 0, 0}, 1},
        {{0, 2, 0, 0}, 18},
        {{0, 0, 2, 0}, 88},
        {{0, 0, 0, 2}, 104},
        {{1, 1, 0, 0}, 3},
        {{1, 0, 1, 0}, 7},
        {{1, 0, 0, 1}, 5},
        {{0, 1, 1, 0}, 72},
        {{0, 1, 0, 1}, 58},
        {{0, 0, 1, 1}, 156}},
       Polynomial{{0, 1}, {1, 10}, {2, 183}, {3, 214}, {6, 104}}},
  };
  return figures;
}

std::optional<std::string> published_notice(const GeneratorMatrix& g, const DistributionTable& dist,
                                            const Polynomial& computed) {
  for (const auto& fig : published_figures()) {
    if (fig.m != g.ring().m() || fig.b != g.layout().b() || fig.t != g.layout().t() || fig.n != g.layout().n()) {
      continue;
    }
    if (dist.entries().size() != fig.distribution.size()) continue;
    bool same = true;
    for (const auto& [alpha, count] : dist.entries()) {
      const auto it = fig.distribution.find(std::vector<unsigned>(alpha.counts().begin(), alpha.counts().end()));
      same = same && it != fig.distribution.end() && it->second == count;
    }
    if (!same || fig.enumerator == computed) continue;
    const unsigned max_weight = g.layout().n() * ceil_div(g.layout().b(), g.layout().t());
    return "published W(z) for this code reports z^" + std::to_string(fig.enumerator.degree()) + " (" +
           to_string(fig.enumerator) + "); computed value shown, no word here exceeds weight " +
           std::to_string(max_weight);
  }
  return std::nullopt;
}

// ---- commands -------------------------------------------------------------

struct Enumerated {
  GeneratorMatrix g;
  LinearCode code;
  DistributionTable dist;
  Polynomial w;
};

Enumerated enumerate_file(const RunConfig& c) {
  auto g = load_matrix(c.input);
  auto code = span(g, c.max_space, c.workers);
  auto dist = distribution(code, c.workers);
  auto w = enumerator_from_distribution(dist);
  return {std::move(g), std::move(code), std::move(dist), std::move(w)};
}

std::string cmd_enumerate(const RunConfig& c) {
  const auto e = enumerate_file(c);
  const auto notice = published_notice(e.g, e.dist, e.w);
  switch (c.format) {
    case Format::kJson: {
      Json j = {{"command", "enumerate"},
                {"layout", layout_json(e.g)},
                {"size", std::to_string(e.code.size())},
                {"distribution", distribution_json(e.dist)},
                {"enumerator", poly_json(e.w)}};
      if (notice) j["notice"] = *notice;
      return j.dump(2) + "\n";
    }
    case Format::kCsv: {
      CsvSink csv;
      csv.row("size", "", std::to_string(e.code.size()));
      csv.distribution("distribution", e.dist);
      csv.poly("enumerator", e.w);
      if (notice) csv.row("notice", "", *notice);
      return csv.str();
    }
    case Format::kText:
      break;
  }
  std::ostringstream os;
  os << "code: " << layout_text(e.g) << "\n|C| = " << e.code.size() << "\n\n";
  text_distribution(os, e.dist);
  os << "\nW(z) = " << to_string(e.w) << "\n";
  if (notice) os << "notice: " << *notice << "\n";
  return os.str();
}

std::string cmd_tables(const RunConfig& c) {
  std::vector<Polynomial> f;
  for (unsigned j = 0; j <= c.b; ++j) f.push_back(f_poly(j, c.b, c.m, c.t));
  switch (c.format) {
    case Format::kJson: {
      Json rows = Json::array();
      for (unsigned j = 0; j <= c.b; ++j) rows.push_back({{"j", j}, {"poly", poly_json(f[j])}});
      Json out = {{"command", "tables"}, {"m", c.m}, {"b", c.b}, {"t", c.t}, {"F", rows}};
      return out.dump(2) + "\n";
    }
    case Format::kCsv: {
      std::string s = "j,exp,coeff\n";
      for (unsigned j = 0; j <= c.b; ++j) {
        for (const auto& [exp, coeff] : f[j].terms()) {
          s += std::to_string(j) + "," + std::to_string(exp) + "," + coeff.str() + "\n";
        }
      }
      return s;
    }
    case Format::kText:
      break;
  }
  std::ostringstream os;
  os << "F_j(z) for m=" << c.m << " b=" << c.b << " t=" << c.t << "\n";
  for (unsigned j = 0; j <= c.b; ++j) os << "F_" << j << "(z) = " << to_string(f[j]) << "\n";
  return os.str();
}

std::string cmd_transform(const RunConfig& c) {
  const auto e = enumerate_file(c);
  const unsigned m = e.g.ring().m();
  const auto dual_w = transform(e.dist, e.code.size(), m, e.g.layout().t(), c.workers);
  const Integer ambient = Integer{1} << (m * e.g.layout().length());
  if (ambient % e.code.size() != 0) throw IntegrityError("|C| does not divide |R|^N");
  const Integer dual_size = ambient / e.code.size();
  if (dual_w.evaluate(Integer{1}) != dual_size) {
    throw IntegrityError("W_dual(1) = " + dual_w.evaluate(Integer{1}).str() + " but |C_dual| = " + dual_size.str());
  }
  const auto notice = published_notice(e.g, e.dist, e.w);
  switch (c.format) {
    case Format::kJson: {
      Json j = {{"command", "transform"},
                {"layout", layout_json(e.g)},
                {"size", std::to_string(e.code.size())},
                {"dual_size", dual_size.str()},
                {"enumerator", poly_json(e.w)},
                {"dual_enumerator", poly_json(dual_w)}};
      if (notice) j["notice"] = *notice;
      return j.dump(2) + "\n";
    }
    case Format::kCsv: {
      CsvSink csv;
      csv.row("size", "", std::to_string(e.code.size()));
      csv.row("dual_size", "", dual_size.str());
      csv.poly("enumerator", e.w);
      csv.poly("dual_enumerator", dual_w);
      if (notice) csv.row("notice", "", *notice);
      return csv.str();
    }
    case Format::kText:
      break;
  }
  std::ostringstream os;
  os << "code: " << layout_text(e.g) << "\n|C| = " << e.code.size() << "\n|C_dual| = " << dual_size << "\n"
     << "W(z) = " << to_string(e.w) << "\n"
     << "W_dual(z) = " << to_string(dual_w) << "\n";
  if (notice) os << "notice: " << *notice << "\n";
  return os.str();
}

void write_codewords(const RunConfig& c, const GeneratorMatrix& g) {
  const auto code = dual(g, c.max_space, c.workers);
  std::ofstream file(c.codewords, std::ios::binary);
  if (!file) throw Error("cannot write codewords to '" + c.codewords + "'");
  const unsigned b = g.layout().b();
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto w = code.codeword(i);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j) file << (j % b == 0 ? "   " : " ");
      file << to_string(w[j]);
    }
    file << "\n";
  }
  if (!file) throw Error("failed writing codewords to '" + c.codewords + "'");
}

std::string cmd_dual(const RunConfig& c) {
  const auto g = load_matrix(c.input);
  const std::size_t len = g.layout().length();
  const std::uint64_t space = ambient_size(g.ring(), len);
  if (space > c.max_space) {
    throw ResourceError("dual scan needs |R|^N = 2^" + std::to_string(g.ring().m() * len) + " vectors", space,
                        c.max_space);
  }
  const auto tally = kernels::dual_tally_omp(g, c.workers);
  Polynomial w;
  for (unsigned k = 0; k < tally.spotty_histogram.size(); ++k) w.add_term(k, tally.spotty_histogram[k]);
  if (!c.codewords.empty()) write_codewords(c, g);
  switch (c.format) {
    case Format::kJson: {
      Json j = {{"command", "dual"},
                {"layout", layout_json(g)},
                {"dual_size", std::to_string(tally.count)},
                {"distribution", distribution_json(tally.distribution)},
                {"enumerator", poly_json(w)}};
      return j.dump(2) + "\n";
    }
    case Format::kCsv: {
      CsvSink csv;
      csv.row("dual_size", "", std::to_string(tally.count));
      csv.distribution("distribution", tally.distribution);
      csv.poly("enumerator", w);
      return csv.str();
    }
    case Format::kText:
      break;
  }
  std::ostringstream os;
  os << "code: " << layout_text(g) << "\nscanned " << space << " vectors\n|C_dual| = " << tally.count << "\n\n";
  text_distribution(os, tally.distribution);
  os << "\nW_dual(z) = " << to_string(w) << "\n";
  return os.str();
}

std::string params_text(const LemmaReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

std::string cmd_verify(const RunConfig& c, int& exit_code) {
  const auto reports = run_campaign(c.grid, c.seed, c.workers, c.fault);
  const bool ok = all_pass(reports);
  exit_code = ok ? kOk : kVerificationFailure;

  // Per-lemma tallies in first-seen order.
  struct Tally {
    std::string lemma, name;
    std::size_t total = 0, failed = 0;
    bool informational = false;
  };
  std::vector<Tally> tallies;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    auto it = std::find_if(tallies.begin(), tallies.end(), [&](const Tally& t) { return t.lemma == r.lemma; });
    if (it == tallies.end()) it = tallies.insert(tallies.end(), Tally{r.lemma, r.name});
    ++it->total;
    it->informational = it->informational || r.informational;
    if (!r.pass) {
      ++it->failed;
      if (!r.informational) ++failed;
    }
  }

  switch (c.format) {
    case Format::kJson: {
      Json grid = {{"m", c.grid.ms},
                   {"b", c.grid.bs},
                   {"exhaustive_bits", c.grid.exhaustive_bits},
                   {"samples", c.grid.samples},
                   {"poisson_codes", c.grid.poisson_codes}};
      Json items = Json::array();
      for (const auto& r : reports) {
        Json params = Json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        Json item = {{"lemma", r.lemma}, {"name", r.name},     {"params", params},
                     {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}};
        if (r.informational) item["informational"] = true;
        if (!r.note.empty()) item["note"] = r.note;
        items.push_back(std::move(item));
      }
      Json j = {{"command", "verify"},
                {"seed", c.seed},
                {"grid", grid},
                {"fault", c.fault ? Json(*c.fault) : Json(nullptr)},
                {"summary", {{"total", reports.size()}, {"failed", failed}, {"pass", ok}}},
                {"reports", items}};
      return j.dump(2) + "\n";
    }
    case Format::kCsv: {
      std::string s = "lemma,name,params,expected,actual,pass,informational\n";
      for (const auto& r : reports) {
        s += csv_field(r.lemma) + "," + csv_field(r.name) + "," + csv_field(params_text(r)) + "," +
             csv_field(r.expected) + "," + csv_field(r.actual) + "," + (r.pass ? "true" : "false") + "," +
             (r.informational ? "true" : "false") + "\n";
      }
      return s;
    }
    case Format::kText:
      break;
  }
  std::ostringstream os;
  os << "lemma campaign, seed " << c.seed << "\n";
  for (const auto& t : tallies) {
    os << "  " << t.lemma << " (" << t.name << "): " << (t.total - t.failed) << "/" << t.total << " pass"
       << (t.informational ? " [informational]" : "") << "\n";
  }
  for (const auto& r : reports) {
    if (r.pass) continue;
    os << (r.informational ? "note " : "FAIL ") << r.lemma << " " << params_text(r) << ": expected " << r.expected
       << ", got " << r.actual << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
  }
  os << (ok ? "all " + std::to_string(reports.size()) + " checks pass\n"
            : std::to_string(failed) + " of " + std::to_string(reports.size()) + " checks failed\n");
  return os.str();
}

std::string element_list(const std::vector<RingElement>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
  return s + "}";
}

std::string cmd_info(const RunConfig& c) {
  const int threads = omp_get_max_threads();
  Json j = {{"command", "info"}, {"version", kVersion}, {"openmp_threads", threads}};
  std::ostringstream os;
  os << "spotty " << kVersion << "\nOpenMP threads available: " << threads << "\n";
  if (c.m != 0) {
    const Ring ring(c.m);
    const auto census = ring.census();
    j["ring"] = {{"m", c.m},
                 {"size", ring.size()},
                 {"units", census.units},
                 {"nonzero_zero_divisors", census.nonzero_zero_divisors}};
    os << "ring F2[u]/<u^" << c.m << ">: " << ring.size() << " elements, " << census.units << " units, "
       << census.nonzero_zero_divisors << " non-zero zero divisors\n";
    if (c.m >= 2 && c.m <= 6) {
      const auto p = ring.partition();
      j["ring"]["partition"] = {{"A", element_list(p.a)}, {"B", element_list(p.b)}};
      os << "A = " << element_list(p.a) << "\nB = " << element_list(p.b) << "\n";
    }
  }
  if (c.format == Format::kJson) return j.dump(2) + "\n";
  if (c.format == Format::kCsv) {
    CsvSink csv;
    csv.row("info", "version", kVersion);
    csv.row("info", "openmp_threads", std::to_string(threads));
    if (j.contains("ring")) {
      for (const auto& [k, v] : j["ring"].items()) {
        if (k == "partition") {
          csv.row("ring", "A", v["A"].get<std::string>());
          csv.row("ring", "B", v["B"].get<std::string>());
        } else {
          csv.row("ring", k, v.dump());
        }
      }
    }
    return csv.str();
  }
  return os.str();
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

std::string execute(const RunConfig& config, int& exit_code) {
  exit_code = kOk;
  if (config.workers == 0) throw ParameterError("--workers must be at least 1");
  if (config.max_space == 0) throw ParameterError("--max-space must be positive");
  if (config.command == "enumerate") return cmd_enumerate(config);
  if (config.command == "tables") return cmd_tables(config);
  if (config.command == "transform") return cmd_transform(config);
  if (config.command == "dual") return cmd_dual(config);
  if (config.command == "verify") return cmd_verify(config, exit_code);
  if (config.command == "info") return cmd_info(config);
  throw ParameterError("unknown command '" + config.command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.workers = default_workers();

  CLI::App app{"m-spotty weight enumerators over F2[u]/<u^m>", "spotty"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("{text,json,csv}");
  app.add_option("--max-space", config.max_space, "Largest enumeration allowed (vectors or codewords)")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", config.workers, "OpenMP worker count")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Random seed for sampled checks");
  app.add_option("--out", config.out, "Write the report here instead of stdout");
  app.fallthrough();

  auto* enumerate = app.add_subcommand("enumerate", "Size, alpha-distribution and W(z) of span(G)");
  enumerate->add_option("file", config.input, "Matrix file")->required();

  auto* tables = app.add_subcommand("tables", "Print F_j(z) for j = 0..b");
  for (auto* sub : {tables}) {
    sub->add_option("--m", config.m, "Ring parameter m")->required();
    sub->add_option("--b", config.b, "Byte length b")->required();
    sub->add_option("--t", config.t, "Spotty threshold t")->required();
  }

  auto* transform_cmd = app.add_subcommand("transform", "W(z) and the dual enumerator via MacWilliams");
  transform_cmd->add_option("file", config.input, "Matrix file")->required();

  auto* dual_cmd = app.add_subcommand("dual", "Dual code by exhaustive scan");
  dual_cmd->add_option("file", config.input, "Matrix file")->required();
  dual_cmd->add_option("--codewords", config.codewords, "Write every dual codeword to this file");

  auto* verify = app.add_subcommand("verify", "Brute-force the character-sum lemmas over a grid");
  verify->add_option("--m", config.grid.ms, "Ring parameters to cover")->delimiter(',')->check(CLI::Range(1, 16));
  verify->add_option("--b", config.grid.bs, "Byte lengths to cover")->delimiter(',')->check(CLI::Range(1, 16));
  verify->add_option("--samples", config.grid.samples, "Random bytes per cell when not exhaustive");
  verify->add_option("--exhaustive-bits", config.grid.exhaustive_bits, "Enumerate bytes exhaustively up to b*m bits");
  verify->add_option("--poisson-codes", config.grid.poisson_codes, "Random codes per cell for the summation check");
  verify->add_option("--inject-fault", config.fault, "Negate chi at this coefficient vector (self-test)");

  auto* info = app.add_subcommand("info", "Build information and ring facts");
  info->add_option("--m", config.m, "Describe F2[u]/<u^m>")->check(CLI::Range(1, 16));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  }
  config.command = app.get_subcommands().front()->get_name();

  int code = kOk;
  std::string report;
  try {
    report = execute(config, code);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "; raise --max-space to allow it\n";
    return kResourceFailure;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kIntegrityFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  }

  if (config.out.empty()) {
    out << report;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << report;
    if (!file) {
      err << "error: cannot write '" << config.out << "'\n";
      return kParseFailure;
    }
  }
  return code;
}

}  // namespace spotty::cli
