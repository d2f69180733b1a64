#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "omega/analysis.hpp"
#include "omega/bk_index.hpp"
#include "omega/errors.hpp"
#include "omega/extended.hpp"
#include "omega/factor.hpp"
#include "omega/hasse.hpp"
#include "omega/metric.hpp"
#include "omega/verify.hpp"

namespace omega::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { kPlain, kJson, kCsv, kDot };

struct Options {
  Format format = Format::kPlain;
  bool pretty = false;
  std::optional<std::uint64_t> sieve_limit;
  std::uint64_t seed = 0;
};

std::uint64_t parse_natural(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range) {
    throw OutOfRange(what + " '" + text + "' does not fit in 64 bits");
  }
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InvalidArgument(what + " '" + text + "' is not a non-negative decimal integer");
  }
  return value;
}

std::vector<std::uint64_t> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open corpus file '" + path + "'");
  std::vector<std::uint64_t> values;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    values.push_back(parse_natural(line, path + ":" + std::to_string(number)));
  }
  return values;
}

BkIndex build_index(const std::string& path) {
  BkIndex index;
  for (std::uint64_t v : load_corpus(path)) index.insert(v);
  return index;
}

std::string format_real(double value) {
  std::ostringstream out;
  out << std::setprecision(10) << value;
  return out.str();
}

// Writes one command's result in the selected format. `plain` and `csv` are
// produced lazily since most commands only need one of them.
class Emitter {
 public:
  Emitter(const Options& options, std::ostream& out) : options_(options), out_(out) {}

  template <typename Plain, typename Csv>
  void emit(const std::string& command, Json input, Json result, Plain&& plain, Csv&& csv) {
    switch (options_.format) {
      case Format::kJson: {
        Json envelope;
        envelope["command"] = command;
        envelope["input"] = std::move(input);
        envelope["result"] = std::move(result);
        out_ << envelope.dump(options_.pretty ? 2 : -1) << '\n';
        break;
      }
      case Format::kCsv:
        out_ << csv();
        break;
      case Format::kPlain:
      case Format::kDot:
        out_ << plain();
        break;
    }
  }

 private:
  const Options& options_;
  std::ostream& out_;
};

template <typename Range>
std::string join(const Range& values, std::string_view separator) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << separator;
    first = false;
    out << v;
  }
  return out.str();
}

std::string value_column(const std::vector<std::uint64_t>& values) {
  std::string text = "value\n";
  for (std::uint64_t v : values) text += std::to_string(v) + "\n";
  return text;
}

Json to_json(const std::vector<Neighbor>& neighbors) {
  Json arr = Json::array();
  for (const auto& n : neighbors) arr.push_back({{"value", n.value}, {"distance", n.distance}});
  return arr;
}

std::string census_table(const OmegaCensus& census, std::uint64_t kmax, char sep) {
  std::ostringstream out;
  out << "k" << sep << "count" << sep << "estimate" << sep << "ratio\n";
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    out << k << sep << census.count(k);
    if (k >= 1 && census.n >= 3) {
      const double estimate = landau_estimate(census.n, k);
      out << sep << format_real(estimate) << sep
          << format_real(static_cast<double>(census.count(k)) / estimate);
    } else {
      out << sep << "NA" << sep << "NA";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic metric d(a,b) = Omega(lcm) - Omega(gcd) on the naturals", "omega"};
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  std::string format_name = "plain";
  std::string sieve_limit_text;
  std::string seed_text = "0";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv", "dot"}));
  app.add_flag("--pretty", options.pretty, "Indent JSON output");
  app.add_option("--sieve-limit", sieve_limit_text,
                 "Smallest-prime-factor sieve size (default 10^7 or $OMEGA_SIEVE_LIMIT)");
  app.add_option("--seed", seed_text, "Seed for randomized suites");

  std::string a, b, x, r, n, p, s, k, max_n = "1000000", kmax, corpus, suite;
  std::string ext_x, ext_y;
  bool brute = false;
  bool dot = false;

  auto* dist_cmd = app.add_subcommand("dist", "Distance d(a, b)");
  dist_cmd->add_option("a", a)->required();
  dist_cmd->add_option("b", b)->required();

  auto* factor_cmd = app.add_subcommand("factor", "Prime factorization of n");
  factor_cmd->add_option("n", n)->required();

  auto* omega_cmd = app.add_subcommand("omega", "Omega(n), prime factors with multiplicity");
  omega_cmd->add_option("n", n)->required();

  auto* ball_cmd = app.add_subcommand("ball", "Closed ball {y <= max : d(x, y) <= r}");
  ball_cmd->add_option("x", x)->required();
  ball_cmd->add_option("r", r)->required();
  ball_cmd->add_option("--max", max_n, "Upper end of the search range I_n");

  auto* diameter_cmd = app.add_subcommand("diameter", "Diameter of I_n");
  diameter_cmd->add_option("n", n)->required();
  diameter_cmd->add_flag("--brute", brute, "Exhaustive pair scan with a witness pair");

  auto* hasse_cmd = app.add_subcommand("hasse", "Covering-relation graph of I_n");
  hasse_cmd->add_option("n", n)->required();
  hasse_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");

  auto* census_cmd = app.add_subcommand("census", "Omega census of I_n against the Landau estimate");
  census_cmd->add_option("n", n)->required();
  census_cmd->add_option("--kmax", kmax, "Largest k to report (default: max Omega in range)");

  auto* xi_cmd = app.add_subcommand("xi", "Largest k with p^k <= s");
  xi_cmd->add_option("p", p)->required();
  xi_cmd->add_option("s", s)->required();

  auto* nn_cmd = app.add_subcommand("nn", "k nearest corpus values to x");
  nn_cmd->add_option("x", x)->required();
  nn_cmd->add_option("k", k)->required();
  nn_cmd->add_option("--corpus", corpus, "Newline-delimited integer file")->required();

  auto* range_cmd = app.add_subcommand("range", "Corpus values within distance r of x");
  range_cmd->add_option("x", x)->required();
  range_cmd->add_option("r", r)->required();
  range_cmd->add_option("--corpus", corpus, "Newline-delimited integer file")->required();

  auto* ext_cmd = app.add_subcommand("ext-dist", "Distance between extended literals");
  ext_cmd->add_option("X", ext_x, "n, n/d, or root(k, n/d)")->required();
  ext_cmd->add_option("Y", ext_y, "n, n/d, or root(k, n/d)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--suite", suite, "Run a single suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInvalidArgument;
  }

  try {
    options.format = format_name == "json"  ? Format::kJson
                     : format_name == "csv" ? Format::kCsv
                     : format_name == "dot" ? Format::kDot
                                            : Format::kPlain;
    if (!sieve_limit_text.empty()) {
      set_default_sieve_limit(parse_natural(sieve_limit_text, "--sieve-limit"));
    }
    options.seed = parse_natural(seed_text, "--seed");
    Emitter emit(options, out);

    if (dist_cmd->parsed()) {
      const auto va = parse_natural(a, "a"), vb = parse_natural(b, "b");
      const MetricValue d = dist(va, vb);
      emit.emit("dist", {{"a", va}, {"b", vb}}, d,
                [&] { return std::to_string(d) + "\n"; },
                [&] { return "a,b,dist\n" + a + "," + b + "," + std::to_string(d) + "\n"; });
    } else if (factor_cmd->parsed()) {
      const auto vn = parse_natural(n, "n");
      const Factorization f = factor(vn);
      Json entries = Json::array();
      std::string csv = "prime,exponent\n";
      for (const auto& e : f.entries()) {
        entries.push_back({{"prime", e.prime}, {"exponent", e.exponent}});
        csv += std::to_string(e.prime) + "," + std::to_string(e.exponent) + "\n";
      }
      emit.emit("factor", {{"n", vn}}, entries, [&] { return to_string(f) + "\n"; },
                [&] { return csv; });
    } else if (omega_cmd->parsed()) {
      const auto vn = parse_natural(n, "n");
      const auto value = big_omega(vn);
      emit.emit("omega", {{"n", vn}}, value, [&] { return std::to_string(value) + "\n"; },
                [&] { return "n,omega\n" + n + "," + std::to_string(value) + "\n"; });
    } else if (ball_cmd->parsed()) {
      const auto vx = parse_natural(x, "x"), vr = parse_natural(r, "r");
      const auto vmax = parse_natural(max_n, "--max");
      const auto ball = closed_ball(vx, vr, vmax);
      emit.emit("ball", {{"x", vx}, {"r", vr}, {"max", vmax}}, ball,
                [&] { return join(ball, " ") + "\n"; }, [&] { return value_column(ball); });
    } else if (diameter_cmd->parsed()) {
      const auto vn = parse_natural(n, "n");
      Json input{{"n", vn}, {"brute", brute}};
      if (brute) {
        const auto w = diameter_bruteforce(vn);
        const auto [wa, wb] = w.pair;
        emit.emit("diameter", input, {{"diameter", w.value}, {"witness", {wa, wb}}},
                  [&] { return std::to_string(w.value) + " " + std::to_string(wa) + " " +
                               std::to_string(wb) + "\n"; },
                  [&] { return "diameter,a,b\n" + std::to_string(w.value) + "," +
                               std::to_string(wa) + "," + std::to_string(wb) + "\n"; });
      } else {
        const auto d = diameter_formula(vn);
        emit.emit("diameter", input, {{"diameter", d}},
                  [&] { return std::to_string(d) + "\n"; },
                  [&] { return "diameter\n" + std::to_string(d) + "\n"; });
      }
    } else if (hasse_cmd->parsed()) {
      const auto vn = parse_natural(n, "n");
      const HasseGraph g = build_hasse(vn);
      if (dot || options.format == Format::kDot) {
        out << export_dot(g);
      } else {
        const auto edges = g.edges();
        Json edge_list = Json::array();
        std::string csv = "a,b\n";
        for (const auto& [ea, eb] : edges) {
          edge_list.push_back({ea, eb});
          csv += std::to_string(ea) + "," + std::to_string(eb) + "\n";
        }
        emit.emit("hasse", {{"n", vn}}, {{"vertices", vn}, {"edges", edge_list}},
                  [&] { return "vertices " + std::to_string(vn) + " edges " +
                               std::to_string(edges.size()) + "\n"; },
                  [&] { return csv; });
      }
    } else if (census_cmd->parsed()) {
      const auto vn = parse_natural(n, "n");
      const OmegaCensus census = omega_census(vn);
      const std::uint64_t top =
          kmax.empty() ? census.counts.size() - 1 : parse_natural(kmax, "--kmax");
      Json rows = Json::array();
      for (std::uint64_t kk = 0; kk <= top; ++kk) {
        Json row{{"k", kk}, {"count", census.count(kk)}};
        if (kk >= 1 && vn >= 3) {
          const double estimate = landau_estimate(vn, kk);
          row["estimate"] = estimate;
          row["ratio"] = static_cast<double>(census.count(kk)) / estimate;
        }
        rows.push_back(std::move(row));
      }
      Json result{{"n", vn}, {"estimate_is_approximate", true}, {"rows", rows}};
      emit.emit("census", {{"n", vn}, {"kmax", top}}, result,
                [&] { return census_table(census, top, ' '); },
                [&] { return census_table(census, top, ','); });
    } else if (xi_cmd->parsed()) {
      const auto vp = parse_natural(p, "p"), vs = parse_natural(s, "s");
      const auto value = xi(vp, vs);
      emit.emit("xi", {{"p", vp}, {"s", vs}}, value, [&] { return std::to_string(value) + "\n"; },
                [&] { return "p,s,xi\n" + p + "," + s + "," + std::to_string(value) + "\n"; });
    } else if (nn_cmd->parsed()) {
      const auto vx = parse_natural(x, "x"), vk = parse_natural(k, "k");
      const BkIndex index = build_index(corpus);
      const auto hits = index.nearest(vx, vk);
      std::string plain, csv = "value,distance\n";
      for (const auto& h : hits) {
        plain += std::to_string(h.value) + " " + std::to_string(h.distance) + "\n";
        csv += std::to_string(h.value) + "," + std::to_string(h.distance) + "\n";
      }
      emit.emit("nn", {{"x", vx}, {"k", vk}, {"corpus", corpus}}, to_json(hits),
                [&] { return plain; }, [&] { return csv; });
    } else if (range_cmd->parsed()) {
      const auto vx = parse_natural(x, "x"), vr = parse_natural(r, "r");
      const BkIndex index = build_index(corpus);
      const auto hits = index.range(vx, vr);
      emit.emit("range", {{"x", vx}, {"r", vr}, {"corpus", corpus}}, hits,
                [&] { return join(hits, " ") + "\n"; }, [&] { return value_column(hits); });
    } else if (ext_cmd->parsed()) {
      const ExtendedNumber ex = parse_extended(ext_x);
      const ExtendedNumber ey = parse_extended(ext_y);
      const std::string d = to_string(ext_dist(ex, ey));
      emit.emit("ext-dist", {{"x", ext_x}, {"y", ext_y}}, d, [&] { return d + "\n"; },
                [&] { return "distance\n" + d + "\n"; });
    } else if (verify_cmd->parsed()) {
      const auto reports = run_verification(suite, options.seed);
      bool all_passed = true;
      Json suites = Json::array();
      std::string plain, csv = "suite,checks,failures,status\n";
      for (const auto& rep : reports) {
        all_passed = all_passed && rep.passed();
        const char* status = rep.passed() ? "PASS" : "FAIL";
        Json entry{{"suite", rep.name}, {"checks", rep.checks}, {"failures", rep.failures}};
        if (!rep.passed()) entry["first_failure"] = rep.first_failure;
        suites.push_back(std::move(entry));
        plain += std::string(status) + " " + rep.name + " " + std::to_string(rep.checks) +
                 " checks, " + std::to_string(rep.failures) + " failures";
        if (!rep.passed()) plain += " (first: " + rep.first_failure + ")";
        plain += "\n";
        csv += rep.name + "," + std::to_string(rep.checks) + "," + std::to_string(rep.failures) +
               "," + status + "\n";
      }
      emit.emit("verify", {{"suite", suite.empty() ? "all" : suite}, {"seed", options.seed}},
                {{"passed", all_passed}, {"suites", suites}}, [&] { return plain; },
                [&] { return csv; });
      return all_passed ? kOk : kVerificationFailed;
    }
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kOutOfRange;
  } catch (const std::exception& e) {
    // InvalidArgument, EmptyIndex, and conflicting sieve limits.
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  }
  return kOk;
}

}  // namespace omega::cli
