// splitpile: enumerate, convert, check, count and verify sandpile objects on S(m,n).
//
// Records go to stdout as JSON lines (or CSV with --format csv); diagnostics go
// to stderr. Exit codes: 0 ok, 1 a check failed, 2 bad input, 3 not recurrent,
// 4 budget exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "splitpile/bijections.hpp"
#include "splitpile/errors.hpp"
#include "splitpile/json_io.hpp"
#include "splitpile/motzkin.hpp"
#include "splitpile/necklace.hpp"
#include "splitpile/parking.hpp"
#include "splitpile/prufer.hpp"
#include "splitpile/sandpile.hpp"
#include "splitpile/verify.hpp"

namespace {

using namespace splitpile;
using json_io::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotRecurrent = 3;
constexpr int kExitBudget = 4;

// Carries an exit code out of a subcommand along with its message.
struct Exit {
  int code;
  std::string message;
};

struct Globals {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string sink = "clique";
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;

  Side sink_side() const { return json_io::parse_side(sink); }

  // Flag, then SPLITPILE_BUDGET, then the library default.
  std::uint64_t effective_budget() const {
    if (budget) return *budget;
    if (const char* env = std::getenv("SPLITPILE_BUDGET")) {
      try {
        std::size_t used = 0;
        const std::uint64_t value = std::stoull(env, &used);
        if (used == std::string(env).size()) return value;
      } catch (const std::exception&) {
      }
      throw DomainError(std::string("SPLITPILE_BUDGET is not a number: \"") + env + "\"");
    }
    return kDefaultBudget;
  }

  SplitGraph graph() const {
    if (m == 0 || n == 0) throw DomainError("--m and --n must both be given and positive");
    return sink_side() == Side::Clique ? SplitGraph::with_clique_sink(m, n)
                                       : SplitGraph::with_independent_sink(m, n);
  }
};

Json big(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(x);
  }
  return x.str();
}

std::string csv_cell(const Json& value) {
  std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  return quoted + "\"";
}

// Writes records in the chosen format. CSV takes its header from the first record.
class Emitter {
 public:
  explicit Emitter(std::string format) : csv_(format == "csv") {}

  void record(const Json& r) {
    ++count_;
    if (!csv_) {
      std::cout << r.dump() << '\n';
      return;
    }
    if (header_.empty()) {
      for (const auto& [key, value] : r.items()) header_.push_back(key);
      write_row(header_);
    }
    std::vector<std::string> row;
    for (const std::string& key : header_) row.push_back(r.contains(key) ? csv_cell(r[key]) : "");
    write_row(row);
  }

  // Trailing line with the number of records written.
  void finish() {
    if (csv_) {
      std::cout << "count," << count_ << '\n';
    } else {
      std::cout << Json{{"count", count_}}.dump() << '\n';
    }
  }

 private:
  static void write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
    std::cout << '\n';
  }

  bool csv_;
  std::uint64_t count_ = 0;
  std::vector<std::string> header_;
};

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("payload is not valid JSON: ") + e.what());
  }
}

// Accepts "(5,3,1,-;3,3,3,2)" or {"clique": [...], "independent": [...]}.
Configuration parse_config_payload(const SplitGraph& g, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    Configuration c = json_io::configuration_from_json(parse_json(text));
    check_shape(g, c);
    return c;
  }
  return parse_configuration(g, text);
}

Json config_record(const SplitGraph& g, const Configuration& c) {
  return {{"config", json_io::configuration_to_json(c)}, {"notation", to_string(g, c)}};
}

std::vector<std::int64_t> signed_heights(const std::vector<Height>& values, Height offset) {
  std::vector<std::int64_t> out;
  for (Height v : values) out.push_back(static_cast<std::int64_t>(v + offset));
  return out;
}

// ---- enumerate ----

void run_enumerate(const Globals& opt, const std::string& kind) {
  const std::uint64_t budget = opt.effective_budget();
  Emitter out(opt.format);
  if (kind == "recurrent") {
    const SplitGraph g = opt.graph();
    for (const Configuration& c : all_recurrent_brute(g, budget)) out.record(config_record(g, c));
  } else if (kind == "decreasing-recurrent") {
    const SplitGraph g = opt.graph();
    for (const Configuration& c : decreasing_recurrent(g, budget)) {
      Json r = json_io::conversion_record(g, c, *classify(g, c).word);
      r["notation"] = to_string(g, c);
      out.record(r);
    }
  } else if (kind == "motzkin") {
    opt.graph();
    for (const MotzkinWord& w : generate_all(opt.m - 1, opt.n, budget)) {
      out.record({{"word", w.str()}});
    }
  } else if (kind == "dh-motzkin") {
    opt.graph();
    for (const MotzkinWord& w : generate_dh(opt.m, opt.n - 1, budget)) {
      out.record({{"word", w.str()}});
    }
  } else if (kind == "necklaces") {
    const SplitGraph g = opt.graph();
    const auto necklaces = g.sink_side() == Side::Clique
                               ? enumerate_necklaces(opt.m, opt.n, budget)
                               : enumerate_dh_necklaces(opt.m, opt.n, budget);
    for (const Necklace& x : necklaces) out.record(json_io::necklace_to_json(x));
  } else if (kind == "trees") {
    opt.graph();
    for (const SpanningTree& t : brute_spanning_trees(opt.m, opt.n, budget)) {
      Json r = json_io::tree_to_json(t);
      r["code"] = json_io::pair_to_json(encode(t, opt.m, opt.n));
      out.record(r);
    }
  } else {
    throw DomainError("unknown enumeration kind \"" + kind + "\"");
  }
  out.finish();
}

// ---- convert ----

// Everything converts through the word attached to a graph.
struct Hub {
  SplitGraph graph;
  MotzkinWord word;
};

SplitGraph graph_for_word(const MotzkinWord& w, Side sink) {
  return sink == Side::Clique ? f_graph(w) : g_graph(w);
}

[[noreturn]] void not_recurrent(const SplitGraph& g, const Configuration& c, Reason reason) {
  std::cout << Json{{"recurrent", false},
                    {"reason", reason_code(reason)},
                    {"notation", to_string(g, c)},
                    {"graph", json_io::graph_to_json(g)}}
                   .dump()
            << '\n';
  throw Exit{kExitNotRecurrent, "not recurrent: " + std::string(reason_code(reason))};
}

Hub hub_from_config(const SplitGraph& g, const Configuration& c) {
  if (!is_stable(g, c)) throw NotStable("configuration " + to_string(g, c) + " is not stable");
  const Verdict v = classify(g, c);
  if (!v.recurrent()) not_recurrent(g, c, v.reason);
  return {g, *v.word};
}

void check_graph_matches(const Globals& opt, const SplitGraph& g) {
  if ((opt.m && opt.m != g.m()) || (opt.n && opt.n != g.n())) {
    throw ShapeError("payload lives on S(" + std::to_string(g.m()) + "," + std::to_string(g.n()) +
                     "), not on the requested --m/--n");
  }
}

Hub parse_hub(const Globals& opt, const std::string& from, const std::string& payload) {
  const Side sink = opt.sink_side();
  if (from == "config") return hub_from_config(opt.graph(), parse_config_payload(opt.graph(), payload));
  MotzkinWord w;
  if (from == "word") {
    w = MotzkinWord(payload);
  } else if (from == "necklace") {
    const auto first = payload.find_first_not_of(" \t");
    const Json j = first != std::string::npos && payload[first] == '{' ? parse_json(payload)
                                                                        : Json(payload);
    w = motzkin_from_necklace(json_io::necklace_from_json(j));
  } else if (from == "syt") {
    if (sink != Side::Independent) throw DomainError("tableaux pair with --sink independent");
    w = dh_from_syt(json_io::syt_from_json(parse_json(payload)));
  } else if (from == "parking") {
    const TieredParkingInstance p = json_io::instance_from_json(parse_json(payload));
    if (p.tiers() != 3) throw DomainError("parking payload must have three tiers");
    // Tier order is (m-1, n, m-1) for a clique sink and (m, n-1, m) for an
    // independent sink; tier 2 asks for b, tier 3 for a+1.
    const std::size_t m = sink == Side::Clique ? p.tier_counts[0] + 1 : p.tier_counts[0];
    const std::size_t n = sink == Side::Clique ? p.tier_counts[1] : p.tier_counts[1] + 1;
    const SplitGraph g = sink == Side::Clique ? SplitGraph::with_clique_sink(m, n)
                                              : SplitGraph::with_independent_sink(m, n);
    check_graph_matches(opt, g);
    const auto& b = p.requirements[0];
    const auto& a_plus_one = p.requirements[1];
    const ParkingResult parked = sink == Side::Clique
                                     ? strict_parking_clique(m, n, b, a_plus_one)
                                     : strict_parking_independent(m, n, b, a_plus_one);
    Configuration c = zero_configuration(g);
    for (std::size_t i = 0; i < b.size(); ++i) c.independent[i] = static_cast<Height>(b[i]);
    for (std::size_t i = 0; i < a_plus_one.size(); ++i) {
      if (a_plus_one[i] == 0) {
        if (parked.feasible) throw Exit{kExitCheckFailed, "parking accepted a zero requirement"};
        not_recurrent(g, c, Reason::ThresholdViolation);
      }
      c.clique[i] = static_cast<Height>(a_plus_one[i] - 1);
    }
    if (!parked.feasible) {
      const Verdict v = is_stable(g, c) ? classify(g, c) : Verdict{};
      if (v.recurrent()) throw Exit{kExitCheckFailed, "parking rejected a recurrent configuration"};
      not_recurrent(g, c, is_stable(g, c) ? v.reason : Reason::ThresholdViolation);
    }
    return {g, word_from_street(*parked.witness)};
  } else {
    throw DomainError("unknown representation \"" + from + "\"");
  }
  const SplitGraph g = graph_for_word(w, sink);
  check_graph_matches(opt, g);
  return {g, w};
}

Json render(const Hub& hub, const std::string& to) {
  const Side sink = hub.graph.sink_side();
  if (to == "word") return hub.word.str();
  if (to == "necklace") return json_io::necklace_to_json(necklace_from_motzkin(hub.word));
  if (to == "config") {
    const Configuration c = sink == Side::Clique ? f_map(hub.word) : g_map(hub.word);
    return config_record(hub.graph, c);
  }
  if (to == "syt") {
    if (sink != Side::Independent) throw DomainError("tableaux pair with --sink independent");
    return json_io::syt_to_json(syt_from_dh(hub.word));
  }
  if (to == "parking") {
    const Configuration c = sink == Side::Clique ? f_map(hub.word) : g_map(hub.word);
    const auto b = signed_heights(c.independent, 0);
    const auto a_plus_one = signed_heights(c.clique, 1);
    const std::size_t m = hub.graph.m();
    const std::size_t n = hub.graph.n();
    const TieredParkingInstance p = sink == Side::Clique
                                        ? clique_sink_instance(m, n, b, a_plus_one)
                                        : independent_sink_instance(m, n, b, a_plus_one);
    return {{"instance", json_io::instance_to_json(p)},
            {"street", json_io::street_to_json(street_from_word(hub.word))}};
  }
  throw DomainError("unknown representation \"" + to + "\"");
}

void run_convert(const Globals& opt, const std::string& from, const std::string& to,
                 const std::string& payload) {
  const Hub hub = parse_hub(opt, from, payload);
  Json r = {{"from", from},
            {"to", to},
            {"m", hub.graph.m()},
            {"n", hub.graph.n()},
            {"sink", json_io::vertex_to_json(hub.graph.sink())},
            {"word", hub.word.str()}};
  r["result"] = render(hub, to);
  Emitter out(opt.format);
  out.record(r);
}

// ---- check ----

int run_check(const Globals& opt, const std::string& payload) {
  const SplitGraph g = opt.graph();
  Configuration c = parse_config_payload(g, payload);
  Json r = {{"graph", json_io::graph_to_json(g)}, {"input", to_string(g, c)}};
  if (!is_stable(g, c)) {
    const Stabilization s = stabilize(g, c);
    r["odometer"] = json_io::odometer_to_json(s.topples);
    c = s.config;
  }
  r["stable"] = to_string(g, c);

  const BurningResult burn = is_recurrent(g, c);
  const Verdict verdict = classify(g, c);
  const auto b = signed_heights(c.independent, 0);
  const auto a_plus_one = signed_heights(c.clique, 1);
  const bool parked = g.sink_side() == Side::Clique
                          ? is_recurrent_via_parking_clique(g.m(), g.n(), b, a_plus_one)
                          : is_recurrent_via_parking_independent(g.m(), g.n(), b, a_plus_one);

  r["recurrent"] = burn.recurrent;
  if (burn.certificate) {
    Json order = Json::array();
    for (VertexId v : *burn.certificate) order.push_back(to_string(v));
    r["certificate"] = order;
  }
  r["bijection"] = verdict.recurrent() ? Json(verdict.word->str()) : Json(nullptr);
  r["reason"] = reason_code(verdict.reason);
  r["parking"] = parked;
  const bool agree = verdict.recurrent() == burn.recurrent && parked == burn.recurrent;
  r["oracles_agree"] = agree;
  Emitter out(opt.format);
  out.record(r);
  if (!agree) {
    std::cerr << "error: recurrence oracles disagree\n";
    return kExitCheckFailed;
  }
  return burn.recurrent ? kExitOk : kExitNotRecurrent;
}

// ---- count ----

void run_count_formulas(const Globals& opt) {
  opt.graph();
  const std::size_t m = opt.m;
  const std::size_t n = opt.n;
  Json r = {{"m", m}, {"n", n}};
  r["spanning_trees"] = big(count_spanning_trees(m, n));
  r["recurrent"] = big(count_spanning_trees(m, n));
  r["decreasing_clique_sink"] = big(count_motzkin(m - 1, n));
  r["decreasing_independent_sink"] = big(count_dh(m, n - 1));
  r["motzkin"] = big(count_motzkin(m - 1, n));
  r["dh_motzkin"] = big(count_dh(m, n - 1));
  r["syt_hook_length"] = big(count_syt_hook(m, n - 1));
  r["stable_clique_sink"] = big(stable_configuration_count(SplitGraph::with_clique_sink(m, n)));
  r["stable_independent_sink"] =
      big(stable_configuration_count(SplitGraph::with_independent_sink(m, n)));
  Emitter out(opt.format);
  out.record(r);
}

void run_count_tiered(const Globals& opt, const std::vector<std::size_t>& tiers,
                      std::uint64_t bound) {
  const ParkingCount count = enumerate_tiered_pf(tiers, bound, opt.effective_budget());
  Json r = {{"tiers", tiers},
            {"bound", bound},
            {"sequences", count.sequences},
            {"literal", count.literal}};
  r["strict"] = count.strict ? Json(*count.strict) : Json(nullptr);
  Emitter out(opt.format);
  out.record(r);
}

// ---- tree ----

void run_tree(const Globals& opt, const std::string& direction, const std::string& payload) {
  opt.graph();
  const Json j = parse_json(payload);
  Json r;
  if (direction == "encode") {
    r = json_io::pair_to_json(encode(json_io::tree_from_json(j), opt.m, opt.n));
  } else if (direction == "decode") {
    r = json_io::tree_to_json(decode(json_io::pair_from_json(j), opt.m, opt.n));
  } else {
    throw DomainError("tree takes encode or decode, got \"" + direction + "\"");
  }
  Emitter out(opt.format);
  out.record(r);
}

// ---- verify ----

int run_verify(const Globals& opt, std::size_t m_max, std::size_t n_max, bool inject_fault,
               bool timing, std::size_t samples, std::size_t jobs) {
  VerifyOptions options;
  options.budget = opt.effective_budget();
  options.seed = opt.seed;
  options.random_samples = samples;
  options.inject_fault = inject_fault;

  struct Cell {
    std::size_t m;
    std::size_t n;
    Side sink;
  };
  std::vector<Cell> cells;
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (Side sink : {Side::Clique, Side::Independent}) cells.push_back({m, n, sink});
    }
  }

  // Cells are independent; results are merged back in cell order.
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<IdentityCheck>> results(cells.size());
  for (std::size_t first = 0; first < cells.size(); first += std::max<std::size_t>(jobs, 1)) {
    std::vector<std::future<std::vector<IdentityCheck>>> batch;
    const std::size_t last = std::min(cells.size(), first + std::max<std::size_t>(jobs, 1));
    for (std::size_t i = first; i < last; ++i) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&, i] { return verify_cell(cells[i].m, cells[i].n, cells[i].sink, options); }));
    }
    for (std::size_t i = first; i < last; ++i) results[i] = batch[i - first].get();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Emitter out(opt.format);
  std::size_t failed = 0;
  std::size_t total = 0;
  for (const auto& cell : results) {
    for (const IdentityCheck& check : cell) {
      ++total;
      if (!check.passed) ++failed;
      out.record({{"identity", check.identity},
                  {"m", check.m},
                  {"n", check.n},
                  {"sink", json_io::side_name(check.sink)},
                  {"passed", check.passed},
                  {"detail", check.detail}});
    }
  }
  Json summary = {{"checks", total}, {"failed", failed}, {"passed", failed == 0}};
  if (timing) summary["seconds"] = seconds;
  std::cout << summary.dump() << '\n';
  if (failed) std::cerr << "error: " << failed << " of " << total << " identities failed\n";
  return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sandpile recurrence on complete split graphs S(m,n) and its bijections"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals opt;
  app.add_option("--m", opt.m, "clique size");
  app.add_option("--n", opt.n, "independent size");
  app.add_option("--sink", opt.sink, "sink side")
      ->check(CLI::IsMember({"clique", "independent"}))
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag_callback("--csv", [&] { opt.format = "csv"; }, "same as --format csv");
  app.add_option("--budget", opt.budget,
                 "cap on exhaustive enumeration sizes (default: $SPLITPILE_BUDGET or 2000000)");
  app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();

  int code = kExitOk;

  std::string kind;
  auto* enumerate = app.add_subcommand("enumerate", "stream objects for one graph");
  enumerate
      ->add_option("kind", kind,
                   "recurrent | decreasing-recurrent | motzkin | dh-motzkin | necklaces | trees")
      ->required();
  enumerate->callback([&] { run_enumerate(opt, kind); });

  std::string from;
  std::string to;
  std::string payload;
  const auto representations = CLI::IsMember({"config", "word", "necklace", "parking", "syt"});
  auto* convert = app.add_subcommand("convert", "convert between representations");
  convert->add_option("--from", from, "input representation")->required()->check(representations);
  convert->add_option("--to", to, "output representation")->required()->check(representations);
  convert->add_option("payload", payload, "input object")->required();
  convert->callback([&] { run_convert(opt, from, to, payload); });

  std::string check_payload;
  auto* check = app.add_subcommand("check", "stabilize a configuration and test recurrence");
  check->add_option("config", check_payload, "configuration, e.g. \"(5,3,1,-;3,3,3,2)\"")
      ->required();
  check->callback([&] { code = run_check(opt, check_payload); });

  std::string count_kind = "formulas";
  std::vector<std::size_t> tiers;
  std::uint64_t bound = 0;
  auto* count = app.add_subcommand("count", "closed-form counts, or tiered parking enumeration");
  count->add_option("kind", count_kind, "formulas | tiered")
      ->check(CLI::IsMember({"formulas", "tiered"}))
      ->capture_default_str();
  count->add_option("--tiers", tiers, "tier sizes for tiered counting")->delimiter(',');
  count->add_option("--bound", bound, "largest requirement value for tiered counting");
  count->callback([&] {
    if (count_kind == "tiered") {
      run_count_tiered(opt, tiers, bound);
    } else {
      run_count_formulas(opt);
    }
  });

  std::string direction;
  std::string tree_payload;
  auto* tree = app.add_subcommand("tree", "Prufer-style codes of spanning trees");
  tree->add_option("direction", direction, "encode | decode")
      ->required()
      ->check(CLI::IsMember({"encode", "decode"}));
  tree->add_option("payload", tree_payload, "tree or code as JSON")->required();
  tree->callback([&] { run_tree(opt, direction, tree_payload); });

  std::size_t m_max = 0;
  std::size_t n_max = 0;
  bool inject_fault = false;
  bool timing = false;
  std::size_t samples = 20;
  std::size_t jobs = 1;
  auto* verify = app.add_subcommand("verify", "run every identity on 1<=m<=M, 1<=n<=N");
  verify->add_option("M", m_max)->required()->check(CLI::PositiveNumber);
  verify->add_option("N", n_max)->required()->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", inject_fault, "corrupt one expected value (self-test)");
  verify->add_flag("--timing", timing, "report wall-clock time in the summary");
  verify->add_option("--samples", samples, "random abelian samples per cell")->capture_default_str();
  verify->add_option("--jobs", jobs, "cells verified concurrently")->capture_default_str();
  verify->callback(
      [&] { code = run_verify(opt, m_max, n_max, inject_fault, timing, samples, jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kExitOk : kExitUsage;
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const NotStable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}
