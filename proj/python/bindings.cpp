#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitpile/bijections.hpp"
#include "splitpile/errors.hpp"
#include "splitpile/motzkin.hpp"
#include "splitpile/necklace.hpp"
#include "splitpile/parking.hpp"
#include "splitpile/prufer.hpp"
#include "splitpile/sandpile.hpp"
#include "splitpile/verify.hpp"

namespace py = pybind11;
using namespace splitpile;

namespace {

using Parts = std::pair<std::vector<Height>, std::vector<Height>>;

SplitGraph make_graph(std::size_t m, std::size_t n, const std::string& sink) {
  if (sink == "clique") return SplitGraph::with_clique_sink(m, n);
  if (sink == "independent") return SplitGraph::with_independent_sink(m, n);
  throw DomainError("sink must be \"clique\" or \"independent\"");
}

Configuration config(const Parts& parts) { return {parts.first, parts.second}; }
Parts parts(const Configuration& c) { return {c.clique, c.independent}; }

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.str())); }

// (word or None, reason code)
std::pair<std::optional<std::string>, std::string> verdict(const Verdict& v) {
  return {v.word ? std::optional<std::string>(v.word->str()) : std::nullopt,
          std::string(reason_code(v.reason))};
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Sandpile recurrence on complete split graphs S(m,n)";

  py::register_exception<Error>(mod, "SplitpileError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);

  mod.def("is_recurrent",
          [](std::size_t m, std::size_t n, const std::string& sink, const Parts& c) {
            return is_recurrent(make_graph(m, n, sink), config(c)).recurrent;
          },
          py::arg("m"), py::arg("n"), py::arg("sink"), py::arg("config"));
  mod.def("stabilize",
          [](std::size_t m, std::size_t n, const std::string& sink, const Parts& c) {
            const Stabilization s = stabilize(make_graph(m, n, sink), config(c));
            return std::make_pair(parts(s.config),
                                  std::make_pair(s.topples.clique, s.topples.independent));
          },
          py::arg("m"), py::arg("n"), py::arg("sink"), py::arg("config"));
  mod.def("all_recurrent",
          [](std::size_t m, std::size_t n, const std::string& sink) {
            std::vector<Parts> out;
            for (const Configuration& c : all_recurrent_brute(make_graph(m, n, sink))) {
              out.push_back(parts(c));
            }
            return out;
          },
          py::arg("m"), py::arg("n"), py::arg("sink"));
  mod.def("classify",
          [](std::size_t m, std::size_t n, const std::string& sink, const Parts& c) {
            return verdict(classify(make_graph(m, n, sink), config(c)));
          },
          py::arg("m"), py::arg("n"), py::arg("sink"), py::arg("config"));

  mod.def("f_map", [](const std::string& w) { return parts(f_map(MotzkinWord(w))); }, py::arg("word"));
  mod.def("g_map", [](const std::string& w) { return parts(g_map(MotzkinWord(w))); }, py::arg("word"));

  mod.def("generate_motzkin",
          [](std::size_t ups, std::size_t flats) {
            std::vector<std::string> out;
            for (const MotzkinWord& w : generate_all(ups, flats)) out.push_back(w.str());
            return out;
          },
          py::arg("ups"), py::arg("flats"));
  mod.def("is_dh_motzkin", [](const std::string& w) { return is_dh_motzkin(MotzkinWord(w)); },
          py::arg("word"));
  mod.def("syt_from_dh",
          [](const std::string& w) { return syt_from_dh(MotzkinWord(w)).rows; }, py::arg("word"));

  mod.def("necklace_from_motzkin",
          [](const std::string& w) { return necklace_from_motzkin(MotzkinWord(w)).str(); },
          py::arg("word"));
  mod.def("motzkin_from_necklace",
          [](const std::string& beads) { return motzkin_from_necklace(Necklace(beads)).str(); },
          py::arg("beads"));

  mod.def("encode_tree",
          [](const std::vector<LabelEdge>& edges, std::size_t m, std::size_t n) {
            const PruferPair p = encode(SpanningTree(edges), m, n);
            return std::make_pair(p.f, p.g);
          },
          py::arg("edges"), py::arg("m"), py::arg("n"));
  mod.def("decode_tree",
          [](const std::vector<std::size_t>& f, const std::vector<std::size_t>& g, std::size_t m,
             std::size_t n) { return decode({f, g}, m, n).edges(); },
          py::arg("f"), py::arg("g"), py::arg("m"), py::arg("n"));

  mod.def("is_tiered_pf",
          [](const std::vector<std::size_t>& tiers,
             const std::vector<std::vector<std::int64_t>>& requirements) {
            return is_tiered_pf_literal({tiers, requirements}).feasible;
          },
          py::arg("tiers"), py::arg("requirements"));

  mod.def("count_spanning_trees", [](std::size_t m, std::size_t n) { return to_py(count_spanning_trees(m, n)); },
          py::arg("m"), py::arg("n"));
  mod.def("count_motzkin", [](std::size_t u, std::size_t f) { return to_py(count_motzkin(u, f)); },
          py::arg("ups"), py::arg("flats"));
  mod.def("count_dh", [](std::size_t u, std::size_t f) { return to_py(count_dh(u, f)); },
          py::arg("ups"), py::arg("flats"));
  mod.def("count_syt_hook", [](std::size_t u, std::size_t f) { return to_py(count_syt_hook(u, f)); },
          py::arg("ups"), py::arg("flats"));

  mod.def("verify",
          [](std::size_t m_max, std::size_t n_max, std::uint64_t seed) {
            VerifyOptions options;
            options.seed = seed;
            std::vector<py::dict> out;
            for (const IdentityCheck& c : verify_range(m_max, n_max, options)) {
              py::dict d;
              d["identity"] = c.identity;
              d["m"] = c.m;
              d["n"] = c.n;
              d["sink"] = c.sink == Side::Clique ? "clique" : "independent";
              d["passed"] = c.passed;
              d["detail"] = c.detail;
              out.push_back(d);
            }
            return out;
          },
          py::arg("m_max"), py::arg("n_max"), py::arg("seed") = 1);
}
