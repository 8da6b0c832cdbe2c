#include "splitpile/json_io.hpp"

#include "splitpile/errors.hpp"

namespace splitpile::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw DomainError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<Height> heights_from(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
  std::vector<Height> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(as_size(x, what));
  return out;
}

std::vector<std::size_t> labels_from(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const Json& x : j) out.push_back(parse_label(x));
  return out;
}

Json labels_to(const std::vector<std::size_t>& labels) {
  Json out = Json::array();
  for (std::size_t x : labels) out.push_back("v" + std::to_string(x));
  return out;
}

}  // namespace

Side parse_side(std::string_view text) {
  if (text == "clique") return Side::Clique;
  if (text == "independent") return Side::Independent;
  throw DomainError("side must be \"clique\" or \"independent\", got \"" + std::string(text) + "\"");
}

std::string_view side_name(Side side) { return side == Side::Clique ? "clique" : "independent"; }

Json vertex_to_json(VertexId v) { return {{"side", side_name(v.side)}, {"index", v.index}}; }

VertexId vertex_from_json(const Json& j) {
  const Json& side = field(j, "side");
  if (!side.is_string()) throw DomainError("side must be a string");
  return {parse_side(side.get<std::string>()), as_size(field(j, "index"), "index")};
}

Json graph_to_json(const SplitGraph& g) {
  return {{"m", g.m()}, {"n", g.n()}, {"sink", vertex_to_json(g.sink())}};
}

SplitGraph graph_from_json(const Json& j) {
  return SplitGraph(as_size(field(j, "m"), "m"), as_size(field(j, "n"), "n"),
                    vertex_from_json(field(j, "sink")));
}

Json configuration_to_json(const Configuration& c) {
  return {{"clique", c.clique}, {"independent", c.independent}};
}

Configuration configuration_from_json(const Json& j) {
  return {heights_from(field(j, "clique"), "clique"),
          heights_from(field(j, "independent"), "independent")};
}

Json odometer_to_json(const Odometer& o) {
  return {{"clique", o.clique}, {"independent", o.independent}};
}

Json syt_to_json(const StandardYoungTableau& t) { return {{"shape", t.shape}, {"rows", t.rows}}; }

StandardYoungTableau syt_from_json(const Json& j) {
  StandardYoungTableau t;
  t.shape = heights_from(field(j, "shape"), "shape");
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) throw DomainError("rows must be an array");
  for (const Json& row : rows) t.rows.push_back(heights_from(row, "row"));
  return t;
}

Json necklace_to_json(const Necklace& x) { return {{"necklace", x.str()}, {"cyclic", true}}; }

Necklace necklace_from_json(const Json& j) {
  if (j.is_string()) return Necklace(j.get<std::string>());
  const Json& beads = field(j, "necklace");
  if (!beads.is_string()) throw DomainError("necklace must be a string");
  return Necklace(beads.get<std::string>());
}

std::size_t parse_label(const Json& j) {
  if (j.is_number_integer()) return as_size(j, "label");
  if (!j.is_string()) throw DomainError("vertex label must be \"v<k>\" or an integer");
  const std::string text = j.get<std::string>();
  if (text.size() < 2 || text[0] != 'v' ||
      text.find_first_not_of("0123456789", 1) != std::string::npos) {
    throw DomainError("vertex label must look like \"v7\", got \"" + text + "\"");
  }
  return std::stoul(text.substr(1));
}

Json tree_to_json(const SpanningTree& t) {
  Json edges = Json::array();
  for (const auto& [a, b] : t.edges()) {
    edges.push_back({"v" + std::to_string(a), "v" + std::to_string(b)});
  }
  return {{"edges", edges}};
}

SpanningTree tree_from_json(const Json& j) {
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw DomainError("edges must be an array");
  std::vector<LabelEdge> out;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw DomainError("each edge must be a pair of labels");
    out.emplace_back(parse_label(e[0]), parse_label(e[1]));
  }
  return SpanningTree(std::move(out));
}

Json pair_to_json(const PruferPair& p) { return {{"f", labels_to(p.f)}, {"g", labels_to(p.g)}}; }

PruferPair pair_from_json(const Json& j) {
  return {labels_from(field(j, "f"), "f"), labels_from(field(j, "g"), "g")};
}

Json instance_to_json(const TieredParkingInstance& p) {
  return {{"tiers", p.tier_counts}, {"requirements", p.requirements}};
}

TieredParkingInstance instance_from_json(const Json& j) {
  TieredParkingInstance p;
  p.tier_counts = heights_from(field(j, "tiers"), "tiers");
  const Json& reqs = field(j, "requirements");
  if (!reqs.is_array()) throw DomainError("requirements must be an array");
  for (const Json& tier : reqs) {
    if (!tier.is_array()) throw DomainError("each tier's requirements must be an array");
    std::vector<std::int64_t> values;
    for (const Json& x : tier) {
      if (!x.is_number_integer()) throw DomainError("requirements must be integers");
      values.push_back(x.get<std::int64_t>());
    }
    p.requirements.push_back(std::move(values));
  }
  p.validate();
  return p;
}

Json street_to_json(const StreetArrangement& street) {
  Json out = Json::array();
  for (const ParkedCar& car : street) out.push_back(car.tier);
  return out;
}

Json conversion_record(const SplitGraph& g, const Configuration& c, const MotzkinWord& w) {
  return {{"config", configuration_to_json(c)},
          {"word", w.str()},
          {"sink", vertex_to_json(g.sink())},
          {"m", g.m()},
          {"n", g.n()}};
}

}  // namespace splitpile::json_io
