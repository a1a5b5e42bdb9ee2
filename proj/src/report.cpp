#include "bugscope/report.hpp"

#include <sstream>

#include "bugscope/graph_io.hpp"

namespace bugscope {

namespace {

Json document(const char* kind) {
  Json doc;
  doc["schema"] = kSchema;
  doc["kind"] = kind;
  return doc;
}

Json components_json(const ComponentInventory& inventory) {
  Json out = Json::array();
  for (const Component& c : inventory.components) {
    Json entry;
    entry["min_vertex"] = c.vertices.front();
    entry["vertices"] = c.vertices.size();
    entry["edges"] = c.edge_count;
    entry["star"] = c.star ? Json(*c.star) : Json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

Json claims_json(const std::vector<Claim>& claims) {
  Json out = Json::array();
  for (Claim c : claims) out.push_back(std::string(claim_name(c)));
  return out;
}

Json structure_json(const std::vector<ComponentStructure>& entries) {
  Json out = Json::array();
  for (const ComponentStructure& s : entries) {
    Json e;
    e["component"] = s.component;
    e["uniform"] = s.uniformity.is_uniform;
    e["m"] = s.uniformity.is_uniform ? Json(s.uniformity.m) : Json(nullptr);
    e["t"] = s.uniformity.is_uniform ? Json(s.uniformity.t) : Json(nullptr);
    e["complete_multipartite"] = s.uniformity.is_complete_multipartite;
    e["excess"] = s.excess;
    e["closeness"] = s.closeness;
    e["passes"] = s.verdict.passes;
    e["failed_claims"] = claims_json(s.verdict.failed_claims);
    out.push_back(std::move(e));
  }
  return out;
}

Json certification_body(const CertificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["edges"] = r.edge_count;
  j["is_cobug"] = r.is_cobug;
  j["complement_is_bug"] = r.complement_is_bug;
  j["betweenness"] = rational_json(r.betweenness);
  j["co_betweenness"] = rational_json(r.co_betweenness);
  j["exotic"] = r.exotic;
  j["exotic_reason"] = r.exotic_reason;
  j["route"] = std::string(route_name(r.route));
  j["components"] = components_json(r.inventory);
  j["violations"] = r.violations;
  j["structure"] = structure_json(r.structure);
  return j;
}

Json hit_json(const SearchHit& hit) {
  Json j;
  j["ell"] = hit.ell;
  j["n"] = hit.n;
  j["star_copies"] = hit.star_copies;
  Json comps = Json::array();
  for (const Graph& g : hit.components) comps.push_back(to_graph6(g));
  j["components"] = std::move(comps);
  j["certification"] = certification_body(hit.report);
  return j;
}

Json search_body(const SearchResult& r) {
  Json j;
  Json cfg;
  cfg["ell_min"] = r.config.ell_min;
  cfg["ell_max"] = r.config.ell_max;
  cfg["component_vertex_cap"] = r.config.component_vertex_cap;
  cfg["n_cap"] = r.config.n_cap;
  cfg["max_nonstar_components"] = r.config.max_nonstar_components;
  cfg["corpus"] = r.config.corpus ? Json(r.config.corpus->string()) : Json(nullptr);
  cfg["allow_betweenness_one"] = r.config.allow_betweenness_one;
  j["config"] = std::move(cfg);
  j["enumerated"] = r.enumerated;
  Json pruned;
  for (const auto& [name, count] : r.pruned_counts) pruned[name] = count;
  j["pruned_counts"] = std::move(pruned);
  Json tallies;
  for (const auto& [name, count] : r.claim_tallies) tallies[name] = count;
  j["claim_tallies"] = std::move(tallies);
  j["survivors"] = r.survivors;
  j["accepted_candidates"] = r.accepted_candidates;
  Json per_ell = Json::array();
  for (const EllStats& s : r.per_ell) {
    Json e;
    e["ell"] = s.ell;
    e["evaluated"] = s.evaluated;
    e["window_empty"] = s.window_empty;
    e["n_cap_limited"] = s.n_cap_limited;
    e["hosts_tested"] = s.hosts_tested;
    e["mismatches"] = s.mismatches;
    e["accepted"] = s.accepted;
    per_ell.push_back(std::move(e));
  }
  j["per_ell"] = std::move(per_ell);
  j["found"] = Json::array();
  for (const SearchHit& h : r.found) j["found"].push_back(hit_json(h));
  j["non_exotic"] = Json::array();
  for (const SearchHit& h : r.non_exotic) j["non_exotic"].push_back(hit_json(h));
  if (r.config.record_eliminations) {
    Json log = Json::array();
    for (const CandidateElimination& e : r.eliminations) log.push_back({{"graph6", e.graph6}, {"reason", e.reason}});
    j["eliminations"] = std::move(log);
  }
  j["exhausted"] = r.exhausted;
  j["wall_clock_seconds"] = r.wall_clock_seconds;
  return j;
}

void render(const Json& value, const std::string& indent, std::ostringstream& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      if (child.is_structured() && !child.empty()) {
        out << indent << key << ":\n";
        render(child, indent + "  ", out);
      } else {
        out << indent << key << ": " << (child.is_string() ? child.get<std::string>() : child.dump()) << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& child : value) {
      if (child.is_structured() && !child.empty()) {
        out << indent << "-\n";
        render(child, indent + "  ", out);
      } else {
        out << indent << "- " << (child.is_string() ? child.get<std::string>() : child.dump()) << "\n";
      }
    }
  }
}

}  // namespace

Json rational_json(const std::optional<Rational>& value) {
  return value ? Json(value->to_string()) : Json(nullptr);
}

Json profile_json(const Graph& g, const BetweennessProfile& profile) {
  Json doc = document("analysis");
  doc["n"] = g.vertex_count();
  doc["edges"] = g.edge_count();
  doc["is_uniform"] = profile.is_uniform;
  doc["value"] = profile.is_uniform ? Json(profile.average.to_string()) : Json(nullptr);
  doc["average"] = profile.average.to_string();
  Json per_vertex = Json::array();
  for (const Rational& r : profile.per_vertex) per_vertex.push_back(r.to_string());
  doc["per_vertex"] = std::move(per_vertex);
  return doc;
}

Json certification_json(const CertificationReport& report) {
  Json doc = document("certification");
  doc.update(certification_body(report));
  return doc;
}

Json construction_json(const Construction& c, const CertificationReport& report) {
  Json doc = document("construction");
  doc["family"] = std::string(family_name(c.spec.family));
  doc["parameters"] = c.spec.parameters;
  doc["predicted_betweenness"] = c.spec.predicted_betweenness.to_string();
  doc["matches_prediction"] = report.betweenness && *report.betweenness == c.spec.predicted_betweenness;
  doc["certification"] = certification_body(report);
  return doc;
}

Json search_json(const SearchResult& result) {
  Json doc = document("search");
  doc.update(search_body(result));
  return doc;
}

Json star_exclusion_json(const StarExclusionReport& r) {
  Json doc = document("star-exclusion");
  doc["ell"] = r.ell;
  doc["n_lower"] = r.n_lower;
  doc["n_upper"] = r.n_upper;
  doc["window_empty"] = r.window_empty;
  doc["forced_closeness"] = r.forced_closeness;
  doc["max_excess"] = r.max_excess ? Json(*r.max_excess) : Json(nullptr);
  doc["excluded"] = r.excluded;
  doc["search"] = search_body(r.search);
  return doc;
}

Json lemmas_json(const LemmaReport& report) {
  Json doc = document("lemmas");
  doc["n_max"] = report.n_max;
  doc["ell_max"] = report.ell_max;
  doc["all_passed"] = report.all_passed();
  Json list = Json::array();
  for (const LemmaOutcome& l : report.lemmas) {
    Json e;
    e["name"] = l.name;
    e["passed"] = l.passed();
    e["checked"] = l.checked;
    e["vacuous"] = l.vacuous();
    e["violations"] = l.violations;
    e["counterexample"] = l.counterexample ? Json(*l.counterexample) : Json(nullptr);
    if (!l.detail.empty()) e["detail"] = l.detail;
    list.push_back(std::move(e));
  }
  doc["lemmas"] = std::move(list);
  return doc;
}

Json bug_scan_json(std::size_t n_max, std::span<const BugEntry> bugs) {
  Json doc = document("bug-scan");
  doc["n_max"] = n_max;
  doc["count"] = bugs.size();
  Json list = Json::array();
  for (const BugEntry& b : bugs) {
    Json e;
    e["graph6"] = to_graph6(b.graph);
    e["n"] = b.graph.vertex_count();
    e["value"] = b.value.to_string();
    list.push_back(std::move(e));
  }
  doc["bugs"] = std::move(list);
  return doc;
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  render(doc, "", out);
  return out.str();
}

}  // namespace bugscope
