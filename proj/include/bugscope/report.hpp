#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "bugscope/centrality.hpp"
#include "bugscope/certify.hpp"
#include "bugscope/constructions.hpp"
#include "bugscope/lemmas.hpp"
#include "bugscope/search.hpp"

namespace bugscope {

using Json = nlohmann::ordered_json;

/// Value of the "schema" key carried by every top-level document.
inline constexpr const char* kSchema = "bugscope/1";

/// "p/q" (or "k"), null when absent.
Json rational_json(const std::optional<Rational>& value);

Json profile_json(const Graph& g, const BetweennessProfile& profile);
Json certification_json(const CertificationReport& report);
Json construction_json(const Construction& c, const CertificationReport& report);
Json search_json(const SearchResult& result);
Json star_exclusion_json(const StarExclusionReport& report);
Json lemmas_json(const LemmaReport& report);
Json bug_scan_json(std::size_t n_max, std::span<const BugEntry> bugs);

/// Indented "key: value" rendering of a document; carries nothing beyond the JSON.
std::string render_text(const Json& doc);

}  // namespace bugscope
