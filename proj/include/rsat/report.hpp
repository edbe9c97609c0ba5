#pragma once

// JSON serialization of verdicts, audits and search results (schema 1).
// Vertices appear as arrays of ids, nonedges as [u, v], colors as integers;
// the fresh-color marker serializes as the string "fresh".

#include <string>
#include <vector>

#include <json.hpp>

#include "rsat/search.hpp"
#include "rsat/structure.hpp"
#include "rsat/verifier.hpp"

namespace rsat {

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::json to_json(const Edge& e) { return nlohmann::json::array({e.u, e.v}); }

inline nlohmann::json to_json(const SaturationReport& report) {
        nlohmann::json out;
        out["schema_version"] = kReportSchemaVersion;
        switch (report.verdict) {
                case SaturationReport::Verdict::saturated: out["verdict"] = "saturated"; break;
                case SaturationReport::Verdict::contains_rainbow_copy:
                        out["verdict"] = "contains_rainbow_copy";
                        break;
                case SaturationReport::Verdict::unsaturated: out["verdict"] = "unsaturated"; break;
        }
        if (report.rainbow_copy) out["rainbow_copy"] = *report.rainbow_copy;
        if (report.failing_nonedge) out["failing_nonedge"] = to_json(*report.failing_nonedge);
        if (report.failing_color_is_fresh)
                out["failing_color"] = "fresh";
        else if (report.failing_color)
                out["failing_color"] = *report.failing_color;
        if (!report.per_nonedge_evidence.empty()) {
                nlohmann::json ev = nlohmann::json::object();
                for (const auto& [nonedge, cycles] : report.per_nonedge_evidence)
                        ev[std::to_string(nonedge.u) + "," + std::to_string(nonedge.v)] = cycles;
                out["per_nonedge_evidence"] = ev;
        }
        return out;
}

inline nlohmann::json to_json(const Degree2Classification& cls) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [a, b] : cls.bad_root_pairs) pairs.push_back({a, b});
        return {{"good_roots", cls.good_roots},
                {"bad_roots", cls.bad_roots},
                {"suspensions", cls.suspensions},
                {"bad_root_pairs", pairs}};
}

inline nlohmann::json to_json(const SuspensionAudit& audit) {
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& v : audit.violations)
                violations.push_back({{"vertex", v.vertex}, {"clause", v.clause}});
        return {{"pass", audit.pass}, {"violations", violations}};
}

inline nlohmann::json to_json(const std::vector<BoundCheck>& bounds) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& b : bounds)
                out.push_back({{"name", b.name},
                               {"required_edges", b.required},
                               {"actual_edges", b.actual},
                               {"pass", b.pass}});
        return out;
}

inline nlohmann::json to_json(const SearchResult& result) {
        nlohmann::json out;
        out["schema_version"] = kReportSchemaVersion;
        if (result.value)
                out["value"] = *result.value;
        else
                out["value"] = "undetermined";
        out["graphs_examined"] = result.graphs_examined;
        out["colorings_examined"] = result.colorings_examined;
        out["last_m_completed"] = result.last_m_completed;
        nlohmann::json certs = nlohmann::json::array();
        for (const auto& cert : result.certificates)
                certs.push_back({{"graph6", cert.graph6}, {"coloring", cert.coloring}});
        out["certificates"] = certs;
        return out;
}

inline nlohmann::json to_json(const SearchCheckpoint& cp) {
        nlohmann::json hits = nlohmann::json::array();
        for (const auto& [rank, cert] : cp.pending_hits)
                hits.push_back({{"rank", rank}, {"graph6", cert.graph6}, {"coloring", cert.coloring}});
        return {{"schema_version", kReportSchemaVersion},
                {"m", cp.m},
                {"next_rank", cp.next_rank},
                {"graphs_examined", cp.graphs_examined},
                {"colorings_examined", cp.colorings_examined},
                {"pending_hits", hits}};
}

inline SearchCheckpoint checkpoint_from_json(const nlohmann::json& j) {
        SearchCheckpoint cp;
        cp.m = j.at("m").get<int>();
        cp.next_rank = j.at("next_rank").get<std::uint64_t>();
        cp.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
        cp.colorings_examined = j.at("colorings_examined").get<std::uint64_t>();
        for (const auto& hit : j.at("pending_hits"))
                cp.pending_hits.emplace_back(
                    hit.at("rank").get<std::uint64_t>(),
                    SearchCertificate{hit.at("graph6").get<std::string>(),
                                      hit.at("coloring").get<std::string>()});
        return cp;
}

}  // namespace rsat
