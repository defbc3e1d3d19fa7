#pragma once

// JSON report documents (schema 1) and their aligned-table view.

#include <optional>
#include <string>

#include <json.hpp>

#include "curveh/analysis.hpp"
#include "curveh/arrangement.hpp"
#include "curveh/catalog.hpp"
#include "curveh/hierarchy.hpp"

namespace curveh {

inline constexpr int kReportSchema = 1;

/// Curve invariants, profiles, consistency checks and the Hilbert-series
/// certificate. `arrangement` adds component counts and, for line
/// arrangements, the t_r profile.
nlohmann::json analysis_document(const Analysis& a, const CurveReport& r, const std::optional<Arrangement>& arrangement);

/// Reference values of a catalog entry compared with the computed report.
nlohmann::json catalog_comparison(const CatalogEntry& e, const CurveReport& r);

nlohmann::json certificate_json(const GenericityCertificate& c);

/// Table view of an analysis document.
std::string render_table(const nlohmann::json& doc);

/// Table view of verification records followed by the summary.
std::string render_verify_table(const std::vector<nlohmann::json>& checks, const nlohmann::json& summary);

}  // namespace curveh
