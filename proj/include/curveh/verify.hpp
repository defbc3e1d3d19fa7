#pragma once

// Executable theorem checks: each trial builds a configuration from a seed,
// verifies the hypotheses, and compares predicted invariants with the
// computed resolution.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curveh/analysis.hpp"
#include "curveh/arrangement.hpp"

namespace curveh {

enum class Verdict { Pass, Fail, HypothesisNotMet, Error };

std::string to_string(Verdict v);

struct TheoremCheck {
    std::string theorem;
    int trial = 0;
    std::uint64_t seed = 0;       // seed that reproduces this record
    int reseeds = 0;              // genericity failures skipped before `seed`
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json hypotheses = nlohmann::json::object();  // name -> {ok, how, ...}
    nlohmann::json predicted = nlohmann::json::object();
    nlohmann::json computed = nlohmann::json::object();
    Verdict verdict = Verdict::Error;
    std::string detail;

    nlohmann::json to_json() const;
};

struct VerifyOptions {
    int trials = 20;
    std::uint64_t seed = 1;
    int workers = 1;
    int reseed_limit = 8;
    AnalysisOptions analysis{};
    SamplingOptions sampling{};
};

struct CampaignSummary {
    std::string theorem;
    std::vector<TheoremCheck> checks;
    int pass = 0, fail = 0, hypothesis_not_met = 0, error = 0;

    bool ok() const { return fail == 0 && error == 0; }
    nlohmann::json to_json() const;
};

/// Theorem ids accepted by run_campaign, without "all".
std::vector<std::string> theorem_ids();

/// Resolves aliases ("cor2" -> "thm0"); throws std::invalid_argument for an
/// unknown id.
std::string canonical_theorem_id(const std::string& id);

/// One trial of a campaign; the configuration is chosen from `trial` and the
/// randomness from `seed`.
TheoremCheck run_trial(const std::string& theorem, int trial, std::uint64_t seed, const VerifyOptions& opts);

/// `trials` seeded trials, run on `workers` threads and ordered by trial.
CampaignSummary run_campaign(const std::string& theorem, const VerifyOptions& opts);

/// Both union inequalities for f = f1 f2 (mdr bracket and type bound).
TheoremCheck check_union_bounds(const Poly& f1, const Poly& f2, const AnalysisOptions& opts);

/// Generic-union equalities when the smooth component `added` is transversal
/// to `base`; hypothesis-not-met when d2 > deg base - 2.
TheoremCheck check_generic_union(const Arrangement& base, const Component& added, const AnalysisOptions& opts);

/// Closed forms around the singular point (0:0:1) of cor11-family(e1).
TheoremCheck check_rk11(int e1, const AnalysisOptions& opts);

/// Enumerative bounds for a line arrangement; pass when no slack is negative.
TheoremCheck check_line_bounds(const Arrangement& lines, const AnalysisOptions& opts);

}  // namespace curveh
