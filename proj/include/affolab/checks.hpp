#pragma once

#include "affolab/holonomy.hpp"
#include "affolab/manifest.hpp"

#include <nlohmann/json.hpp>

namespace affolab {

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    nlohmann::json details;  // exact data; failures carry a witness here
};

struct Report {
    std::string subject;
    std::vector<CheckResult> results;

    CheckStatus overall() const;
    /// 0 all pass, 1 a check failed, 3 inconclusive.
    int exit_code() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct CheckOptions {
    int radius = 8;
    int max_len = 8;
    int jet_degree = 2;
    long long cap = kDefaultBallCap;
};

const std::vector<std::string>& known_checks();

/// Dispatches one named check against a manifest. Throws ManifestError for an
/// unknown check name.
Report run_check(const Manifest& m, const std::string& check, const CheckOptions& opts = {});

}  // namespace affolab
