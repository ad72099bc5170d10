#pragma once

#include <json.hpp>

#include "rlct/report.hpp"

namespace rlct {

SuiteResult run_suite(const SuiteConfig& cfg); // throws UsageError on bad config

std::vector<std::string> suite_names();

nlohmann::json report_json(const SuiteConfig& cfg, const SuiteResult& res);

// Individual suites (run_suite dispatches here).
SuiteResult suite_forms(const SuiteConfig&);
SuiteResult suite_cartan(const SuiteConfig&);
SuiteResult suite_embeddings(const SuiteConfig&);
SuiteResult suite_poisson(const SuiteConfig&);
SuiteResult suite_contact(const SuiteConfig&);
SuiteResult suite_tori(const SuiteConfig&);
SuiteResult suite_weights(const SuiteConfig&);
SuiteResult suite_weyl(const SuiteConfig&);
SuiteResult suite_invariants(const SuiteConfig&);
SuiteResult suite_jacobson(const SuiteConfig&);

} // namespace rlct
