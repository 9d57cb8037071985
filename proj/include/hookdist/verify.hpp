#pragma once

#include "hookdist/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hookdist {

enum class Suite { Oracle, Identities, Asymptotics, All };

/// Parses "oracle", "identities", "asymptotics" or "all".
Suite parse_suite(const std::string& name);

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

using ProgressSink = std::function<void(const std::string&)>;

/// Runs the selected check suites. Randomized checks use fixed seeds, so the
/// report is reproducible.
std::vector<CheckResult> run_verification(Suite suite, unsigned threads = 1, const ProgressSink& progress = {});

/// Exact sc_t(n; T0) for rational T0 > 0.
Rational exact_sc_value(int t, const Rational& t0, int n, unsigned threads = 1);

/// |sc_asymptotic - exact| / exact.
double asymptotic_relative_error(int t, const Rational& t0, int n, unsigned threads = 1);

}  // namespace hookdist
