#pragma once

#include "dq/dq.hpp"

#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace dq::verify {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::map<std::string, double> metrics;
    std::vector<std::string> failures;

    // Records `value` and fails the suite when it exceeds `limit`.
    void check_below(const std::string& metric, double value, double limit);
    void check(bool ok, const std::string& what);
};

/// Suite tags in execution order (excluding "all").
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws DomainError for an unknown tag.
SuiteResult run_suite(std::string_view name, const PhysParams& params);

/// Random polynomial with Gaussian-integer coefficients in [-3, 3] + i[-3, 3],
/// at most `max_terms` monomials of total degree <= max_degree.
PhasePoly random_poly(std::mt19937_64& rng, Basis basis, int max_degree, int max_terms = 6);

}  // namespace dq::verify
