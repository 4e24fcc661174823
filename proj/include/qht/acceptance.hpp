#pragma once

#include "qht/catalog.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qht {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    /// Wall-clock limit, if the criterion has one; exceeding it fails the criterion.
    std::optional<double> budget_seconds;
};

/// One line: "[PASS] 4 rho extension suite: ... (0.41 s / 5 s)".
std::string format_result(const CriterionResult& r);

struct ExtensionSuiteReport {
    std::size_t seeds = 0;
    /// Instances on which every checked class satisfied every property.
    std::size_t exact_instances = 0;
    std::size_t classes_checked = 0;
    std::vector<std::string> failures;
};

/// Random complexes for seeds 0..seeds-1: rho agrees before and after scalar extension, lies
/// in the spectrum, and shifts with the actions.
ExtensionSuiteReport run_extension_suite(std::size_t seeds, std::size_t size_bound = 8);

struct MutationReport {
    std::size_t mutations = 0;
    std::vector<std::string> undetected;
};

/// Adds 1 (at the grading-consistent power of t when there is one) to each structure constant
/// of each catalog entry in turn, symmetrically in the two factors, and expects validation to fail.
MutationReport run_mutation_test(const CatalogOptions& options = {});

std::vector<CriterionResult> run_acceptance(const CatalogOptions& options = {});

}  // namespace qht
