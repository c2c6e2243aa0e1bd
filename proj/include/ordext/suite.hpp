#pragma once

#include <string>
#include <vector>

namespace ordext::suite {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the full acceptance battery: eight deterministic, seeded property
/// checks backed by independent oracles (exhaustive chain search,
/// permutation filters, literal reconstructions). Each result carries a
/// short account of what was checked.
std::vector<CriterionResult> run_all();

}  // namespace ordext::suite
