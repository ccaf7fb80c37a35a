#pragma once

#include <string>
#include <vector>

namespace semicore {

struct ExampleResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double millis = 0.0;
};

/// Identifiers of the replayable worked examples, in report order.
std::vector<std::string> worked_example_ids();

/// Runs one example; unknown ids yield a failed row. Library errors thrown
/// while running become failed rows as well.
ExampleResult run_worked_example(const std::string& id);

/// Runs every example whose id is in `only` (all when empty), on up to
/// `jobs` threads. Rows come back in report order regardless of scheduling.
std::vector<ExampleResult> run_worked_examples(const std::vector<std::string>& only, int jobs);

}  // namespace semicore
