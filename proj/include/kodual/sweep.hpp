#pragma once

#include "kodual/core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kodual {

struct SweepInfo {
    std::string id;
    std::string checks;         // what is verified, in words
    std::string default_bound;  // "n" or "AxB"
};

const std::vector<SweepInfo>& sweep_registry();
std::optional<SweepInfo> find_sweep(const std::string& id);

struct SweepOptions {
    std::uint64_t seed = 0;
    std::string bound;     // empty means the registry default
    unsigned jobs = 1;
    bool shrink = true;
};

using Tallies = std::vector<std::pair<std::string, std::size_t>>;

struct InstanceOutcome {
    std::string name;
    bool pass = true;
    std::string detail;
    Tallies tallies;  // informational counters, summed over the sweep
};

struct SweepReport {
    std::string id;
    std::string bound;
    std::uint64_t seed = 0;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<InstanceOutcome> failures;  // sorted by instance name
    std::string shrunk;                     // minimised first counterexample, if any
    Tallies tallies;                        // sorted by counter name
    bool ok() const { return failures.empty(); }
};

/// Human readable summary: counts, tallies, first counterexample and its shrunk form.
std::string render_text(const SweepReport& r);
std::string render_json(const SweepReport& r);

/// Throws Error for unknown ids (the message lists the registry) or malformed bounds.
SweepReport run_sweep(const std::string& id, const SweepOptions& options);

/// One instance of a sweep: run it, and optionally shrink a failure to a smaller witness.
struct SweepTask {
    std::string name;
    std::function<InstanceOutcome()> run;
    std::function<std::string()> shrink;  // may be empty
};

/// Runs tasks on `jobs` worker threads; results come back sorted by name.
std::vector<InstanceOutcome> run_tasks(const std::vector<SweepTask>& tasks, unsigned jobs);

}  // namespace kodual
