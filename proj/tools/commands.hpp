#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace cli {

inline constexpr int kSchema = 1;
const char* version();

struct Config {
    long seed = 0;        // [0, 2^62]
    long cap_stage = 24;  // [1, 64]
    long cap_degree = 8;  // [1, 64]
    long truncation = 12;  // [1, 1000]

    json to_json() const;
    // Overrides fields present in j; unknown keys and out-of-range values throw.
    void merge(const json& j);
};

struct Job {
    std::string command;  // e.g. "hilbert" or "witt star"
    json input = json::object();
    Config config;
};

struct Outcome {
    int exit_code = 0;
    json report;
};

const std::vector<std::string>& command_names();

// Never throws: errors become exit code 2 with an "error" block.
Outcome run(const Job& job);
// The exit-2 report for a job that could not be read.
Outcome failure(const Job& job, const std::string& kind, const std::string& message);

// Batch entry {"command", "input" (object or file path), "config"}; relative
// paths resolve against base_dir.
Job parse_job(const json& j, const Config& defaults, const std::string& base_dir);

std::string render_table(const json& report);

}  // namespace cli
