#ifndef PLAB_HARNESS_HPP
#define PLAB_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plab/json_io.hpp"

namespace plab::harness {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "partition-lab 0.1.0";

struct Caps {
    std::uint64_t enumeration = 1ull << 24; // exhaustive coloring scans
    std::uint64_t palette_subsets = 1ull << 16;
};

// PARTITION_LAB_CAP overrides the enumeration cap.
Caps caps_from_env();

enum class Format { json, csv };

struct RunOptions {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    unsigned workers = 1;
    Caps caps;
};

// Everything emitted lives in `config`/`results`/`witnesses`; wall_ms is
// display-only and never serialized, so identical configs produce identical
// bytes regardless of timing or worker count.
struct Report {
    json config;
    json results;
    json witnesses = json::array();
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double wall_ms = 0;
};

const std::vector<std::string>& known_kinds();

// Dispatches the experiment; throws Error(config_invalid) on bad parameters.
Report run(const std::string& kind, const json& params, const RunOptions& opts);

std::string emit(const Report& report, Format format);

} // namespace plab::harness

#endif
