#pragma once

#include "teleport/protocol.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace teleport {

enum class Scenario { bennett, naive, symmetric, verify_bases, sweep };
enum class Backend { exact, numeric };
enum class OutputFormat { text, json };

std::string to_string(Scenario s);
std::string to_string(Backend b);
std::optional<Scenario> parse_scenario(const std::string& name);

struct RunConfig {
    Scenario scenario = Scenario::symmetric;
    Backend backend = Backend::exact;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    OutputFormat format = OutputFormat::text;
    std::string output_path;  // empty: stdout
};

/// Usage problem with the flag combination, if any.
std::optional<std::string> validate(const RunConfig& config);

struct Check {
    std::string name;
    std::string paper_ref;  // provenance of the claim being checked
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ReportedScalar {
    std::string name;
    std::string exact;
    double value = 0.0;
};

struct ReportedState {
    std::string name;
    std::vector<std::pair<std::string, std::string>> terms;
};

struct Report {
    static constexpr int schema_version = 1;

    std::string scenario;
    std::string backend;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    std::vector<ReportedScalar> probabilities;
    std::optional<ReportedScalar> fidelity;
    std::vector<ReportedState> states;
    std::vector<std::string> notes;

    bool all_passed() const;
    std::size_t passed() const;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Haar-uniform qubit amplitudes for sample `index` of the stream rooted at `seed`:
/// two standard complex Gaussians, normalized. Each index has its own RNG stream.
InputAmplitudes<Complex> haar_sample(std::uint64_t seed, std::uint64_t index);

/// Twenty deterministic inputs: the poles, two equator points and a 4x4 grid.
std::vector<InputAmplitudes<Complex>> fixed_sample_points();

/// Runs one scenario and collects its checks.
Report run_scenario(const RunConfig& config);

/// Runs the scenario, writes the report, and returns the exit code:
/// 0 all checks pass, 1 some check failed, 2 usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace teleport
