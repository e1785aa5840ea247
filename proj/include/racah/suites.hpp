#ifndef RACAH_SUITES_HPP
#define RACAH_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace racah {

/// Configuration of one verification suite run. Identical configurations
/// produce byte-identical serialized reports; wall time is reported on the
/// console only and never serialized.
struct SuiteConfig {
    std::string suite;
    int p = 0; // 0 = suite default
    std::uint64_t seed = 1;
    std::string tier = "desk"; // smoke | desk | deep
    int trials = 0;            // 0 = tier default
};

struct CheckRecord {
    std::string id;      // stable identifier of the individual check
    std::string anchor;  // the mathematical claim being verified
    std::string inputs;  // short digest of the inputs
    bool pass = false;
    std::string witness; // failure data, empty on success
};

struct SuiteReport {
    std::string suite;
    std::string tier;
    std::uint64_t seed = 0;
    int p = 0;
    int trials = 0;
    std::vector<CheckRecord> checks;
    std::string error; // non-empty when the suite aborted
    long wall_ms = 0;  // not serialized

    std::size_t failed() const;
    bool passed() const { return error.empty() && failed() == 0; }
    std::string to_json() const;
};

/// All suite names in canonical execution order.
const std::vector<std::string>& suite_names();

/// Runs one suite; deterministic given the configuration. Throws
/// UnknownSuite / ConfigInvalid for bad configurations.
SuiteReport run_suite(const SuiteConfig& config);

/// Runs every suite at the tier bounds; suite errors become failed reports,
/// never aborts. `workers` <= 0 reads RACAH_VERIFY_WORKERS, falling back to
/// the hardware parallelism. Reports come back in canonical order regardless
/// of completion order.
std::vector<SuiteReport> run_all(std::uint64_t seed, const std::string& tier, int workers = 0);

/// Aggregate index document for a run_all batch.
std::string batch_index_json(const std::vector<SuiteReport>& reports, std::uint64_t seed,
                             const std::string& tier);

} // namespace racah

#endif
