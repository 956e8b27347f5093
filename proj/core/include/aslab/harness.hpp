#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aslab/norms.hpp"
#include "aslab/rational.hpp"

namespace aslab {

// ---- finite metric nets ----------------------------------------------------

// Finite labeled metric space given by an explicit rational distance table.
struct MetricTable {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> dist;  // symmetric, zero diagonal, triangle-valid

    std::size_t size() const { return labels.size(); }
    void validate() const;
};

// For f : G -> G with f(G) inside a compact (here: finite) K, the set
// H = {x : d(x, f(x)) <= delta} carries a finite 4delta-net built by lifting
// a delta-net of K through eta/nu. Returns indices into the table.
struct NetResult {
    std::vector<std::size_t> H;
    std::vector<std::size_t> net;  // subset of H
};
NetResult build_4delta_net(const MetricTable& table, const std::vector<std::size_t>& f,
                           const std::vector<std::size_t>& K, const Rational& delta);

// ---- verification suites ----------------------------------------------------

struct SuiteConfig {
    std::string suite;
    std::vector<Rational> thetas = {Rational(1, 2)};
    std::vector<unsigned> qs = {1};
    int trials = 100;
    std::uint64_t seed = 42;
    int precision_cap = 256;
    int support_cap = 40;
    bool long_mode = false;      // enables l = 2 in prop73ii
    bool inject_canary = false;  // adds the deliberately false case to ball-membership
    int jobs = 1;                // parallel case evaluation

    void validate() const;
};

enum class Verdict { PassCertified, FailCertified, Undecided };

struct CaseRecord {
    std::size_t index = 0;
    std::string statement;    // which inequality/identity this case checks
    std::string inputs;       // compact human-readable instance description
    Verdict verdict = Verdict::Undecided;
    std::string counterexample;  // replayable description, for fail-certified
};

struct Report {
    std::string suite;
    std::string version;
    std::string config_echo;
    std::vector<CaseRecord> cases;
    std::size_t passed = 0, failed = 0, undecided = 0;

    int exit_code() const { return failed > 0 ? 1 : (undecided > 0 ? 2 : 0); }
};

const std::vector<std::string>& suite_names();

// Deterministic given (suite, config, seed); cases may evaluate in parallel,
// records are ordered by case index.
Report run_suite(const SuiteConfig& config);

enum class ReportFormat { Json, Tsv };

// Byte-reproducible serialization for identical (config, seed, version):
// stable field order, rationals as string pairs, no wall-clock content.
std::string emit_report(const Report& report, ReportFormat format);

}  // namespace aslab
