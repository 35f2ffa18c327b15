#ifndef KOSZUL_HARNESS_HPP
#define KOSZUL_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "koszul/io.hpp"
#include "koszul/ring.hpp"
#include "koszul/scalars.hpp"

namespace koszul {

struct HarnessOptions {
    std::uint64_t seed = 1;
    /// Number of random cases; suites over fixed enumerations ignore it.
    std::optional<std::size_t> size;
    /// Scan windows reach this far past the bound under test.
    int slack = 2;
    FieldContext field;
    /// Adds wall time to the report, which makes it run-dependent.
    bool timing = false;
};

enum class Verdict { pass, violation, infeasible };
std::string to_string(Verdict v);

struct CaseRecord {
    std::size_t index = 0;
    Verdict verdict = Verdict::pass;
    Json detail;
};

struct SuiteReport {
    std::string suite;
    std::string statement;
    HarnessOptions options;
    std::string size_label;
    Json corpus;
    std::vector<CaseRecord> cases;
    /// Corpus-wide observations (probes only); omitted when null.
    Json findings;
    std::optional<double> wall_seconds;

    std::size_t count(Verdict v) const;
    Verdict verdict() const;
    /// 0 pass, 1 violation or candidate, 3 infeasible.
    int exit_code() const;
    Json to_json() const;
    std::string to_table() const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite and FieldError when the
/// field violates the suite's characteristic floor.
SuiteReport run_suite(const std::string& name, const HarnessOptions& options);

enum class CorpusShape { plain, artinian, borel, borel_artinian, low_dimension, positive_dimension };
std::string to_string(CorpusShape shape);

struct CorpusSpec {
    int n_min = 2;
    int n_max = 3;
    int max_degree = 3;
    int max_gens = 4;
    CorpusShape shape = CorpusShape::plain;

    Json to_json() const;
};

/// Random monomial ideal: an antichain of random monomials, then the
/// post-processing named by the shape.
MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusSpec& spec);

/// Per-case generator, independent of scheduling.
std::mt19937_64 case_rng(std::uint64_t seed, const std::string& suite, std::size_t index);

struct ProbeOptions {
    std::uint64_t seed = 1;
    std::size_t size = 30;
    int slack = 2;
    int max_t = 2;
    int n_max = 3;
    bool strongly_stable = false;
    FieldContext field;
    bool timing = false;
};

/// Capped scans of reg Z_t(I, S) against t(reg I + 1) on ideals with
/// dim S/I > 0. Any excess is a candidate, never a refutation.
SuiteReport probe_q1(const ProbeOptions& options);

} // namespace koszul

#endif // KOSZUL_HARNESS_HPP
