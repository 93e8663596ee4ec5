#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/matrix.hpp"
#include "lrc/rational.hpp"

namespace lrc {

/// Row-independent generator matrix with its basic parameters.
struct LinearCode {
    FieldPtr field;
    Mat gen;  // k x n, reduced row echelon basis
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t raw_rows = 0;  // rows of the matrix handed to measure()

    bool injective() const { return k == raw_rows; }
};

/// Rank-reduce a raw evaluation matrix; k < raw row count means the
/// evaluation map was not injective (reported via injective()).
LinearCode measure(const Mat& raw);

LinearCode code_from_blueprint(const CodeBlueprint& bp);

struct DistanceResult {
    bool exact = false;
    std::uint64_t lo = 0;  // certified lower bound; lo == hi == d when exact
    std::uint64_t hi = 0;  // weight of the best witness found
    std::vector<FieldElement> witness;
    std::uint64_t enumerated = 0;
    std::string method;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;  // enumerated messages
inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;  // q^k threshold

/// Exact minimum distance by full projective codeword enumeration.
DistanceResult min_distance_exhaustive(const LinearCode& code);

/// Brouwer-Zimmermann search over greedily built disjoint information sets.
/// Stops early once the accrued lower bound (or external_lb) certifies the
/// best witness; returns a sound interval when the budget runs out.
DistanceResult min_distance_bz(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                               std::uint64_t external_lb = 0);

/// Dispatcher: exhaustive when q^k <= 10^7, Brouwer-Zimmermann otherwise.
DistanceResult min_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                            std::uint64_t external_lb = 0);

LinearCode dual_code(const LinearCode& code);

struct DualDistanceResult {
    DistanceResult dist;
    bool degenerate = false;  // dual of the full space: d reported as n+1
};
DualDistanceResult dual_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Locality/availability metadata attached to a code for recovery.
struct LRCProfile {
    std::vector<RecoveryStructure> structures;  // [0] is the primary one

    std::uint32_t r() const { return structures.at(0).r; }
    std::uint32_t rho() const { return structures.at(0).rho; }
    RecoveryMode mode() const { return structures.at(0).mode; }
    std::uint32_t availability() const { return static_cast<std::uint32_t>(structures.size()); }
};

LRCProfile profile_of(const CodeBlueprint& bp);

enum class OptClass { optimal, almost_optimal, defect_n };

/// Singleton-like bound audit: lhs = ceil(k/r) <= rhs = n-k-d+2.
struct BoundReport {
    std::size_t n = 0, k = 0;
    std::uint64_t d = 0;
    std::uint32_t r = 0;
    std::int64_t lhs = 0, rhs = 0, defect = 0;
    OptClass classification = OptClass::defect_n;
    bool almost_condition = false;  // (k+1)/r > n-(k+1)-d+2
    std::optional<std::int64_t> goppa_lower;
    bool distance_exact = true;
};

BoundReport bound_report(const LinearCode& code, std::uint32_t r, std::uint64_t exact_d,
                         std::optional<std::int64_t> goppa_lower = std::nullopt);

const char* to_string(OptClass c);

/// Codeword with erasures flagged out of band (0 is a legitimate symbol).
struct ErasableWord {
    std::vector<FieldElement> values;
    std::vector<bool> erased;

    static ErasableWord from_codeword(const std::vector<FieldElement>& w) {
        return {w, std::vector<bool>(w.size(), false)};
    }
};

struct RecoveryStep {
    std::size_t fibre = 0;
    RecoveryMode mode = RecoveryMode::interpolation;
    std::vector<FieldElement> nodes_used;
    std::string detail;  // interpolated polynomial or checksum description
};

struct RecoveryOutcome {
    std::vector<FieldElement> values;
    std::vector<RecoveryStep> trace;
};

/// Fill all erasures fibre by fibre; interpolation fits degree <= r-1
/// through surviving distinct-node pairs, checksum negates the fibre sum.
RecoveryOutcome recover(const ErasableWord& word, const LRCProfile& profile,
                        std::size_t structure = 0);

struct RecoveryCheck {
    bool pass = true;
    std::uint64_t words_checked = 0;
    std::uint64_t patterns_checked = 0;
    std::string counterexample;
};

/// Erase-then-recover over every structure: exhaustive over all codewords
/// and per-fibre patterns when q^k <= 10^5, randomized otherwise.
RecoveryCheck verify_recovery(const LinearCode& code, const LRCProfile& profile,
                              std::uint64_t randomized_trials = 10'000,
                              std::uint64_t seed = 0x5eed);

}  // namespace lrc
