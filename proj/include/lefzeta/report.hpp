#pragma once

#include "lefzeta/criteria.hpp"
#include "lefzeta/space_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefzeta {

struct AnalysisOptions {
    // How many iterates L(f^k) to report; defaults to max(10, total dimension).
    std::optional<int> max_power;
    // Decide the verdict along this branch instead of the recognized shape.
    std::optional<ShapeKind> forced_mode;
};

struct AnalysisReport {
    std::string space;
    ShapeInfo shape;
    std::vector<int> betti;
    int total_dimension = 0;
    int horizon = 0;                 // the printed sequence runs k = 1..horizon
    std::vector<Rational> lefschetz; // L(f^1), ..., L(f^horizon)
    RationalFunction zeta;
    bool lppf = false;
    std::optional<LppfClassification> classification; // extended shapes only
    EigenSummary eigen;
    Verdict verdict;
};

// Runs the full pipeline and cross-checks the answers against each other
// (zeta == 1 versus the vanishing of L(f^k) through the total dimension, and
// the log-derivative series against the Lefschetz numbers); a disagreement
// is an internal failure, not a report.
AnalysisReport analyze(const RingEndomorphism& f, const AnalysisOptions& options = {});

std::string render_text(const AnalysisReport& r);
std::string render_json(const AnalysisReport& r);

struct RecognizeReport {
    std::string space;
    std::vector<int> betti;
    std::optional<ShapeInfo> shape;                // when a presentation was given
    std::optional<BettiExteriorCheck> betti_check; // when only a profile was given
};

RecognizeReport recognize_space(const SpaceFile& file);

std::string render_text(const RecognizeReport& r);
std::string render_json(const RecognizeReport& r);

} // namespace lefzeta
