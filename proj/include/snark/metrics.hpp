#ifndef SNARK_METRICS_HPP
#define SNARK_METRICS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snark/corpus.hpp"

namespace snark {

// Frequency floor (theta1) and reliability floor (theta2) a signal must meet
// before a classifier may count it. Shared by the cue and pattern models;
// comparisons are inclusive so theta2 = 1.00 is satisfiable.
struct ThresholdParams {
    int theta1 = 2;
    double theta2 = 0.55;
    bool operator==(const ThresholdParams&) const = default;
};

struct Grid {
    std::vector<int> theta1_values{2, 4, 6, 8, 10};
    std::vector<double> theta2_values{0.55, 0.60, 0.65, 0.70, 0.75,
                                      0.80, 0.85, 0.90, 0.95, 1.00};
};

// Undefined ratios stay absent rather than collapsing to 0, so grid search
// cannot silently prefer degenerate cells.
struct EvalReport {
    long tp = 0;
    long fp = 0;
    long tn = 0;
    long fn = 0;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f_weighted;
    double beta = 0.5;
};

// (1+beta^2)*p*r / (beta^2*p + r); absent when p = r = 0.
std::optional<double> f_weighted(double p, double r, double beta);

EvalReport evaluate(const std::vector<Label>& predictions, const std::vector<Label>& gold,
                    double beta);

struct GridCell {
    ThresholdParams params;
    EvalReport report;
};

struct GridResult {
    std::vector<GridCell> cells;  // theta1-major, theta2-minor, in grid order
    std::size_t best_index = 0;
};

// True when lhs beats rhs under the tie-break order: F desc, then precision
// desc, then theta2 desc, then theta1 desc. Absent values lose to present ones.
bool cell_better(const GridCell& lhs, const GridCell& rhs);

GridResult run_grid(const std::function<std::vector<Label>(const ThresholdParams&)>& classify,
                    const std::vector<Label>& gold, const Grid& grid, double beta);

}  // namespace snark

#endif
