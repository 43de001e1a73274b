#include "snark/metrics.hpp"

#include "snark/errors.hpp"

namespace snark {

std::optional<double> f_weighted(double p, double r, double beta) {
    const double b2 = beta * beta;
    const double denom = b2 * p + r;
    if (denom <= 0.0) return std::nullopt;
    return (1.0 + b2) * p * r / denom;
}

EvalReport evaluate(const std::vector<Label>& predictions, const std::vector<Label>& gold,
                    double beta) {
    if (predictions.size() != gold.size())
        throw UsageError("evaluate: prediction/gold length mismatch (" +
                         std::to_string(predictions.size()) + " vs " +
                         std::to_string(gold.size()) + ")");
    EvalReport r;
    r.beta = beta;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        const bool pred_pos = predictions[i] == Label::Positive;
        const bool gold_pos = gold[i] == Label::Positive;
        if (pred_pos && gold_pos) ++r.tp;
        else if (pred_pos && !gold_pos) ++r.fp;
        else if (!pred_pos && gold_pos) ++r.fn;
        else ++r.tn;
    }
    if (r.tp + r.fp > 0) r.precision = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp);
    if (r.tp + r.fn > 0) r.recall = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn);
    if (r.precision && r.recall) r.f_weighted = f_weighted(*r.precision, *r.recall, beta);
    return r;
}

bool cell_better(const GridCell& lhs, const GridCell& rhs) {
    auto value = [](const std::optional<double>& v) { return v ? *v : -1.0; };
    const double lf = value(lhs.report.f_weighted), rf = value(rhs.report.f_weighted);
    if (lf != rf) return lf > rf;
    const double lp = value(lhs.report.precision), rp = value(rhs.report.precision);
    if (lp != rp) return lp > rp;
    if (lhs.params.theta2 != rhs.params.theta2) return lhs.params.theta2 > rhs.params.theta2;
    return lhs.params.theta1 > rhs.params.theta1;
}

GridResult run_grid(const std::function<std::vector<Label>(const ThresholdParams&)>& classify,
                    const std::vector<Label>& gold, const Grid& grid, double beta) {
    if (grid.theta1_values.empty() || grid.theta2_values.empty())
        throw UsageError("run_grid: grid must be non-empty");
    GridResult result;
    for (int t1 : grid.theta1_values) {
        for (double t2 : grid.theta2_values) {
            ThresholdParams p{t1, t2};
            GridCell cell{p, evaluate(classify(p), gold, beta)};
            result.cells.push_back(std::move(cell));
        }
    }
    for (std::size_t i = 1; i < result.cells.size(); ++i)
        if (cell_better(result.cells[i], result.cells[result.best_index]))
            result.best_index = i;
    return result;
}

}  // namespace snark
