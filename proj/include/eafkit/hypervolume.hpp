#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eafkit/attainment.hpp"
#include "eafkit/pareto.hpp"

namespace eafkit {

/// Collects non-fatal diagnostics (e.g. points clipped out of the reference box).
struct WarningLog {
    std::vector<std::string> messages;

    void add(std::string message) { messages.push_back(std::move(message)); }
    bool empty() const noexcept { return messages.empty(); }
};

/// Spread statistic used for the half-width of HV bands.
enum class BandStatistic {
    StandardError,      // sample std (divisor S-1) / sqrt(S)
    StandardDeviation,  // sample std (divisor S-1)
};

struct HvConfig {
    /// Reference point in the caller's orientation; must be finite, M = 2.
    ObjectivePoint ref_point;
    /// Needed only for normalized HV. Caller's orientation.
    std::optional<ObjectiveSet> true_pareto_front;
    TransformSpec transform;
    BandStatistic band_statistic = BandStatistic::StandardError;
};

/// HV of the first n observations of every run, plus cross-run band statistics.
struct HvTraceSet {
    std::vector<std::vector<double>> traces;  // [run][step]
    std::vector<double> center;               // mean over runs
    std::vector<double> band_halfwidth;       // see statistic
    BandStatistic statistic = BandStatistic::StandardError;

    std::size_t runs() const noexcept { return traces.size(); }
    std::size_t steps() const noexcept { return center.size(); }

    friend bool operator==(const HvTraceSet&, const HvTraceSet&) = default;
};

/// Exact area dominated by `front` and strictly dominating `ref`, both in
/// minimize-all orientation. Points outside the open reference box are
/// dropped with a warning; unsorted or dominated input is handled.
/// Throws ValidationError for a non-finite ref, UnsupportedDimension for M != 2.
double hypervolume_2d(const ObjectiveSet& front, const ObjectivePoint& ref, WarningLog* warnings = nullptr);

/// HV after mapping each objective affinely so the true front's minimum goes
/// to 0 and the reference point to 1. All inputs in minimize-all orientation.
/// Throws ConfigurationError without a true front and ValidationError when
/// the reference point does not exceed the true-front minimum.
double normalized_hypervolume_2d(const ObjectiveSet& front, const HvConfig& config,
                                 WarningLog* warnings = nullptr);

/// Per-run HV-over-evaluations curves from raw costs in the caller's
/// orientation; `config.transform` negates maximized objectives (ref point
/// and true front included) before any geometry.
HvTraceSet hv_over_time(const RunTensor& costs, const HvConfig& config, bool normalize,
                        WarningLog* warnings = nullptr);

/// Fills center and band_halfwidth from traces. Throws ContractViolation for
/// ragged traces.
HvTraceSet summarize_traces(std::vector<std::vector<double>> traces,
                            BandStatistic statistic = BandStatistic::StandardError);

}  // namespace eafkit
