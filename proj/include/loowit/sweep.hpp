#pragma once

#include <iosfwd>
#include <vector>

#include "loowit/criteria.hpp"

namespace loowit {

struct SweepRow {
    double a1 = 0.0;
    double a2 = 0.0;
    double ad = 0.0;
    Region analytic_region = Region::Invalid;
    double ppt_min_eig = 0.0;
    double oreduction_min_eig = 0.0;
    double realignment = 0.0;
    Region numeric_region = Region::Invalid;
    bool boundary = false;
};

struct SweepConfig {
    int d = 3;
    int grid = 100;
    double epsilon = 1e-3;
    double tol = kPsdTol;
    int threads = 1;
};

struct SweepSummary {
    std::vector<SweepRow> rows;
    int off_boundary = 0;
    int agreeing = 0;
    int bound_points = 0;  // analytic bound, off-boundary

    double agreement() const {
        return off_boundary == 0 ? 1.0 : static_cast<double>(agreeing) / off_boundary;
    }
};

/// Grid over a1 in [0, 1/(d-2)], a2 in [0, 1], keeping points with a_d >= 0.
/// Rows come back in grid order regardless of thread count.
SweepSummary run_sweep(const SweepConfig& config);

SweepRow sweep_point(int d, double a1, double a2, double epsilon, double tol);

/// LOOWIT_THREADS if set and positive, else hardware concurrency.
int default_threads();

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace loowit
