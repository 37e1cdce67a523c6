#include "loowit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace loowit {

SweepRow sweep_point(int d, double a1, double a2, double epsilon, double tol) {
    const FamilyParams p = family_special(d, a1, a2);
    SweepRow row;
    row.a1 = a1;
    row.a2 = a2;
    row.ad = p.a[d - 1];
    row.analytic_region = classify_family_point(d, a1, a2);
    const FamilyScalars s = family_scalars(p);
    row.ppt_min_eig = s.ppt_min;
    row.oreduction_min_eig = s.oreduction_min;
    row.realignment = s.realignment;
    row.numeric_region = numeric_region(s, tol);
    row.boundary = std::abs(a2 - a1) < epsilon || std::abs(row.ad - a1) < epsilon ||
                   std::abs(a2 * row.ad - a1 * a1) < epsilon;
    return row;
}

int default_threads() {
    if (const char* env = std::getenv("LOOWIT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SweepSummary run_sweep(const SweepConfig& config) {
    if (config.grid < 2) throw Error("sweep: grid resolution must be >= 2");
    if (config.d < 3) throw Error("sweep: d must be >= 3");
    const int d = config.d;
    const double a1_max = 1.0 / (d - 2);

    std::vector<std::pair<double, double>> points;
    for (int i = 0; i < config.grid; ++i) {
        const double a1 = a1_max * i / (config.grid - 1);
        for (int j = 0; j < config.grid; ++j) {
            const double a2 = static_cast<double>(j) / (config.grid - 1);
            if (1.0 - (d - 2) * a1 - a2 >= -1e-12) points.emplace_back(a1, a2);
        }
    }

    SweepSummary out;
    out.rows.resize(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < points.size(); k = next++) {
            out.rows[k] = sweep_point(d, points[k].first, points[k].second, config.epsilon,
                                      config.tol);
        }
    };
    const int threads = std::max(1, config.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (const auto& row : out.rows) {
        if (row.boundary) continue;
        ++out.off_boundary;
        if (row.analytic_region == row.numeric_region) ++out.agreeing;
        if (row.analytic_region == Region::Bound) ++out.bound_points;
    }
    return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "# loowit sweep v1\n";
    out << "a1,a2,a_d,analytic_region,ppt_min_eig,oreduction_min_eig,realignment,numeric_region,"
           "boundary_flag\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s,%.17g,%.17g,%.17g,%s,%d\n", r.a1,
                      r.a2, r.ad, to_string(r.analytic_region).c_str(), r.ppt_min_eig,
                      r.oreduction_min_eig, r.realignment, to_string(r.numeric_region).c_str(),
                      r.boundary ? 1 : 0);
        out << buf;
    }
}

}  // namespace loowit
