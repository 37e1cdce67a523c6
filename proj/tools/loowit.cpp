// loowit: entanglement detection with local orthogonal observables.
//
// Exit codes: 0 = ok / no entanglement detected, 2 = entanglement detected
// (check only), 1 = error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "loowit/builtin.hpp"
#include "loowit/criteria.hpp"
#include "loowit/loo.hpp"
#include "loowit/random.hpp"
#include "loowit/states.hpp"
#include "loowit/sweep.hpp"
#include "loowit/witness.hpp"

using namespace loowit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEntangled = 2;

struct CheckArgs {
    std::string builtin;
    std::string file;
    std::vector<std::string> transforms;
    bool json = false;
    bool no_search = false;
    std::uint64_t seed = 0;
    int budget = 200;
    double tol = kPsdTol;
    double tol_search = kSearchTol;
};

struct SweepArgs {
    int d = 3;
    int grid = 100;
    double epsilon = 1e-3;
    double tol = kPsdTol;
    int threads = 0;
    std::string out;
};

struct WitnessArgs {
    std::string spec;
    std::string state;
    std::string transform;
    std::string out;
    bool json = false;
};

struct LooArgs {
    int d = 3;
    bool print = false;
    std::uint64_t seed = 0;
};

BipartiteState resolve_state(const std::string& builtin, const std::string& file) {
    if (!builtin.empty() && !file.empty()) throw Error("use either --builtin or --file, not both");
    if (!builtin.empty()) return make_builtin_state(parse_builtin(builtin));
    if (!file.empty()) return load_state(file);
    throw Error("no input state: pass --builtin or --file");
}

std::string format_scalar(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

int run_check(const CheckArgs& args) {
    const BipartiteState state = resolve_state(args.builtin, args.file);
    ReportConfig config;
    config.tol = args.tol;
    config.tol_search = args.tol_search;
    config.budget = args.budget;
    config.seed = args.seed;
    config.run_search = !args.no_search;
    for (const auto& path : args.transforms) config.extra_transforms.emplace_back(path, load_transform(path));
    if (!args.builtin.empty()) {
        const BuiltinSpec spec = parse_builtin(args.builtin);
        if (spec.name == "horodecki") config.witnesses.push_back(horodecki_ew(spec.get_double("a")).witness);
    }
    const FullReport report = full_report(state, config);

    if (args.json) {
        nlohmann::json j = full_report_to_json(report);
        j["state"] = state.label();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "state: " << (state.label().empty() ? "<file>" : state.label()) << " ("
                  << state.dims().a << "x" << state.dims().b << ")\n";
        for (const auto& c : report.criteria) {
            std::cout << "  " << std::left << std::setw(24) << c.criterion << std::setw(14)
                      << to_string(c.verdict) << format_scalar(c.scalar);
            if (c.params.contains("name")) std::cout << "  [" << c.params["name"].get<std::string>() << "]";
            std::cout << '\n';
        }
        std::cout << "verdict: " << (report.entangled ? "entangled" : "no entanglement detected")
                  << '\n';
    }
    return report.entangled ? kExitEntangled : kExitOk;
}

int run_sweep_cmd(const SweepArgs& args) {
    SweepConfig config;
    config.d = args.d;
    config.grid = args.grid;
    config.epsilon = args.epsilon;
    config.tol = args.tol;
    config.threads = args.threads > 0 ? args.threads : default_threads();
    const SweepSummary summary = run_sweep(config);

    std::ostream* sink = &std::cout;
    std::ofstream file;
    if (!args.out.empty()) {
        file.open(args.out);
        if (!file) throw Error("cannot write " + args.out);
        sink = &file;
    }
    write_sweep_csv(*sink, summary.rows);
    std::ostream& log = args.out.empty() ? std::cerr : std::cout;
    log << "points: " << summary.rows.size() << ", off-boundary: " << summary.off_boundary
        << ", bound (off-boundary): " << summary.bound_points << '\n';
    log << "agreement: " << std::fixed << std::setprecision(2) << 100.0 * summary.agreement()
        << "%\n";
    return kExitOk;
}

int run_witness(const WitnessArgs& args) {
    Witness w;
    const BuiltinSpec spec = parse_builtin(args.spec);
    if (spec.name == "generic") {
        if (args.transform.empty()) throw Error("generic witness needs --transform");
        w = ew_from_transform(load_transform(args.transform));
    } else {
        w = make_builtin_witness(spec);
    }
    std::optional<double> value;
    if (!args.state.empty()) {
        const std::string prefix = "builtin:";
        const BipartiteState s = args.state.rfind(prefix, 0) == 0
                                     ? make_builtin_state(parse_builtin(args.state.substr(prefix.size())))
                                     : load_state(args.state);
        value = expectation(w, s);
    }

    nlohmann::json j = witness_to_json(w);
    if (value) j["expectation"] = *value;
    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) throw Error("cannot write " + args.out);
        out << j.dump(1) << '\n';
    }
    if (args.json) {
        nlohmann::json summary = j;
        summary.erase("re");
        summary.erase("im");
        std::cout << summary.dump(2) << '\n';
    } else {
        std::cout << "witness: " << to_string(w.kind) << ' ' << w.params.dump() << '\n';
        std::cout << "min eigenvalue: " << format_scalar(w.min_eigenvalue) << '\n';
        std::cout << "status: " << (w.candidate_only ? "candidate" : "confirmed witness") << '\n';
        if (value) std::cout << "expectation: " << format_scalar(*value) << '\n';
    }
    return kExitOk;
}

int run_loo_validate(const LooArgs& args) {
    if (args.d < 2 || args.d > 16) throw Error("loo-validate: d must lie in [2, 16]");
    const int d = args.d;
    const int n = d * d;
    const auto start = std::chrono::steady_clock::now();
    const LooBasis s = standard_basis(d);
    const LooBasis st = transpose_basis(s);

    Rng rng(args.seed);
    const CMatrix probe = gaussian_complex(d, d, rng);

    CMatrix sum_t = CMatrix::Zero(n, n), sum_plain = CMatrix::Zero(n, n);
    for (int mu = 0; mu < n; ++mu) {
        sum_t += kron(s[mu], st[mu]);
        sum_plain += kron(s[mu], s[mu]);
    }
    const CVector ph = phi(d);
    CMatrix swap = CMatrix::Zero(n, n);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) swap(a * d + b, b * d + a) = 1.0;

    const CMatrix u = random_unitary(d, rng);
    const OrthTransform ou = unitary_transform(u);
    const LooBasis via_o = apply_orthogonal(s, ou);
    const LooBasis via_u = conjugate_basis(s, u);
    double conj_dev = 0.0;
    for (int mu = 0; mu < n; ++mu) conj_dev = std::max(conj_dev, max_abs(via_o[mu] - via_u[mu]));
    const RMatrix& om = ou.matrix();

    double tt_dev = 0.0;
    const LooBasis stt = transpose_basis(st);
    for (int mu = 0; mu < n; ++mu) tt_dev = std::max(tt_dev, max_abs(stt[mu] - s[mu]));

    const double det_t = transpose_transform(d).matrix().determinant();
    const double det_u = om.determinant();

    std::cout << std::scientific << std::setprecision(3);
    std::cout << "d = " << d << '\n';
    std::cout << "gram deviation                  " << s.gram_deviation() << '\n';
    std::cout << "transposed gram deviation       " << st.gram_deviation() << '\n';
    std::cout << "completeness deviation          " << s.completeness_deviation(probe) << '\n';
    std::cout << "sum L(x)L^T - |Phi><Phi|        " << max_abs(sum_t - ph * ph.adjoint()) << '\n';
    std::cout << "sum L(x)L - SWAP                " << max_abs(sum_plain - swap) << '\n';
    std::cout << "transpose involution            " << tt_dev << '\n';
    std::cout << "unitary O orthogonality         "
              << (om * om.transpose() - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff() << '\n';
    std::cout << "unitary O vs conjugation        " << conj_dev << '\n';
    std::cout << std::fixed << std::setprecision(6);
    std::cout << "det(transpose O)                " << det_t << '\n';
    std::cout << "det(unitary O)                  " << det_u << '\n';
    if (args.print) {
        std::cout << std::setprecision(6);
        for (int mu = 0; mu < n; ++mu) {
            std::cout << "L" << mu + 1 << " =\n";
            for (int i = 0; i < d; ++i) {
                std::cout << "  ";
                for (int j = 0; j < d; ++j) {
                    const cplx v = s[mu](i, j);
                    std::cout << std::showpos << v.real() << v.imag() << "i " << std::noshowpos;
                }
                std::cout << '\n';
            }
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "elapsed " << std::setprecision(3) << elapsed << " s\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loowit: entanglement detection with local orthogonal observables"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Run every separability criterion on a state");
    check_cmd->add_option("--builtin", check.builtin, "Builtin state, e.g. horodecki:a=0.5");
    check_cmd->add_option("--file", check.file, "State JSON file");
    check_cmd->add_option("--transform", check.transforms, "Extra O-reduction transform JSON");
    check_cmd->add_flag("--json", check.json, "Emit JSON");
    check_cmd->add_flag("--no-search", check.no_search, "Skip the correlation-matrix search");
    check_cmd->add_option("--seed", check.seed, "Search seed");
    check_cmd->add_option("--budget", check.budget, "Search restarts")->check(CLI::PositiveNumber);
    check_cmd->add_option("--tol", check.tol, "PSD tolerance for algebraic criteria");
    check_cmd->add_option("--tol-search", check.tol_search, "Tolerance for the searched criterion");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the family phase diagram to CSV");
    sweep_cmd->add_option("--d", sweep.d, "Local dimension (>= 3)");
    sweep_cmd->add_option("--grid", sweep.grid, "Grid resolution per axis")->check(CLI::Range(2, 100000));
    sweep_cmd->add_option("--epsilon", sweep.epsilon, "Boundary band width");
    sweep_cmd->add_option("--tol", sweep.tol, "PSD tolerance");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (default LOOWIT_THREADS)");
    sweep_cmd->add_option("--out", sweep.out, "CSV output path (default stdout)");

    WitnessArgs witness;
    auto* witness_cmd = app.add_subcommand("witness", "Build a witness and optionally evaluate it");
    witness_cmd->add_option("spec", witness.spec, "horodecki:a=.. | perm:cycle,d=..,l=.. | perm:sigma=.. | generic")
        ->required();
    witness_cmd->add_option("--state", witness.state, "builtin:<spec> or state JSON file");
    witness_cmd->add_option("--transform", witness.transform, "Transform JSON for generic witnesses");
    witness_cmd->add_option("--out", witness.out, "Write witness JSON here");
    witness_cmd->add_flag("--json", witness.json, "Emit JSON summary");

    LooArgs loo;
    auto* loo_cmd = app.add_subcommand("loo-validate", "Check LOO basis invariants");
    loo_cmd->add_option("--d,d", loo.d, "Local dimension in [2, 16]");
    loo_cmd->add_flag("--print", loo.print, "Print the standard basis");
    loo_cmd->add_option("--seed", loo.seed, "Seed for the random probes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*check_cmd) return run_check(check);
        if (*sweep_cmd) return run_sweep_cmd(sweep);
        if (*witness_cmd) return run_witness(witness);
        if (*loo_cmd) return run_loo_validate(loo);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
