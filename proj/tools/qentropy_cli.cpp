#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qentropy/conjecture.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/quadrature.hpp"
#include "qentropy/specfun.hpp"
#include "qentropy/systems.hpp"
#include "qentropy/thermo.hpp"
#include "qentropy/uncertainty.hpp"
#include "qentropy/verify.hpp"

namespace {

namespace entropy = qentropy::entropy;
namespace systems = qentropy::systems;
namespace uncertainty = qentropy::uncertainty;
namespace conjecture = qentropy::conjecture;
namespace thermo = qentropy::thermo;
namespace verify = qentropy::verify;
namespace quad = qentropy::quad;

constexpr const char* kVersion = "1.0.0";
constexpr const char* kHeader =
    "system,n,space,kind,alpha,beta,value,path,abs_err,status";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergent = 3;

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    if (std::strcmp(buf, "-0") == 0) return "0";
    return buf;
}

struct Row {
    std::string system;
    long n = 0;
    std::string space;
    std::string kind;
    double alpha = std::numeric_limits<double>::quiet_NaN();
    std::optional<double> beta;
    double value = std::numeric_limits<double>::quiet_NaN();
    std::string path;
    std::optional<double> abs_err;
    std::string status = "OK";
};

std::string csv_line(const Row& r) {
    std::string line;
    line += r.system;
    line += ',';
    line += std::to_string(r.n);
    line += ',';
    line += r.space;
    line += ',';
    line += r.kind;
    line += ',';
    line += fmt(r.alpha);
    line += ',';
    if (r.beta) line += fmt(*r.beta);
    line += ',';
    line += fmt(r.value);
    line += ',';
    line += r.path;
    line += ',';
    if (r.abs_err) line += fmt(*r.abs_err);
    line += ',';
    line += r.status;
    return line;
}

nlohmann::ordered_json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

nlohmann::ordered_json json_row(const Row& r) {
    nlohmann::ordered_json j;
    j["system"] = r.system;
    j["n"] = r.n;
    j["space"] = r.space;
    j["kind"] = r.kind;
    j["alpha"] = json_number(r.alpha);
    j["beta"] = r.beta ? json_number(*r.beta) : nlohmann::ordered_json(nullptr);
    j["value"] = json_number(r.value);
    j["path"] = r.path;
    j["abs_err"] =
        r.abs_err ? json_number(*r.abs_err) : nlohmann::ordered_json(nullptr);
    j["status"] = r.status;
    return j;
}

const char* path_name(entropy::Path p) {
    switch (p) {
        case entropy::Path::ClosedForm: return "closed";
        case entropy::Path::Quadrature: return "quadrature";
        case entropy::Path::Limit: return "limit";
    }
    return "";
}

const char* space_name(systems::Space sp) {
    return sp == systems::Space::Position ? "position" : "momentum";
}

struct Options {
    std::string system = "ho";
    std::string n_range;
    std::string alpha_spec = "1:1:1";
    std::string space = "both";
    std::string kind = "renyi";
    std::string spacing = "linear";
    double scale = 1.0;
    double rel_tol = -1.0;
    int jobs = 1;
    std::string format = "csv";
    std::string out;
    bool find_max = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

systems::Family parse_family(const std::string& name) {
    if (name == "ho") return systems::Family::HarmonicOscillator;
    if (name == "robin") return systems::Family::RobinWall;
    if (name == "q1d") return systems::Family::Q1DHydrogen;
    if (name == "neumann") return systems::Family::NeumannWell;
    if (name == "dirichlet") return systems::Family::DirichletWell;
    throw UsageError("unknown system '" + name +
                     "' (expected ho, robin, q1d, neumann, dirichlet)");
}

unsigned default_n(systems::Family f) {
    switch (f) {
        case systems::Family::HarmonicOscillator:
        case systems::Family::NeumannWell: return 0;
        default: return 1;
    }
}

std::vector<unsigned> parse_n_range(const std::string& spec,
                                    systems::Family family) {
    if (spec.empty()) return {default_n(family)};
    long lo = 0, hi = 0;
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stol(spec);
        } else {
            lo = std::stol(spec.substr(0, dots));
            hi = std::stol(spec.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw UsageError("bad quantum-number range '" + spec + "'");
    }
    if (lo < 0 || hi < lo)
        throw UsageError("bad quantum-number range '" + spec + "'");
    std::vector<unsigned> ns;
    for (long n = lo; n <= hi; ++n) ns.push_back(static_cast<unsigned>(n));
    return ns;
}

std::vector<double> parse_alpha_grid(const std::string& spec,
                                     const std::string& spacing) {
    if (spec == "inf")
        return {std::numeric_limits<double>::infinity()};
    double lo = 0.0, hi = 0.0;
    int count = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3)
        throw UsageError("bad alpha grid '" + spec +
                         "' (expected MIN:MAX:COUNT or inf)");
    if (count < 1 || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
        throw UsageError("bad alpha grid '" + spec + "'");
    if (count == 1) return {lo};
    std::vector<double> grid(count);
    if (spacing == "linear") {
        for (int i = 0; i < count; ++i)
            grid[i] = lo + (hi - lo) * i / (count - 1);
    } else if (spacing == "log") {
        if (lo <= 0.0) throw UsageError("log spacing needs positive orders");
        for (int i = 0; i < count; ++i)
            grid[i] = lo * std::exp(std::log(hi / lo) * i / (count - 1));
    } else if (spacing == "inverse") {
        if (lo <= 0.0)
            throw UsageError("inverse spacing needs positive orders");
        const double ilo = 1.0 / lo, ihi = 1.0 / hi;
        for (int i = 0; i < count; ++i)
            grid[i] = 1.0 / (ilo + (ihi - ilo) * i / (count - 1));
    } else {
        throw UsageError("unknown spacing '" + spacing + "'");
    }
    return grid;
}

std::vector<systems::Space> parse_spaces(const std::string& spec) {
    if (spec == "position") return {systems::Space::Position};
    if (spec == "momentum") return {systems::Space::Momentum};
    if (spec == "both")
        return {systems::Space::Position, systems::Space::Momentum};
    throw UsageError("unknown space '" + spec + "'");
}

double resolve_rel_tol(const Options& opt) {
    if (opt.rel_tol >= 0.0) return opt.rel_tol;
    if (std::getenv("QENTROPY_REL_TOL") != nullptr) return 0.0;
    return 1e-8;
}

void run_tasks(std::vector<std::function<void()>>& tasks, int jobs) {
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int width =
        std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1));
    pool.reserve(width);
    for (int i = 0; i < width; ++i)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= tasks.size()) return;
                tasks[k]();
            }
        });
    for (auto& th : pool) th.join();
}

int emit(const std::vector<Row>& rows, const Options& opt,
         const std::string& subcommand) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!opt.out.empty()) {
        file.open(opt.out);
        if (!file) throw UsageError("cannot open output file " + opt.out);
        os = &file;
    }
    if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["metadata"] = {{"tool", "qentropy"},
                           {"version", kVersion},
                           {"subcommand", subcommand},
                           {"rel_tol", resolve_rel_tol(opt)}};
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) doc["rows"].push_back(json_row(r));
        *os << doc.dump(2) << '\n';
    } else if (opt.format == "csv") {
        *os << kHeader << '\n';
        for (const auto& r : rows) *os << csv_line(r) << '\n';
    } else {
        throw UsageError("unknown format '" + opt.format + "'");
    }
    for (const auto& r : rows)
        if (r.status == "NONCONV") return kExitNonConvergent;
    return kExitOk;
}

entropy::EntropyKind parse_kind(const std::string& kind) {
    if (kind == "renyi") return entropy::EntropyKind::Renyi;
    if (kind == "tsallis") return entropy::EntropyKind::Tsallis;
    if (kind == "shannon") return entropy::EntropyKind::Shannon;
    if (kind == "onicescu") return entropy::EntropyKind::Onicescu;
    throw UsageError("unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------- entropy

void fill_entropy_row(Row& row, const systems::SystemDescriptor& sys,
                      systems::Space sp, entropy::EntropyKind kind,
                      double alpha, double rel) {
    double order = alpha;
    if (kind == entropy::EntropyKind::Renyi ||
        kind == entropy::EntropyKind::Tsallis) {
        const auto th = entropy::threshold(sys, sp);
        if (th.divergence != entropy::Divergence::None &&
            std::isfinite(alpha) &&
            std::fabs(alpha - th.alpha_threshold) < 1e-12) {
            order = th.alpha_threshold + 1e-9;
            row.status = "CLAMPED";
        }
    }
    try {
        entropy::EntropyResult res;
        switch (kind) {
            case entropy::EntropyKind::Renyi:
                res = entropy::renyi(sys, sp, order, rel);
                break;
            case entropy::EntropyKind::Tsallis:
                res = entropy::tsallis(sys, sp, order, rel);
                break;
            case entropy::EntropyKind::Shannon:
                res = entropy::shannon(sys, sp, rel);
                break;
            case entropy::EntropyKind::Onicescu:
            default:
                res = entropy::onicescu(sys, sp, rel);
                break;
        }
        row.value = res.value;
        row.path = path_name(res.path);
        row.abs_err = res.abs_error;
    } catch (const entropy::DivergentEntropy&) {
        row.status = "DIVERGENT";
    } catch (const std::domain_error&) {
        row.status = "DIVERGENT";
    } catch (const quad::NonConvergent&) {
        row.status = "NONCONV";
    }
}

int cmd_entropy(const Options& opt) {
    const auto family = parse_family(opt.system);
    const auto ns = parse_n_range(opt.n_range, family);
    const auto spaces = parse_spaces(opt.space);
    const auto kind = parse_kind(opt.kind);
    const bool gridless = kind == entropy::EntropyKind::Shannon ||
                          kind == entropy::EntropyKind::Onicescu;
    std::vector<double> grid;
    if (gridless)
        grid = {kind == entropy::EntropyKind::Shannon ? 1.0 : 2.0};
    else
        grid = parse_alpha_grid(opt.alpha_spec, opt.spacing);
    if (!std::isfinite(grid.front()) && kind != entropy::EntropyKind::Renyi)
        throw UsageError("infinite order is only defined for renyi");
    const double rel = resolve_rel_tol(opt);

    std::vector<Row> rows;
    for (const unsigned n : ns) {
        const systems::SystemDescriptor sys{family, n, opt.scale};
        systems::validate(sys);
        for (const auto sp : spaces)
            for (const double a : grid) {
                Row row;
                row.system = opt.system;
                row.n = n;
                row.space = space_name(sp);
                row.kind = opt.kind;
                row.alpha = a;
                rows.push_back(row);
            }
    }
    std::vector<std::function<void()>> tasks;
    tasks.reserve(rows.size());
    std::size_t idx = 0;
    for (const unsigned n : ns) {
        const systems::SystemDescriptor sys{family, n, opt.scale};
        for (const auto sp : spaces)
            for (const double a : grid) {
                Row* row = &rows[idx++];
                tasks.push_back([row, sys, sp, kind, a, rel] {
                    fill_entropy_row(*row, sys, sp, kind, a, rel);
                });
            }
    }
    run_tasks(tasks, opt.jobs);
    return emit(rows, opt, "entropy");
}

// ------------------------------------------------------------ uncertainty

int cmd_uncertainty(const Options& opt) {
    const auto family = parse_family(opt.system);
    const auto ns = parse_n_range(opt.n_range, family);
    const double rel = resolve_rel_tol(opt);
    std::vector<Row> rows;

    if (opt.find_max) {
        for (const unsigned n : ns) {
            const systems::SystemDescriptor sys{family, n, opt.scale};
            systems::validate(sys);
            const auto m = uncertainty::find_sum_maximum(sys, rel);
            Row row;
            row.system = opt.system;
            row.n = n;
            row.kind = "sum-max";
            row.alpha = m.alpha;
            row.beta = entropy::conjugate_beta(m.alpha);
            row.value = m.value;
            row.status = m.unbounded ? "UNBOUNDED" : "OK";
            rows.push_back(row);
        }
        return emit(rows, opt, "uncertainty");
    }

    const auto grid = parse_alpha_grid(opt.alpha_spec, opt.spacing);
    struct Cell {
        uncertainty::UncertaintyReport rep{};
        bool ok = false;
        std::string status = "OK";
    };
    std::vector<Cell> cells(ns.size() * grid.size());
    std::vector<std::function<void()>> tasks;
    std::size_t idx = 0;
    for (const unsigned n : ns) {
        const systems::SystemDescriptor sys{family, n, opt.scale};
        systems::validate(sys);
        for (const double a : grid) {
            Cell* cell = &cells[idx++];
            tasks.push_back([cell, sys, a, rel] {
                try {
                    cell->rep = uncertainty::renyi_relation(sys, a, rel);
                    cell->ok = true;
                } catch (const entropy::DivergentEntropy&) {
                    cell->status = "DIVERGENT";
                } catch (const std::domain_error&) {
                    cell->status = "DIVERGENT";
                } catch (const quad::NonConvergent&) {
                    cell->status = "NONCONV";
                }
            });
        }
    }
    run_tasks(tasks, opt.jobs);

    idx = 0;
    for (const unsigned n : ns)
        for (const double a : grid) {
            const Cell& cell = cells[idx++];
            Row base;
            base.system = opt.system;
            base.n = n;
            base.alpha = a;
            if (cell.ok) base.beta = cell.rep.beta;
            for (const char* kind : {"renyi-sum", "bound", "gap"}) {
                Row row = base;
                row.kind = kind;
                row.status = cell.status;
                if (cell.ok) {
                    if (std::strcmp(kind, "renyi-sum") == 0)
                        row.value = cell.rep.lhs;
                    else if (std::strcmp(kind, "bound") == 0)
                        row.value = cell.rep.rhs;
                    else {
                        row.value = cell.rep.gap;
                        if (cell.rep.saturated) row.status = "SATURATED";
                    }
                }
                rows.push_back(row);
            }
        }
    return emit(rows, opt, "uncertainty");
}

// ----------------------------------------------------------- tsallis-check

int cmd_tsallis_check(const Options& opt) {
    const auto family = parse_family(opt.system);
    const auto ns = parse_n_range(opt.n_range, family);
    const auto grid = parse_alpha_grid(opt.alpha_spec, opt.spacing);
    const double rel = resolve_rel_tol(opt);
    std::vector<Row> rows;
    for (const unsigned n : ns) {
        const systems::SystemDescriptor sys{family, n, opt.scale};
        systems::validate(sys);
        for (const double a : grid) {
            Row base;
            base.system = opt.system;
            base.n = n;
            base.alpha = a;
            try {
                const auto rep = uncertainty::tsallis_relation(sys, a, rel);
                base.beta = rep.beta;
                for (const char* kind :
                     {"tsallis-lhs", "tsallis-rhs", "tsallis-gap"}) {
                    Row row = base;
                    row.kind = kind;
                    if (std::strcmp(kind, "tsallis-lhs") == 0)
                        row.value = rep.lhs;
                    else if (std::strcmp(kind, "tsallis-rhs") == 0)
                        row.value = rep.rhs;
                    else {
                        row.value = rep.gap;
                        row.status = rep.saturated    ? "SATURATED"
                                     : rep.satisfied ? "OK"
                                                     : "VIOLATED";
                    }
                    rows.push_back(row);
                }
            } catch (const entropy::DivergentEntropy&) {
                base.kind = "tsallis-gap";
                base.status = "DIVERGENT";
                rows.push_back(base);
            } catch (const std::domain_error&) {
                base.kind = "tsallis-gap";
                base.status = "DIVERGENT";
                rows.push_back(base);
            } catch (const quad::NonConvergent&) {
                base.kind = "tsallis-gap";
                base.status = "NONCONV";
                rows.push_back(base);
            }
        }
    }
    return emit(rows, opt, "tsallis-check");
}

// ------------------------------------------------------------- conjecture

int cmd_conjecture(const Options& opt, int points) {
    const auto family = parse_family(opt.system);
    const auto ns = parse_n_range(opt.n_range, family);
    if (ns.size() != 1)
        throw UsageError("conjecture runs on a single ground state");
    const systems::SystemDescriptor sys{family, ns.front(), opt.scale};
    const auto tr =
        conjecture::conjecture_scan(sys, points, resolve_rel_tol(opt));
    std::vector<Row> rows;
    for (std::size_t j = 0; j < tr.alphas.size(); ++j) {
        Row sum;
        sum.system = opt.system;
        sum.n = sys.quantum_number;
        sum.kind = "renyi-sum";
        sum.alpha = tr.alphas[j];
        sum.beta = entropy::conjugate_beta(tr.alphas[j]);
        sum.value = tr.renyi_sums[j];
        sum.status = tr.point_ok[j] ? "OK" : "FAILED";
        rows.push_back(sum);
        Row gap = sum;
        gap.kind = "tsallis-gap";
        gap.value = tr.tsallis_gaps[j];
        rows.push_back(gap);
    }
    Row ex;
    ex.system = opt.system;
    ex.n = sys.quantum_number;
    ex.kind = "extrapolated-sum";
    ex.alpha = 0.5;
    ex.value = tr.extrapolated_limit;
    rows.push_back(ex);
    ex.kind = "extrapolated-gap";
    ex.value = tr.extrapolated_gap;
    rows.push_back(ex);
    ex.kind = "sum-target";
    ex.value = tr.renyi_target;
    rows.push_back(ex);
    return emit(rows, opt, "conjecture");
}

// ----------------------------------------------------------------- thermo

Row discrete_row(const char* kind, double alpha, double value) {
    Row row;
    row.system = "discrete";
    row.kind = kind;
    row.alpha = alpha;
    row.value = value;
    return row;
}

int cmd_thermo_entropy(const Options& opt, const std::vector<double>& probs,
                       double alpha) {
    const thermo::DiscreteDistribution dist{probs};
    const double value =
        thermo::discrete_entropy(dist, parse_kind(opt.kind), alpha);
    std::vector<Row> rows{discrete_row(opt.kind.c_str(), alpha, value)};
    rows.back().n = static_cast<long>(probs.size());
    return emit(rows, opt, "thermo");
}

int cmd_thermo_additivity(const Options& opt, const std::vector<double>& f,
                          const std::vector<double>& g, double alpha) {
    const auto rep =
        thermo::additivity_check({f}, {g}, alpha);
    std::vector<Row> rows{
        discrete_row("renyi-gap", alpha, rep.renyi_gap),
        discrete_row("tsallis-gap", alpha, rep.tsallis_gap),
        discrete_row("shannon-gap", alpha, rep.shannon_gap)};
    for (auto& r : rows) r.status = rep.additive ? "OK" : "VIOLATED";
    return emit(rows, opt, "thermo");
}

int cmd_thermo_equilibrium(const Options& opt,
                           const std::vector<double>& levels,
                           double temperature, double alpha) {
    const auto eq = thermo::tsallis_equilibrium({levels, temperature}, alpha);
    std::vector<Row> rows;
    for (std::size_t i = 0; i < eq.dist.probs.size(); ++i) {
        Row row = discrete_row("probability", alpha, eq.dist.probs[i]);
        row.n = static_cast<long>(i);
        row.path = eq.gibbs_path ? "gibbs" : "tsallis";
        if (eq.cutoff_applied) row.status = "CUTOFF";
        rows.push_back(row);
    }
    Row z = discrete_row("partition", alpha, eq.partition);
    z.path = rows.empty() ? "" : rows.front().path;
    rows.push_back(z);
    return emit(rows, opt, "thermo");
}

int cmd_thermo_free_energy(const Options& opt,
                           const std::vector<double>& levels, double t1,
                           double t2) {
    const auto rep = thermo::renyi_free_energy_identity(levels, t1, t2);
    std::vector<Row> rows{discrete_row("free-energy-lhs", rep.alpha, rep.lhs),
                          discrete_row("free-energy-rhs", rep.alpha, rep.rhs),
                          discrete_row("free-energy-gap", rep.alpha,
                                       rep.gap)};
    return emit(rows, opt, "thermo");
}

// ----------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, bool verbose) {
    std::vector<verify::Criterion> crits;
    try {
        crits = verify::run_suite(suite);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    int passed = 0;
    long checks_passed = 0, checks_total = 0;
    for (const auto& c : crits) {
        long ok = 0;
        for (const auto& ch : c.checks) ok += ch.passed ? 1 : 0;
        checks_passed += ok;
        checks_total += static_cast<long>(c.checks.size());
        passed += c.passed ? 1 : 0;
        std::printf("criterion %2d [%s] %s (%ld/%zu checks)\n", c.id,
                    c.passed ? "PASS" : "FAIL", c.title.c_str(), ok,
                    c.checks.size());
        for (const auto& ch : c.checks)
            if (verbose || !ch.passed)
                std::printf("    %-7s %s: observed %s, expected %s, tol %s\n",
                            ch.passed ? "ok" : "FAILED", ch.name.c_str(),
                            fmt(ch.observed).c_str(),
                            fmt(ch.expected).c_str(),
                            fmt(ch.tolerance).c_str());
    }
    std::printf("summary: %d/%zu criteria passed, %ld/%ld checks passed\n",
                passed, crits.size(), checks_passed, checks_total);
    return passed == static_cast<int>(crits.size()) ? kExitOk
                                                    : kExitVerifyFail;
}

void add_common(CLI::App* cmd, Options& opt, bool with_grid = true) {
    cmd->add_option("--system", opt.system,
                    "system family: ho, robin, q1d, neumann, dirichlet");
    cmd->add_option("--n", opt.n_range,
                    "quantum number or inclusive range A..B");
    cmd->add_option("--scale", opt.scale, "length scale (default 1)");
    cmd->add_option("--rel-tol", opt.rel_tol,
                    "relative quadrature tolerance (default 1e-8, or "
                    "QENTROPY_REL_TOL)");
    cmd->add_option("--jobs", opt.jobs, "worker threads (default 1)");
    cmd->add_option("--format", opt.format, "output format: csv or json");
    cmd->add_option("--out", opt.out, "write output to a file");
    if (with_grid) {
        cmd->add_option("--alpha", opt.alpha_spec,
                        "order grid MIN:MAX:COUNT, or 'inf'");
        cmd->add_option("--spacing", opt.spacing,
                        "grid spacing: linear, log, inverse");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropies and uncertainty relations of solvable "
                 "one-dimensional quantum systems"};
    app.require_subcommand(1);

    Options ent_opt;
    auto* ent = app.add_subcommand("entropy", "entropy sweeps");
    add_common(ent, ent_opt);
    ent->add_option("--space", ent_opt.space,
                    "position, momentum, or both (default)");
    ent->add_option("--kind", ent_opt.kind,
                    "renyi, tsallis, shannon, or onicescu");

    Options unc_opt;
    auto* unc = app.add_subcommand(
        "uncertainty", "conjugate-order entropic sums against the bound");
    add_common(unc, unc_opt);
    unc->add_flag("--find-max", unc_opt.find_max,
                  "locate the maximum of the entropy sum instead");

    Options tsc_opt;
    auto* tsc = app.add_subcommand("tsallis-check",
                                   "both sides of the functional relation");
    add_common(tsc, tsc_opt);

    Options con_opt;
    int con_points = 12;
    auto* con = app.add_subcommand(
        "conjecture", "dyadic approach of the entropy sum to order 1/2");
    add_common(con, con_opt, false);
    con->add_option("--points", con_points, "number of dyadic points");

    auto* thm = app.add_subcommand("thermo", "discrete-distribution tools");
    thm->require_subcommand(1);
    Options thm_opt;
    std::vector<double> probs_f, probs_g, levels;
    double thm_alpha = 1.0, thm_temp = 1.0, thm_t1 = 1.0, thm_t2 = 2.0;

    auto* the = thm->add_subcommand("entropy", "discrete entropy value");
    the->add_option("--probs", probs_f, "probabilities")
        ->delimiter(',')
        ->required();
    the->add_option("--kind", thm_opt.kind, "renyi, tsallis, shannon, "
                                            "onicescu");
    the->add_option("--alpha", thm_alpha, "order");
    the->add_option("--format", thm_opt.format, "csv or json");
    the->add_option("--out", thm_opt.out, "output file");

    auto* tha = thm->add_subcommand("additivity",
                                    "independent-composition laws");
    tha->add_option("--f", probs_f, "first distribution")
        ->delimiter(',')
        ->required();
    tha->add_option("--g", probs_g, "second distribution")
        ->delimiter(',')
        ->required();
    tha->add_option("--alpha", thm_alpha, "order");
    tha->add_option("--format", thm_opt.format, "csv or json");
    tha->add_option("--out", thm_opt.out, "output file");

    auto* thq = thm->add_subcommand("equilibrium",
                                    "entropy-extremizing distribution");
    thq->add_option("--levels", levels, "energy levels")
        ->delimiter(',')
        ->required();
    thq->add_option("--temperature", thm_temp, "temperature");
    thq->add_option("--alpha", thm_alpha, "order");
    thq->add_option("--format", thm_opt.format, "csv or json");
    thq->add_option("--out", thm_opt.out, "output file");

    auto* thf = thm->add_subcommand("free-energy",
                                    "finite-difference identity");
    thf->add_option("--levels", levels, "energy levels")
        ->delimiter(',')
        ->required();
    thf->add_option("--t1", thm_t1, "first temperature");
    thf->add_option("--t2", thm_t2, "second temperature");
    thf->add_option("--format", thm_opt.format, "csv or json");
    thf->add_option("--out", thm_opt.out, "output file");

    std::string suite = "all";
    bool verbose = false;
    auto* ver = app.add_subcommand("verify", "acceptance suites");
    ver->add_option("suite", suite,
                    "ho, robin, q1d, wells, dualpath, expansions, thermo, "
                    "or all");
    ver->add_flag("-v,--verbose", verbose, "print every check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*ent) return cmd_entropy(ent_opt);
        if (*unc) return cmd_uncertainty(unc_opt);
        if (*tsc) return cmd_tsallis_check(tsc_opt);
        if (*con) return cmd_conjecture(con_opt, con_points);
        if (*thm) {
            if (*the) return cmd_thermo_entropy(thm_opt, probs_f, thm_alpha);
            if (*tha)
                return cmd_thermo_additivity(thm_opt, probs_f, probs_g,
                                             thm_alpha);
            if (*thq)
                return cmd_thermo_equilibrium(thm_opt, levels, thm_temp,
                                              thm_alpha);
            if (*thf)
                return cmd_thermo_free_energy(thm_opt, levels, thm_t1,
                                              thm_t2);
        }
        if (*ver) return cmd_verify(suite, verbose);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const thermo::EmptySupport& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNonConvergent;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const quad::NonConvergent& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNonConvergent;
    }
    return kExitUsage;
}
