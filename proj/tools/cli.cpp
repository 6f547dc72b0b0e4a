// Copyright 2026 The duality-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "duality/measures.hpp"
#include "duality/states.hpp"

namespace duality::cli {

namespace {

struct FamilyParam {
    std::string name;
    double default_value;
    GridSpec default_grid;
};

struct Family {
    std::string name;
    std::vector<FamilyParam> params;
    RelationId default_relation;
};

const std::vector<Family>& families() {
    static const std::vector<Family> kFamilies = {
        {"werner",
         {{"p", 1.0, {"p", 0.0, 1.0, 101}}, {"x", std::sqrt(0.5), {"x", 0.0, 1.0, 101}}},
         RelationId::Th3Entanglement},
        {"example1",
         {{"p", 0.5, {"p", 0.0, 1.0, 51}},
          {"c_d", 0.5, {"c_d", 0.0, 1.0, 51}},
          {"c_u", 0.5, {"c_u", 0.0, 1.0, 5}}},
         RelationId::Th3Entanglement},
        {"threepath",
         {{"p", 1.0, {"p", 0.0, 1.0, 21}}, {"q", 1.0, {"q", 0.0, 1.0, 21}}, {"x", 1.0 / 3.0, {"x", 1.0 / 3.0, 1.0 / 3.0, 1}}},
         RelationId::Th1Duality},
    };
    return kFamilies;
}

const Family& find_family(const std::string& name) {
    for (const auto& f : families()) {
        if (f.name == name) return f;
    }
    throw UsageError("unknown example family '" + name + "' (expected werner, example1 or threepath)");
}

using Point = std::map<std::string, double>;

/// Cartesian product over the family's parameters in declaration order; the
/// last parameter varies fastest. Axes without a grid use `fixed` or, when
/// `use_default_grids`, the family's default grid.
std::vector<Point> grid_points(const Family& fam, const RunConfig& cfg, bool use_default_grids) {
    static const std::vector<std::string> kKnown = {"p", "q", "c_u", "c_d", "x"};
    const auto belongs = [&](const std::string& name) {
        return std::any_of(fam.params.begin(), fam.params.end(),
                           [&](const FamilyParam& fp) { return fp.name == name; });
    };
    for (const auto& g : cfg.grids) {
        if (std::find(kKnown.begin(), kKnown.end(), g.param) == kKnown.end()) {
            throw UsageError("unknown grid parameter '" + g.param + "' (expected p, q, c_u, c_d or x)");
        }
        if (!belongs(g.param)) {
            throw UsageError("parameter '" + g.param + "' does not apply to family " + fam.name);
        }
    }
    for (const auto& [name, value] : cfg.fixed) {
        if (!belongs(name)) throw UsageError("parameter '" + name + "' does not apply to family " + fam.name);
    }
    const bool any_grid = !cfg.grids.empty();
    std::vector<std::pair<std::string, std::vector<double>>> axes;
    for (const auto& fp : fam.params) {
        const auto g = std::find_if(cfg.grids.begin(), cfg.grids.end(),
                                    [&](const GridSpec& s) { return s.param == fp.name; });
        if (g != cfg.grids.end()) {
            axes.emplace_back(fp.name, g->values());
        } else if (const auto f = cfg.fixed.find(fp.name); f != cfg.fixed.end()) {
            axes.emplace_back(fp.name, std::vector<double>{f->second});
        } else if (use_default_grids || !any_grid) {
            axes.emplace_back(fp.name, fp.default_grid.values());
        } else {
            axes.emplace_back(fp.name, std::vector<double>{fp.default_value});
        }
    }
    std::vector<Point> points(1);
    for (const auto& [name, values] : axes) {
        std::vector<Point> next;
        next.reserve(points.size() * values.size());
        for (const auto& pt : points) {
            for (double v : values) {
                Point p = pt;
                p[name] = v;
                next.push_back(std::move(p));
            }
        }
        points = std::move(next);
    }
    return points;
}

DetectorConfig threepath_detectors(double overlap) {
    CMatrix g = CMatrix::Identity(3, 3);
    g(0, 1) = overlap;
    g(1, 0) = overlap;
    return DetectorConfig(g);
}

/// The family's input state (pure when the family is) and detectors at a point.
struct FamilyInput {
    std::optional<PureBipartite> pure;
    std::optional<DensityMatrix> mixed;
    DetectorConfig det;
};

FamilyInput family_input(const Family& fam, const Point& pt) {
    if (fam.name == "werner") {
        return {std::nullopt, werner(pt.at("p")), DetectorConfig::two_path(pt.at("x"))};
    }
    if (fam.name == "example1") {
        return {example1_state(pt.at("p"), pt.at("c_u")), std::nullopt,
                DetectorConfig::two_path(std::sqrt(pt.at("c_d")))};
    }
    return {threepath_example_state(pt.at("p"), pt.at("q")), std::nullopt, threepath_detectors(pt.at("x"))};
}

ComplementarityReport evaluate_input(RelationId id, const FamilyInput& in, const EvalOptions& opt) {
    if (in.pure) return evaluate(id, *in.pure, in.det, opt);
    return evaluate(id, *in.mixed, in.det, opt);
}

EvalOptions eval_options(const RunConfig& cfg) {
    EvalOptions opt;
    opt.pd = cfg.oracle ? PdMode::Oracle : PdMode::UpperBound;
    return opt;
}

struct TrialSample {
    std::optional<PureBipartite> pure;
    std::optional<DensityMatrix> mixed;
    DetectorConfig det;
};

TrialSample sample_trial(const RunConfig& cfg, RelationId id, std::size_t trial) {
    Rng rng = Rng::stream(cfg.seed, trial);
    const std::size_t n = cfg.n;
    const std::size_t m = cfg.memory_dim;
    std::optional<PureBipartite> pure;
    std::optional<DensityMatrix> mixed;
    if (id == RelationId::LimitPdV || id == RelationId::LimitPdE) {
        // Path amplitudes c_i with a shared (V) or orthonormal (E) memory branch per path.
        const CMatrix c = random_pure(n, 1, rng).amplitudes();
        CMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
        if (id == RelationId::LimitPdV) {
            CVector u = random_pure(m, 1, rng).amplitudes().col(0);
            for (Eigen::Index i = 0; i < a.rows(); ++i) a.row(i) = c(i, 0) * u.transpose();
        } else {
            const CMatrix u = random_unitary(m, rng);
            for (Eigen::Index i = 0; i < a.rows(); ++i) a.row(i) = c(i, 0) * u.col(i).transpose();
        }
        a /= a.norm();
        pure.emplace(a);
    } else if (cfg.pure) {
        pure.emplace(random_pure(n, m, rng));
    } else {
        mixed.emplace(random_mixed(n, m, 1 + rng.uniform_index(n * m), rng));
    }
    if (id == RelationId::Cor2N2Identity) {
        const double phase = 2.0 * std::numbers::pi * rng.uniform();
        return {std::move(pure), std::move(mixed), DetectorConfig::two_path(std::polar(std::sqrt(0.5), phase))};
    }
    return {std::move(pure), std::move(mixed), DetectorConfig::random(n, 1 + rng.uniform_index(n), rng)};
}

/// Runs task(i) for i in [0, count) on a small pool; the first exception is rethrown.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& task) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_table(const Table& t, const RunConfig& cfg, std::ostream& out) {
    const auto emit = [&](std::ostream& os) {
        if (cfg.format == Format::Json) {
            t.write_json(os);
        } else {
            t.write_csv(os);
        }
    };
    if (cfg.output.empty() || cfg.output == "-") {
        emit(out);
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + cfg.output + "'");
    emit(file);
}

std::vector<RelationId> parse_relations(const std::vector<std::string>& keys) {
    std::vector<RelationId> out;
    for (const auto& raw : keys) {
        std::stringstream ss(raw);
        std::string key;
        while (std::getline(ss, key, ',')) {
            if (key.empty()) continue;
            if (key == "all") {
                out.insert(out.end(), kAllRelations.begin(), kAllRelations.end());
                continue;
            }
            const auto id = parse_relation(key);
            if (!id) throw UsageError("unknown relation '" + key + "'");
            out.push_back(*id);
        }
    }
    return out;
}

}  // namespace

std::vector<double> GridSpec::values() const {
    std::vector<double> out(steps);
    if (steps == 1) {
        out[0] = start;
        return out;
    }
    for (std::size_t i = 0; i < steps; ++i) {
        out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    out.back() = stop;
    return out;
}

GridSpec parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 4) throw UsageError("grid '" + text + "' must look like param:start:stop:steps");
    GridSpec g;
    g.param = parts[0];
    try {
        std::size_t used = 0;
        g.start = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("start");
        g.stop = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("stop");
        const long long steps = std::stoll(parts[3], &used);
        if (used != parts[3].size() || steps < 1) throw std::invalid_argument("steps");
        g.steps = static_cast<std::size_t>(steps);
    } catch (const std::exception&) {
        throw UsageError("grid '" + text + "' has a malformed number (steps must be >= 1)");
    }
    return g;
}

std::size_t worker_count(std::size_t requested) {
    std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    std::size_t cap = hw;
    if (const char* env = std::getenv("DUALITY_LAB_THREADS")) {
        try {
            const long long v = std::stoll(env);
            if (v >= 1) cap = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return requested == 0 ? cap : std::min(requested, cap);
}

void validate(const RunConfig& cfg) {
    if (cfg.n < 2) throw UsageError("--n must be at least 2");
    if (cfg.memory_dim < 1) throw UsageError("--memory-dim must be at least 1");
    if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
    for (const auto& g : cfg.grids) {
        if (g.steps < 1) throw UsageError("grid '" + g.param + "' needs at least one step");
    }
    if (cfg.command == Command::Example || cfg.command == Command::Sweep) {
        (void)find_family(cfg.family);
    }
    if (cfg.command != Command::Check) return;
    if (cfg.relations.empty()) throw UsageError("check needs at least one --relation");
    for (RelationId id : cfg.relations) {
        const std::string key(relation_key(id));
        switch (id) {
            case RelationId::Cor1N2Identity:
            case RelationId::Cor2N2Identity:
                if (cfg.n != 2) throw UsageError(key + " is a two-path relation; use --n 2");
                break;
            case RelationId::Eq13NoMemory:
                if (cfg.memory_dim != 1) throw UsageError("eq13 is the no-memory relation; use --memory-dim 1");
                break;
            case RelationId::Th3Entanglement:
                if (!cfg.pure && (cfg.n != 2 || cfg.memory_dim != 2)) {
                    throw UsageError("th3 on mixed inputs needs --n 2 --memory-dim 2; pass --pure otherwise");
                }
                break;
            case RelationId::LimitPdE:
                if (cfg.memory_dim < cfg.n) {
                    throw UsageError("limit_pd_e needs --memory-dim >= --n for orthonormal branches");
                }
                break;
            default:
                break;
        }
    }
}

CheckSummary cmd_check(const RunConfig& cfg, Table& rows) {
    validate(cfg);
    const EvalOptions opt = eval_options(cfg);
    const std::size_t total = cfg.relations.size() * cfg.trials;
    std::vector<std::optional<ComplementarityReport>> reports(total);
    parallel_for(total, worker_count(cfg.threads), [&](std::size_t task) {
        const RelationId id = cfg.relations[task / cfg.trials];
        const std::size_t trial = task % cfg.trials;
        const TrialSample s = sample_trial(cfg, id, trial);
        reports[task] = s.pure ? evaluate(id, *s.pure, s.det, opt) : evaluate(id, *s.mixed, s.det, opt);
    });

    CheckSummary summary;
    summary.min_residual = std::numeric_limits<double>::infinity();
    for (std::size_t task = 0; task < total; ++task) {
        const auto& r = *reports[task];
        std::vector<Cell> row = {static_cast<std::int64_t>(task % cfg.trials),
                                 static_cast<std::int64_t>(cfg.seed),
                                 static_cast<std::int64_t>(cfg.memory_dim)};
        auto cells = report_cells(r);
        row.insert(row.end(), std::make_move_iterator(cells.begin()), std::make_move_iterator(cells.end()));
        rows.add_row(std::move(row));
        ++summary.evaluations;
        if (!r.satisfied) ++summary.violations;
        if (r.is_identity) {
            summary.max_identity_residual = std::max(summary.max_identity_residual, std::abs(r.residual));
        } else {
            summary.min_residual = std::min(summary.min_residual, r.residual);
        }
    }
    return summary;
}

double cmd_example(const RunConfig& cfg, Table& rows) {
    const Family& fam = find_family(cfg.family);
    const EvalOptions opt = eval_options(cfg);
    double worst = 0.0;
    for (const Point& pt : grid_points(fam, cfg, true)) {
        const FamilyInput in = family_input(fam, pt);
        if (fam.name == "werner") {
            const double p = pt.at("p");
            const double x = pt.at("x");
            const bool entangled = 3.0 * p - 1.0 >= 0.0;
            const double entangled_lhs = 5.0 / 16.0 - x * x / 4.0 + (9.0 * p * p - 6.0 * p) / 16.0;
            // Below p = 1/3 the concurrence is 0, so only the pd term survives.
            const double closed_lhs = entangled ? entangled_lhs : 0.25 - x * x / 4.0;
            const double closed_rhs = 5.0 / 8.0 - p * p * (1.0 + 2.0 * x * x) / 8.0;
            const auto r = evaluate_input(RelationId::Th3Entanglement, in, opt);
            const double dl = std::abs(closed_lhs - r.lhs);
            const double dr = std::abs(closed_rhs - r.rhs);
            worst = std::max({worst, dl, dr});
            rows.add_row({p, x, std::string(entangled ? "entangled" : "separable"), entangled_lhs, closed_lhs,
                          closed_rhs, r.lhs, r.rhs, dl, dr});
        } else if (fam.name == "example1") {
            const double p = pt.at("p");
            const double c_d = pt.at("c_d");
            const double c_u = pt.at("c_u");
            const double closed_lhs = 0.25 + p * (1.0 - p) * (c_u - 1.0) * (c_d - 1.0);
            const double closed_rhs = 0.25 + p * (1.0 - p) * (1.0 - c_d);
            const auto r = evaluate_input(RelationId::Th3Entanglement, in, opt);
            const double dl = std::abs(closed_lhs - r.lhs);
            const double dr = std::abs(closed_rhs - r.rhs);
            worst = std::max({worst, dl, dr});
            rows.add_row({p, c_d, c_u, closed_lhs, closed_rhs, r.lhs, r.rhs, dl, dr});
        } else {
            const double p = pt.at("p");
            const double q = pt.at("q");
            const double x = pt.at("x");
            // Closed forms hold for any real overlap x: |rho~_12|^2 = x^2 pq/9.
            const double v2_closed = 8.0 * p * q * x * x / 81.0;
            const double x2_closed = 4.0 * p * q * x * x / 81.0;
            const auto th1 = evaluate_input(RelationId::Th1Duality, in, opt);
            const auto eq2 = evaluate_input(RelationId::Eq2PriorMemory, in, opt);
            const double dv = std::abs(v2_closed - th1.components.at(Component::V2));
            const double dx = std::abs(x2_closed - eq2.components.at(Component::X2));
            worst = std::max({worst, dv, dx});
            rows.add_row({p, q, x, v2_closed, th1.components.at(Component::V2), x2_closed,
                          eq2.components.at(Component::X2), th1.lhs, eq2.lhs, th1.rhs, eq2.rhs, dv, dx});
        }
    }
    return worst;
}

void cmd_sweep(const RunConfig& cfg, Table& rows) {
    const Family& fam = find_family(cfg.family);
    const EvalOptions opt = eval_options(cfg);
    const std::vector<RelationId> relations =
        cfg.relations.empty() ? std::vector<RelationId>{fam.default_relation} : cfg.relations;
    for (const Point& pt : grid_points(fam, cfg, false)) {
        const FamilyInput in = family_input(fam, pt);
        for (RelationId id : relations) {
            ComplementarityReport r;
            try {
                r = evaluate_input(id, in, opt);
            } catch (const ContractError& e) {
                throw UsageError(std::string(relation_key(id)) + " does not apply to family " + fam.name + ": " +
                                 e.what());
            }
            std::vector<Cell> row;
            for (const auto& fp : fam.params) row.emplace_back(pt.at(fp.name));
            auto cells = report_cells(r);
            row.insert(row.end(), std::make_move_iterator(cells.begin()), std::make_move_iterator(cells.end()));
            rows.add_row(std::move(row));
        }
    }
}

std::size_t cmd_report(const RunConfig& cfg, Table& rows, std::ostream& log) {
    Rng rng(cfg.seed);
    const DensityMatrix rho = cfg.state_file.empty()
                                  ? random_mixed(cfg.n, cfg.memory_dim, cfg.n * cfg.memory_dim, rng)
                                  : density_from_json(read_file(cfg.state_file));
    const DetectorConfig det = cfg.detector_file.empty() ? DetectorConfig::random(rho.dim_a(), rho.dim_a(), rng)
                                                         : detectors_from_json(read_file(cfg.detector_file));
    if (det.n() != rho.dim_a()) {
        throw UsageError("state has " + std::to_string(rho.dim_a()) + " paths but detector file has " +
                         std::to_string(det.n()));
    }
    const bool explicit_list = !cfg.relations.empty();
    const std::vector<RelationId> relations =
        explicit_list ? cfg.relations : std::vector<RelationId>(kAllRelations.begin(), kAllRelations.end());
    const EvalOptions opt = eval_options(cfg);
    std::size_t violations = 0;
    for (RelationId id : relations) {
        try {
            const auto r = evaluate(id, rho, det, opt);
            rows.add_row(report_cells(r));
            if (!r.satisfied) ++violations;
        } catch (const std::exception& e) {
            if (explicit_list) throw UsageError(std::string(relation_key(id)) + ": " + e.what());
            log << "skipped " << relation_key(id) << ": " << e.what() << '\n';
        }
    }
    return violations;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& log) {
    CLI::App app{"duality-lab: complementarity relations in an n-path interferometer with detectors and quantum "
                 "memory"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::vector<std::string> relation_keys;
    std::vector<std::string> grid_texts;
    std::vector<std::string> set_texts;
    std::string format = "csv";

    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output, "Output file (default stdout)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* check = app.add_subcommand("check", "Monte Carlo verification over random states and detectors");
    check->add_option("--relation", relation_keys, "Relations to check (th1, eq13, cor1, th2, cor2, th3, eq1, eq2, "
                                                   "limit_pd_v, limit_pd_e); comma separated or repeated")
        ->default_str("th1");
    check->add_option("--n", cfg.n, "Number of paths");
    check->add_option("--memory-dim", cfg.memory_dim, "Quantum memory dimension (1 = no memory)");
    check->add_option("--trials", cfg.trials, "Random trials per relation");
    check->add_option("--seed", cfg.seed, "Run seed");
    check->add_flag("--pure", cfg.pure, "Sample pure input states only");
    check->add_flag("--oracle", cfg.oracle, "Use the optimized POVM instead of the closed-form bound");
    check->add_option("--threads", cfg.threads, "Worker threads (capped by DUALITY_LAB_THREADS)");
    add_output(check);

    std::string example_name;
    auto* example = app.add_subcommand("example", "Closed-form versus pipeline values for a worked example");
    example->add_option("name", example_name, "werner, example1 or threepath")->required();
    example->add_option("--grid", grid_texts, "Grid axis param:start:stop:steps (repeatable)");
    example->add_option("--set", set_texts, "Fixed parameter name=value (repeatable)");
    add_output(example);

    auto* sweep = app.add_subcommand("sweep", "Relation reports over a parameter grid");
    sweep->add_option("--family", cfg.family, "werner, example1 or threepath")->required();
    sweep->add_option("--grid", grid_texts, "Grid axis param:start:stop:steps (repeatable)");
    sweep->add_option("--set", set_texts, "Fixed parameter name=value (repeatable)");
    sweep->add_option("--relation", relation_keys, "Relations to report");
    sweep->add_flag("--oracle", cfg.oracle, "Use the optimized POVM instead of the closed-form bound");
    add_output(sweep);

    auto* report = app.add_subcommand("report", "Every applicable relation for one state and detector set");
    report->add_option("--state", cfg.state_file, "Density matrix JSON {dim_a, dim_b, re, im}");
    report->add_option("--detectors", cfg.detector_file, "Detector JSON {n, gram_re, gram_im}");
    report->add_option("--relation", relation_keys, "Relations to evaluate (default: all applicable)");
    report->add_option("--n", cfg.n, "Paths for a sampled state");
    report->add_option("--memory-dim", cfg.memory_dim, "Memory dimension for a sampled state");
    report->add_option("--seed", cfg.seed, "Seed for a sampled state");
    report->add_flag("--oracle", cfg.oracle, "Use the optimized POVM instead of the closed-form bound");
    add_output(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        log << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        cfg.format = format == "json" ? Format::Json : Format::Csv;
        cfg.relations = parse_relations(relation_keys);
        for (const auto& g : grid_texts) cfg.grids.push_back(parse_grid(g));
        for (const auto& s : set_texts) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw UsageError("--set expects name=value, got '" + s + "'");
            try {
                cfg.fixed[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
            } catch (const std::exception&) {
                throw UsageError("--set value is not a number: '" + s + "'");
            }
        }

        if (check->parsed()) {
            cfg.command = Command::Check;
            if (cfg.relations.empty()) cfg.relations = {RelationId::Th1Duality};
            Table rows([] {
                std::vector<std::string> cols = {"trial", "seed", "memory_dim"};
                const auto rc = report_columns();
                cols.insert(cols.end(), rc.begin(), rc.end());
                return cols;
            }());
            const CheckSummary s = cmd_check(cfg, rows);
            write_table(rows, cfg, out);
            log << "evaluations: " << s.evaluations << "\nviolations: " << s.violations
                << "\nmin residual (inequalities): " << format_double(s.min_residual)
                << "\nmax |residual| (identities): " << format_double(s.max_identity_residual) << '\n';
            return s.violations == 0 ? kOk : kViolations;
        }
        if (example->parsed()) {
            cfg.command = Command::Example;
            cfg.family = example_name;
            validate(cfg);
            const Family& fam = find_family(cfg.family);
            std::vector<std::string> cols;
            if (fam.name == "werner") {
                cols = {"p", "x", "branch", "closed_lhs_entangled", "closed_lhs", "closed_rhs", "lhs", "rhs",
                        "abs_diff_lhs", "abs_diff_rhs"};
            } else if (fam.name == "example1") {
                cols = {"p", "c_d", "c_u", "closed_lhs", "closed_rhs", "lhs", "rhs", "abs_diff_lhs",
                        "abs_diff_rhs"};
            } else {
                cols = {"p", "q", "x", "v2_closed", "v2", "x2_closed", "x2", "th1_lhs", "eq2_lhs", "th1_rhs",
                        "eq2_rhs", "abs_diff_v2", "abs_diff_x2"};
            }
            Table rows(cols);
            const double worst = cmd_example(cfg, rows);
            write_table(rows, cfg, out);
            const double limit = fam.name == "threepath" ? 1e-12 : 1e-9;
            log << "rows: " << rows.size() << "\nmax |closed form - pipeline|: " << format_double(worst) << '\n';
            return worst < limit ? kOk : kViolations;
        }
        if (sweep->parsed()) {
            cfg.command = Command::Sweep;
            validate(cfg);
            const Family& fam = find_family(cfg.family);
            std::vector<std::string> cols;
            for (const auto& fp : fam.params) cols.push_back(fp.name);
            const auto rc = report_columns();
            cols.insert(cols.end(), rc.begin(), rc.end());
            Table rows(cols);
            cmd_sweep(cfg, rows);
            write_table(rows, cfg, out);
            log << "rows: " << rows.size() << '\n';
            return kOk;
        }
        cfg.command = Command::Report;
        validate(cfg);
        Table rows(report_columns());
        const std::size_t violations = cmd_report(cfg, rows, log);
        write_table(rows, cfg, out);
        log << "violations: " << violations << '\n';
        return violations == 0 ? kOk : kViolations;
    } catch (const UsageError& e) {
        log << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractError& e) {
        log << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace duality::cli
