#include "crged/cli.hpp"

#include "crged/cache.hpp"
#include "crged/edit_oracle.hpp"
#include "crged/errors.hpp"
#include "crged/gsolver.hpp"
#include "crged/parallel.hpp"
#include "crged/spectrum.hpp"
#include "crged/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace crged::cli {

std::string_view command_name(Command c) {
    switch (c) {
    case Command::Spectrum: return "spectrum";
    case Command::Gamma: return "gamma";
    case Command::GFun: return "gfun";
    case Command::Embed: return "embed";
    case Command::PCore: return "pcore";
    case Command::EdCurve: return "edcurve";
    case Command::Search: return "search";
    case Command::Dist: return "dist";
    case Command::Estimate: return "estimate";
    }
    return "?";
}

namespace {

Rational to_rational(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw CliError(kBadRational, flag + ": " + e.what());
    }
}

Rational to_probability(const std::string& flag, const std::string& text) {
    Rational p = to_rational(flag, text);
    if (!in_unit_interval(p)) throw CliError(kInvalidArgument, flag + " " + text + " rejected: p must lie in [0,1]");
    return p;
}

Graph to_graph(const std::string& flag, const std::string& text) {
    try {
        return parse_graph_spec(text);
    } catch (const ParseError& e) {
        throw CliError(kBadGraph, flag + ": " + e.what());
    } catch (const ValidationError& e) {
        throw CliError(kInvalidArgument, flag + ": " + e.what());
    }
}

Crg to_crg(const std::string& text) {
    std::string body;
    if (std::filesystem::exists(text)) {
        std::ifstream f(text, std::ios::binary);
        if (!f) throw CliError(kIo, "--crg: cannot read " + text);
        std::ostringstream ss;
        ss << f.rdbuf();
        body = ss.str();
        try {
            return parse_crg(body);
        } catch (const Error& e) {
            throw CliError(kBadCrg, "--crg " + text + ": " + e.what());
        }
    }
    // Not a file: accept the single-token form, e.g. "WWB;GG;G".
    if (text.empty() || text.find_first_not_of("WBG;") != std::string::npos)
        throw CliError(kIo, "--crg: no such file '" + text + "'");
    try {
        return parse_compact_crg(text);
    } catch (const Error& e) {
        throw CliError(kBadCrg, "--crg " + text + ": " + e.what());
    }
}

struct GridOptions {
    std::string step;
    std::string from;
    std::string to;
};

std::vector<Rational> to_grid(const GridOptions& opt, std::string& canonical) {
    const Rational step = to_rational("--grid", opt.step);
    if (step.get_num() != 1 || step <= 0 || step > 1)
        throw CliError(kUsage, "--grid " + opt.step + " rejected: expected 1/d for the grid {k/d}");
    const auto d = step.get_den().get_ui();
    auto grid = uniform_grid(d);
    Interval iv{Rational(0), Rational(1)};
    if (!opt.from.empty()) iv.lo = to_probability("--from", opt.from);
    if (!opt.to.empty()) iv.hi = to_probability("--to", opt.to);
    grid = restrict_grid(grid, iv);
    if (grid.empty()) throw CliError(kInvalidArgument, "grid is empty after applying --from/--to");
    canonical = "1/" + std::to_string(d) + "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
    return grid;
}

struct RawOptions {
    std::string graph, forbid, crg, p, family, source = "theorem";
    GridOptions grid;
    std::size_t r_max = 0, s_max = 0, n = 0, samples = 1, max_size = 3, jobs = 1;
    std::uint64_t seed = 0, node_limit = 20'000'000;
    bool extreme = false, compare = false, analyze = false, long_running = false, no_cache = false, float_display = false;
    std::string out, cache_dir;
};

} // namespace

std::string JobSpec::canonical() const {
    std::ostringstream s;
    s << "command=" << command_name(command) << "\n";
    if (graph) s << "graph=" << to_graph6(*graph) << "\n";
    if (forbid) s << "forbid=" << to_graph6(*forbid) << "\n";
    if (crg) s << "crg=" << to_compact(*crg) << "\n";
    if (p) s << "p=" << to_string(*p) << "\n";
    if (!grid_spec.empty()) s << "grid=" << grid_spec << "\n";
    if (r_max) s << "r_max=" << *r_max << "\n";
    if (s_max) s << "s_max=" << *s_max << "\n";
    s << "extreme=" << extreme_only << "\n";
    if (family) s << "family=" << theorem_family_name(*family) << ":" << family_n << "\n";
    s << "mode=" << static_cast<int>(curve_mode) << "\nmax_size=" << max_size << "\nlong=" << long_running << "\n";
    s << "n=" << n << "\nsamples=" << samples << "\nseed=" << seed << "\nnode_limit=" << node_limit << "\n";
    return s.str();
}

JobSpec parse_inputs(const std::vector<std::string>& args) {
    CLI::App app{"Edit distance functions of hereditary graph properties via colored regularity graphs", "crged"};
    app.require_subcommand(1, 1);
    RawOptions raw;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--out", raw.out, "Write the exact output to this file");
        sub->add_option("--cache-dir", raw.cache_dir, std::string("Result cache directory (default $") + kCacheDirEnv + ")");
        sub->add_flag("--no-cache", raw.no_cache, "Bypass the result cache");
        sub->add_option("--jobs", raw.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--float", raw.float_display, "Show decimals on stdout (stored artifacts stay exact)");
    };
    const auto grid_opts = [&](CLI::App* sub) {
        sub->add_option("--grid", raw.grid.step, "Grid {k/d}, given as 1/d");
        sub->add_option("--from", raw.grid.from, "Lower end of the grid");
        sub->add_option("--to", raw.grid.to, "Upper end of the grid");
    };

    auto* spectrum = app.add_subcommand("spectrum", "Clique spectrum of Forb(H) as r,s,member rows");
    spectrum->add_option("--graph", raw.graph, "Forbidden graph: graph6 or family:n")->required();
    spectrum->add_option("--r-max", raw.r_max, "White bound (default |V(H)|)");
    spectrum->add_option("--s-max", raw.s_max, "Black bound (default |V(H)|)");
    spectrum->add_flag("--extreme", raw.extreme, "Print only the extreme points");

    auto* gamma_cmd = app.add_subcommand("gamma", "gamma_H(p) from the clique spectrum");
    gamma_cmd->add_option("--graph", raw.graph, "Forbidden graph")->required();
    gamma_cmd->add_option("--p", raw.p, "Single p as num/den");

    auto* gfun = app.add_subcommand("gfun", "g_K(p) with an optimal weight vector");
    gfun->add_option("--crg", raw.crg, "CRG file (crg v1) or inline form such as WB;G")->required();
    gfun->add_option("--p", raw.p, "p as num/den");

    auto* embed = app.add_subcommand("embed", "Decide H -> K and print a witness map");
    embed->add_option("--graph", raw.graph, "Graph H")->required();
    embed->add_option("--crg", raw.crg, "CRG K")->required();

    auto* pcore = app.add_subcommand("pcore", "Is K p-core?");
    pcore->add_option("--crg", raw.crg, "CRG K")->required();
    pcore->add_option("--p", raw.p, "p as num/den")->required();

    auto* edcurve = app.add_subcommand("edcurve", "Edit distance curve of a closed-form family");
    edcurve->add_option("--family", raw.family, "c8star, ctilde, path or cycle")->required();
    edcurve->add_option("--n", raw.n, "Order of the forbidden graph (c8star: 8)");
    edcurve->add_option("--source", raw.source, "theorem, gamma or search");
    edcurve->add_flag("--compare", raw.compare, "Columns p,theorem,gamma,search,diff on the theorem's interval");
    edcurve->add_flag("--analyze", raw.analyze, "JSON summary: d*, p*, concavity violations");
    edcurve->add_option("--max-size", raw.max_size, "CRG size bound for the search source");
    edcurve->add_flag("--long-running", raw.long_running, "Allow max size 5");

    auto* search = app.add_subcommand("search", "Minimum g over CRGs of bounded size avoiding H");
    search->add_option("--forbid", raw.forbid, "Forbidden graph")->required();
    search->add_option("--max-size", raw.max_size, "CRG size bound (<= 4, 5 with --long-running)");
    search->add_option("--p", raw.p, "Single p as num/den");
    search->add_flag("--long-running", raw.long_running, "Allow max size 5");

    auto* dist = app.add_subcommand("dist", "Exact edit distance of a small graph to Forb(H)");
    dist->add_option("--graph", raw.graph, "Graph G")->required();
    dist->add_option("--forbid", raw.forbid, "Forbidden graph H")->required();
    dist->add_option("--node-limit", raw.node_limit, "Search node budget");

    auto* estimate = app.add_subcommand("estimate", "Largest sampled distance over graphs of density p");
    estimate->add_option("--n", raw.n, "Order of sampled graphs (<= 9)")->required();
    estimate->add_option("--p", raw.p, "Density p")->required();
    estimate->add_option("--forbid", raw.forbid, "Forbidden graph H")->required();
    estimate->add_option("--samples", raw.samples, "Number of samples")->check(CLI::PositiveNumber);
    estimate->add_option("--seed", raw.seed, "PRNG seed");
    estimate->add_option("--node-limit", raw.node_limit, "Oracle node budget per sample");

    for (auto* sub : {spectrum, gamma_cmd, gfun, embed, pcore, edcurve, search, dist, estimate}) common(sub);
    for (auto* sub : {gamma_cmd, gfun, edcurve, search}) grid_opts(sub);

    std::vector<std::string> argv_store{"crged"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw CliError(kOk, app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw CliError(kOk, app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw CliError(kUsage, e.what());
    }

    JobSpec job;
    const auto* chosen = app.get_subcommands().front();
    for (Command c : {Command::Spectrum, Command::Gamma, Command::GFun, Command::Embed, Command::PCore, Command::EdCurve,
                      Command::Search, Command::Dist, Command::Estimate})
        if (chosen->get_name() == command_name(c)) job.command = c;

    if (!raw.graph.empty()) job.graph = to_graph("--graph", raw.graph);
    if (!raw.forbid.empty()) job.forbid = to_graph("--forbid", raw.forbid);
    if (!raw.crg.empty()) job.crg = to_crg(raw.crg);
    if (!raw.p.empty()) job.p = to_probability("--p", raw.p);
    if (!raw.grid.step.empty()) job.grid = to_grid(raw.grid, job.grid_spec);
    if (job.command == Command::Spectrum) {
        if (chosen->count("--r-max")) job.r_max = raw.r_max;
        if (chosen->count("--s-max")) job.s_max = raw.s_max;
    }
    job.extreme_only = raw.extreme;
    job.max_size = raw.max_size;
    job.long_running = raw.long_running;
    job.n = raw.n;
    job.samples = raw.samples;
    job.seed = raw.seed;
    job.node_limit = raw.node_limit;
    job.jobs = raw.jobs;
    job.no_cache = raw.no_cache;
    job.float_display = raw.float_display;
    if (!raw.out.empty()) job.output_path = raw.out;
    if (!raw.cache_dir.empty()) job.cache_dir = raw.cache_dir;

    const bool wants_points = job.command == Command::Gamma || job.command == Command::GFun || job.command == Command::Search;
    if (wants_points && job.p.has_value() == !job.grid.empty())
        throw CliError(kUsage, std::string(command_name(job.command)) + ": give exactly one of --p or --grid");

    if (job.command == Command::Search || job.command == Command::EdCurve) {
        if (job.max_size == 0 || job.max_size > kMaxEnumerationSize)
            throw CliError(kInvalidArgument, "--max-size must be in 1.." + std::to_string(kMaxEnumerationSize));
        if (job.max_size > kMaxRoutineSearchSize && !job.long_running)
            throw CliError(kInvalidArgument, "--max-size " + std::to_string(job.max_size) + " needs --long-running");
    }

    if (job.command == Command::EdCurve) {
        try {
            job.family = parse_theorem_family(raw.family);
        } catch (const ParseError& e) {
            throw CliError(kUsage, std::string("--family: ") + e.what());
        }
        job.family_n = raw.n != 0 ? raw.n : (*job.family == TheoremFamily::C8Star ? 8 : 0);
        try {
            (void)theorem_interval(*job.family, job.family_n);
        } catch (const ValidationError& e) {
            throw CliError(kInvalidArgument, std::string("--n: ") + e.what());
        }
        job.n = 0;
        if (raw.compare) job.curve_mode = CurveMode::Compare;
        else if (raw.source == "theorem") job.curve_mode = CurveMode::Theorem;
        else if (raw.source == "gamma") job.curve_mode = CurveMode::Gamma;
        else if (raw.source == "search") job.curve_mode = CurveMode::Search;
        else throw CliError(kUsage, "--source must be theorem, gamma or search");
        if (raw.analyze) job.extreme_only = true; // reused as the "summary" switch for edcurve
        if (job.grid.empty()) {
            GridOptions def{"1/128", raw.grid.from, raw.grid.to};
            job.grid = to_grid(def, job.grid_spec);
        }
    }
    if (job.command == Command::Estimate && job.n > kMaxEstimateOrder)
        throw CliError(kInvalidArgument, "--n must be <= " + std::to_string(kMaxEstimateOrder));
    return job;
}

namespace {

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : " ") + x;
    return out;
}

std::string curve_summary(const Curve& curve) {
    const auto analysis = analyze_curve(curve);
    nlohmann::ordered_json j;
    j["source"] = std::string(curve_source_name(curve.provenance));
    j["samples"] = curve.samples.size();
    j["d_star"] = to_string(analysis.max_value);
    j["p_star"] = to_string(analysis.argmax);
    j["concavity_violations"] = analysis.concavity_violations.size();
    j["lipschitz_2"] = satisfies_lipschitz(curve, Rational(2));
    return j.dump() + "\n";
}

std::string run_edcurve(const JobSpec& job) {
    const TheoremFamily f = *job.family;
    const std::size_t n = job.family_n;
    const Interval iv = theorem_interval(f, n);
    const Graph h = theorem_graph(f, n);
    const auto on_interval = restrict_grid(job.grid, iv);

    if (job.curve_mode == CurveMode::Compare) {
        if (on_interval.empty()) throw ValidationError("no grid point lies in the theorem's interval");
        const Curve th = theorem_curve(f, n, on_interval, job.jobs);
        const Curve ga = gamma_curve(h, on_interval, job.jobs);
        const Curve se = bounded_curve(BoundedSearch(h, job.max_size, job.long_running), on_interval, job.jobs);
        std::string out = "p,theorem,gamma,search,diff\n";
        for (std::size_t i = 0; i < on_interval.size(); ++i) {
            const auto& a = th.samples[i].value;
            const auto& b = ga.samples[i].value;
            const auto& c = se.samples[i].value;
            const Rational hi = std::max({a, b, c});
            const Rational lo = std::min({a, b, c});
            out += to_string(on_interval[i]) + "," + to_string(a) + "," + to_string(b) + "," + to_string(c) + "," +
                   to_string(Rational(hi - lo)) + "\n";
        }
        return out;
    }

    Curve curve;
    switch (job.curve_mode) {
    case CurveMode::Theorem:
        if (on_interval.empty()) throw ValidationError("no grid point lies in the theorem's interval");
        curve = theorem_curve(f, n, on_interval, job.jobs);
        break;
    case CurveMode::Gamma: curve = gamma_curve(h, job.grid, job.jobs); break;
    case CurveMode::Search:
        curve = bounded_curve(BoundedSearch(h, job.max_size, job.long_running), job.grid, job.jobs);
        break;
    case CurveMode::Compare: break;
    }
    return job.extreme_only ? curve_summary(curve) : to_csv(curve);
}

std::vector<Rational> points_of(const JobSpec& job) { return job.p ? std::vector<Rational>{*job.p} : job.grid; }

} // namespace

std::string execute(const JobSpec& job) {
    switch (job.command) {
    case Command::Spectrum: {
        const auto s = clique_spectrum(*job.graph, {job.r_max, job.s_max});
        return job.extreme_only ? extreme_points_csv(extreme_points(s)) : s.to_csv();
    }
    case Command::Gamma: return to_csv(gamma_curve(*job.graph, points_of(job), job.jobs));
    case Command::GFun: {
        if (job.p) return to_json(g_value(*job.crg, *job.p)) + "\n";
        std::vector<std::string> rows(job.grid.size());
        parallel_for(job.grid.size(), job.jobs, [&](std::size_t i) {
            const auto res = g_value(*job.crg, job.grid[i]);
            std::vector<std::string> w;
            for (const auto& x : res.weights) w.push_back(to_string(x));
            rows[i] = to_string(job.grid[i]) + "," + to_string(res.value) + "," + join(w) + "\n";
        });
        std::string out = "p,value,weights\n";
        for (const auto& r : rows) out += r;
        return out;
    }
    case Command::Embed: {
        const auto map = embeds(*job.graph, *job.crg);
        nlohmann::ordered_json j;
        j["embeds"] = map.has_value();
        j["map"] = map ? nlohmann::json(*map) : nlohmann::json(nullptr);
        return j.dump() + "\n";
    }
    case Command::PCore: {
        nlohmann::ordered_json j;
        j["p_core"] = is_p_core(*job.crg, *job.p);
        j["value"] = to_string(g_value(*job.crg, *job.p).value);
        return j.dump() + "\n";
    }
    case Command::EdCurve: return run_edcurve(job);
    case Command::Search:
        return to_csv(bounded_curve(BoundedSearch(*job.forbid, job.max_size, job.long_running), points_of(job), job.jobs));
    case Command::Dist: {
        const auto res = edit_distance(*job.graph, *job.forbid, {job.node_limit});
        return "edits,normalized,witness_graph6\n" + std::to_string(res.edits) + "," + to_string(res.normalized) + "," +
               to_graph6(res.witness) + "\n";
    }
    case Command::Estimate: {
        const auto res = max_dist_estimate(job.n, *job.p, *job.forbid, job.samples, job.seed, {job.node_limit}, job.jobs);
        return "max_normalized,sample_index,skipped,witness_graph6\n" + to_string(res.max_normalized) + "," +
               std::to_string(res.sample_index) + "," + std::to_string(res.skipped) + "," + to_graph6(res.witness) + "\n";
    }
    }
    throw ValidationError("unknown command");
}

std::string render_floats(const std::string& exact) {
    std::string out;
    std::size_t i = 0;
    const auto is_token_char = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'; };
    while (i < exact.size()) {
        if (!is_token_char(exact[i])) {
            out.push_back(exact[i++]);
            continue;
        }
        std::size_t j = i;
        while (j < exact.size() && is_token_char(exact[j])) ++j;
        const std::string token = exact.substr(i, j - i);
        const auto slash = token.find('/');
        bool converted = false;
        if (slash != std::string::npos && token.find('/', slash + 1) == std::string::npos) {
            try {
                out += to_decimal_string(parse_rational(token));
                converted = true;
            } catch (const ParseError&) {
            }
        }
        if (!converted) out += token;
        i = j;
    }
    return out;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        std::optional<ResultCache> cache;
        std::optional<std::filesystem::path> dir = job.cache_dir;
        if (!dir)
            if (const char* env = std::getenv(kCacheDirEnv); env && *env) dir = env;
        if (dir && !job.no_cache) {
            cache.emplace(*dir, kVersion, &err);
            if (!cache->enabled()) cache.reset();
        }

        if (job.command == Command::EdCurve &&
            (job.curve_mode == CurveMode::Theorem || job.curve_mode == CurveMode::Compare)) {
            const Interval iv = theorem_interval(*job.family, job.family_n);
            const auto kept = restrict_grid(job.grid, iv).size();
            if (kept < job.grid.size())
                err << "note: skipped " << job.grid.size() - kept << " grid points outside [" << to_string(iv.lo) << ","
                    << to_string(iv.hi) << "], where the closed form is not asserted\n";
        }

        std::string payload;
        const std::string key = cache ? cache->key_for(job.canonical()) : std::string();
        if (auto hit = cache ? cache->get(key) : std::nullopt) {
            payload = std::move(*hit);
        } else {
            payload = execute(job);
            if (cache) cache->put(key, payload);
        }

        if (job.output_path) {
            std::ofstream f(*job.output_path, std::ios::binary);
            if (!(f << payload)) throw IoError("cannot write " + job.output_path->string());
            if (job.float_display) out << render_floats(payload);
        } else {
            out << (job.float_display ? render_floats(payload) : payload);
        }
        return kOk;
    } catch (const SearchBudgetExceeded& e) {
        err << "error: " << e.what() << " (best known upper bound: " << e.best_upper_bound() << " edits)\n";
        return kResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.category()) {
        case ErrorCategory::Validation: return kInvalidArgument;
        case ErrorCategory::Parse: return kUsage;
        case ErrorCategory::Resource: return kResource;
        case ErrorCategory::Io: return kIo;
        case ErrorCategory::Usage: return kUsage;
        }
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    JobSpec job;
    try {
        job = parse_inputs(args);
    } catch (const CliError& e) {
        if (e.code() == kOk) {
            out << e.what();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return e.code();
    }
    return run(job, out, err);
}

} // namespace crged::cli
