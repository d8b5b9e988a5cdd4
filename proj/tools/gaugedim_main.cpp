// gaugedim: batch front door for the gauged-dimension toolkit.
// Exit codes: 0 success, 1 computation error, 2 config error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gaugedim/algodim.hpp"
#include "gaugedim/constructions.hpp"
#include "gaugedim/covering.hpp"
#include "gaugedim/dimension.hpp"
#include "gaugedim/errors.hpp"
#include "gaugedim/hyperspace.hpp"
#include "gaugedim/serialize.hpp"

using namespace gaugedim;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string out;
    std::string table;
    std::uint64_t seed = 0;
    std::size_t max_nodes = 1u << 20;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--out", c.out, "output artifact path (JSON)")->required();
    cmd->add_option("--table", c.table, "optional plot-ready CSV path");
    cmd->add_option("--seed", c.seed, "seed recorded in the artifact");
    cmd->add_option("--max-nodes", c.max_nodes, "search node budget");
}

std::size_t node_budget(const CommonOpts& c) {
    if (const char* env = std::getenv("GAUGEDIM_MAX_NODES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw precondition_error("bad GAUGEDIM_MAX_NODES value");
    }
    return c.max_nodes;
}

std::vector<Scale> parse_schedule(const std::string& text) {
    if (text.rfind("geo:", 0) == 0) {
        std::vector<int> parts;
        std::stringstream ss(text.substr(4));
        std::string cell;
        while (std::getline(ss, cell, ',')) parts.push_back(std::stoi(cell));
        if (parts.size() == 2) return geometric_schedule(parts[0], parts[1]);
        if (parts.size() == 3) return geometric_schedule(parts[0], parts[1], parts[2]);
        throw precondition_error("schedule: geo:BASE,COUNT or geo:BASE,FIRST,LAST");
    }
    if (text.rfind("list:", 0) == 0) {
        std::vector<double> vals;
        std::stringstream ss(text.substr(5));
        std::string cell;
        while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
        return schedule_from_values(vals);
    }
    throw precondition_error("schedule must start with geo: or list:");
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
    if (vals.empty()) throw precondition_error("empty grid");
    return vals;
}

void write_artifact(const CommonOpts& c, const std::string& command, const json& config,
                    json result) {
    json artifact = make_artifact(command, config, c.seed, std::move(result));
    write_text_file(c.out, artifact.dump(2) + "\n");
}

struct LoadedSet {
    std::unique_ptr<MetricSpace> space;
    std::vector<PointId> ids;
    std::string source;
};

LoadedSet load_points(const std::string& points_csv, const std::string& intervals_json,
                      int one_over_n) {
    int given = (!points_csv.empty()) + (!intervals_json.empty()) + (one_over_n > 0);
    if (given != 1)
        throw precondition_error("give exactly one of --points, --intervals, --one-over-n");
    LoadedSet out;
    if (!points_csv.empty()) {
        auto rows = read_points_csv(points_csv);
        std::size_t dim = rows.front().size();
        auto space = std::make_unique<EuclideanSpace>(dim);
        for (const auto& r : rows) out.ids.push_back(space->add_point(r));
        out.space = std::move(space);
        out.source = points_csv;
        return out;
    }
    if (!intervals_json.empty()) {
        std::ifstream in(intervals_json);
        if (!in) throw precondition_error("cannot open " + intervals_json);
        std::stringstream buf;
        buf << in.rdbuf();
        json j = json::parse(buf.str(), nullptr, false);
        if (j.is_discarded()) throw precondition_error("bad JSON in " + intervals_json);
        // accept either a bare interval set or a construct artifact
        json set_json = j;
        if (j.contains("result")) {
            const json& r = j["result"];
            set_json = r.contains("final") ? r["final"] : r.at("set");
        }
        IntervalSet set = interval_set_from_json(set_json);
        auto pts = sample_points(set, 1, SampleMode::endpoints);
        auto space = std::make_unique<RationalLineSpace>();
        for (const auto& p : pts) out.ids.push_back(space->add_point(p));
        out.space = std::move(space);
        out.source = intervals_json;
        return out;
    }
    auto pts = one_over_n_points(one_over_n);
    auto space = std::make_unique<RationalLineSpace>();
    for (const auto& p : pts) out.ids.push_back(space->add_point(p));
    out.space = std::move(space);
    out.source = "one-over-n:" + std::to_string(one_over_n);
    return out;
}

int run_construct(const CommonOpts& c, const std::string& kind, int depth, int n_max,
                  const std::string& bits_file) {
    json config{{"kind", kind},
                {"depth", depth},
                {"n_max", n_max},
                {"bits_file", bits_file},
                {"seed", c.seed}};
    json result;
    if (kind == "cantor7") {
        BitSource bits = bits_file.empty() ? BitSource::seeded(c.seed)
                                           : BitSource::from_file(bits_file);
        auto levels = build_construction(bits, depth);
        json jlevels = json::array();
        json invariants = json::array();
        for (const auto& set : levels) {
            jlevels.push_back(to_json(set));
            invariants.push_back(to_json(check_interval_set(set)));
        }
        json nesting = json::array();
        for (std::size_t l = 1; l < levels.size(); ++l)
            nesting.push_back(to_json(check_nesting(levels[l - 1], levels[l])));
        result = json{{"levels", jlevels},
                      {"final", to_json(levels.back())},
                      {"bit_cursor", bits.cursor()},
                      {"invariants", invariants},
                      {"nesting", nesting}};
    } else if (kind == "e0") {
        IntervalSet set = self_similar_e0(depth);
        result = json{{"set", to_json(set)}, {"invariants", to_json(check_interval_set(set))}};
    } else if (kind == "one-over-n") {
        auto pts = one_over_n_points(n_max);
        json vals = json::array(), exact = json::array();
        for (const auto& p : pts) {
            vals.push_back(p.to_double());
            exact.push_back(p.str());
        }
        result = json{{"points", vals}, {"points_exact", exact}};
    } else {
        throw precondition_error("unknown construct kind: " + kind);
    }
    write_artifact(c, "construct", config, std::move(result));
    return 0;
}

int run_dim_estimate(const CommonOpts& c, const std::string& points_csv,
                     const std::string& intervals_json, int one_over_n,
                     const std::string& gauge, const std::string& kind,
                     const std::string& schedule, const std::string& method,
                     const std::string& mode, std::size_t window, double s_min, double s_max,
                     double tol) {
    GaugeFamily family = GaugeFamily::parse(gauge);
    DimKind dk = kind == "upper" ? DimKind::upper
               : kind == "lower" ? DimKind::lower
                                 : throw precondition_error("kind must be upper|lower");
    std::vector<Scale> sched = parse_schedule(schedule);
    if (method != "bisection" && method != "loglog" && method != "both")
        throw precondition_error("method must be bisection|loglog|both");
    if (mode != "exact" && mode != "greedy")
        throw precondition_error("mode must be exact|greedy");
    LoadedSet set = load_points(points_csv, intervals_json, one_over_n);

    json config{{"points", points_csv},     {"intervals", intervals_json},
                {"one_over_n", one_over_n}, {"gauge", gauge},
                {"kind", kind},             {"schedule", schedule},
                {"method", method},         {"mode", mode},
                {"window", window},         {"s_min", s_min},
                {"s_max", s_max},           {"tol", tol},
                {"max_nodes", node_budget(c)}};

    ProfileOptions popt;
    popt.cover.mode = mode == "greedy" ? CoverMode::greedy : CoverMode::exact;
    popt.cover.node_cap = node_budget(c);
    CoveringProfile prof = covering_profile(*set.space, set.ids, sched, popt);

    EstimatorConfig ecfg;
    ecfg.window = window;
    ecfg.s_min = s_min;
    ecfg.s_max = s_max;
    ecfg.tol = tol;

    json result{{"profile", to_json(prof)}, {"source", set.source}};
    LogCountProfile lp;
    for (const auto& e : prof.entries)
        lp.entries.emplace_back(e.delta, std::log2(static_cast<double>(e.n_cover)));
    DimensionEstimate primary;
    bool have_primary = false;
    if (method != "loglog") {
        primary = minkowski_dimension(prof, family, dk, ecfg);
        result["bisection"] = to_json(primary);
        have_primary = true;
    }
    if (method != "bisection") {
        DimensionEstimate fit = loglog_slope(prof, window);
        result["loglog"] = to_json(fit);
        if (!have_primary) primary = fit;
    }
    if (!c.table.empty()) write_text_file(c.table, estimate_diagnostics_csv(primary, lp));
    write_artifact(c, "dim-estimate", config, std::move(result));
    return 0;
}

int run_gauge_validate(const CommonOpts& c, const std::string& gauge,
                       const std::string& s_grid, const std::string& schedule,
                       const std::string& precision, const std::string& pairs_text,
                       int r_max) {
    GaugeFamily family = GaugeFamily::parse(gauge);
    std::vector<double> grid = parse_grid(s_grid);
    std::vector<Scale> sched = parse_schedule(schedule);
    std::vector<double> deltas;
    for (const auto& s : sched) deltas.push_back(s.value);

    json config{{"gauge", gauge},         {"s_grid", s_grid},    {"schedule", schedule},
                {"precision", precision}, {"pairs", pairs_text}, {"r_max", r_max}};

    json result{{"gauge_report", to_json(validate_gauge_family(family, grid, deltas))}};

    if (!precision.empty()) {
        PrecisionFamily alpha =
            precision == "canonical"
                ? PrecisionFamily::canonical()
                : precision == "harmonic"
                    ? PrecisionFamily::custom(
                          "alpha(s,r)=1/(r+1)",
                          [](double, int r) { return -std::log2(double(r + 1)); })
                    : throw precondition_error("precision must be canonical|harmonic");
        std::vector<std::pair<double, double>> pairs;
        std::stringstream ss(pairs_text);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            auto colon = cell.find(':');
            if (colon == std::string::npos)
                throw precondition_error("pairs: s:t comma-separated");
            pairs.emplace_back(std::stod(cell.substr(0, colon)),
                               std::stod(cell.substr(colon + 1)));
        }
        if (pairs.empty()) throw precondition_error("precision validation needs --pairs");
        result["precision_report"] =
            to_json(validate_precision_family(alpha, family, pairs, r_max));
    }
    write_artifact(c, "gauge-validate", config, std::move(result));
    return 0;
}

int run_hyper_verify(const CommonOpts& c, const std::string& net_kind,
                     const std::string& gauge, const std::string& schedule,
                     const std::string& kind, double tolerance) {
    GaugeFamily family = GaugeFamily::parse(gauge);
    DimKind dk = kind == "upper" ? DimKind::upper
               : kind == "lower" ? DimKind::lower
                                 : throw precondition_error("kind must be upper|lower");
    std::vector<Scale> sched = parse_schedule(schedule);
    NetGenerator gen;
    if (net_kind == "interval01")
        gen = unit_interval_grid_nets();
    else if (net_kind == "e0")
        gen = e0_midpoint_nets(12);
    else if (net_kind == "singleton")
        gen = singleton_nets();
    else
        throw precondition_error("net-kind must be interval01|e0|singleton");

    json config{{"net_kind", net_kind},
                {"gauge", gauge},
                {"schedule", schedule},
                {"kind", kind},
                {"tolerance", tolerance}};

    HyperVerifyConfig vcfg;
    vcfg.tolerance = tolerance;
    HyperVerifyReport rep = verify_hyperspace_minkowski(gen, family, sched, dk, vcfg);

    if (!c.table.empty()) {
        std::ostringstream os;
        os << "delta,lower,upper,exact\n"; // log2 hyperspace counts; exact not computed
        os.precision(17);
        for (std::size_t i = 0; i < rep.hyper_upper_profile.entries.size(); ++i) {
            os << rep.hyper_upper_profile.entries[i].first.value << ","
               << rep.hyper_lower_profile.entries[i].second << ","
               << rep.hyper_upper_profile.entries[i].second << ",\n";
        }
        write_text_file(c.table, os.str());
    }
    write_artifact(c, "hyper-verify", config, to_json(rep));
    return 0;
}

int run_algodim(const CommonOpts& c, double point, bool have_point,
                const std::string& synthetic, const std::string& bits_file, int depth,
                int r_min, const std::string& gauge, const std::string& kind,
                bool jump_check) {
    GaugeFamily family = GaugeFamily::parse(gauge);
    DimKind dk = kind == "upper" ? DimKind::upper
               : kind == "lower" ? DimKind::lower
                                 : throw precondition_error("kind must be upper|lower");
    int sources = (have_point ? 1 : 0) + !synthetic.empty() + !bits_file.empty();
    if (sources != 1)
        throw precondition_error("give exactly one of --point, --synthetic, --point-bits");
    if (depth < r_min + 3) throw precondition_error("depth too shallow for the estimator");

    json config{{"point", have_point ? json(point) : json()},
                {"synthetic", synthetic},
                {"point_bits", bits_file},
                {"depth", depth},
                {"r_min", r_min},
                {"gauge", gauge},
                {"kind", kind},
                {"jump_check", jump_check}};

    ComplexityProfile prof;
    if (have_point) {
        std::vector<int> rs;
        for (int r = r_min; r <= depth; ++r) rs.push_back(r);
        prof = complexity_profile_of_point(point, rs);
    } else if (!bits_file.empty()) {
        BitSource bits = BitSource::from_file(bits_file);
        std::vector<std::uint8_t> xbits;
        for (int i = 0; i < depth + 2; ++i)
            xbits.push_back(static_cast<std::uint8_t>(bits.next()));
        std::vector<int> rs;
        for (int r = r_min; r <= depth; ++r) rs.push_back(r);
        prof = complexity_profile_of_bits(xbits, rs);
    } else {
        prof = synthetic_profile(synthetic, r_min, depth);
    }

    json result{{"profile", to_json(prof)}};
    try {
        DimensionEstimate est = gauged_dim_from_profile(prof, family, dk);
        result["estimate"] = to_json(est);
    } catch (const no_bracket_error& e) {
        // a profile whose 2^K growth swamps the whole s-range: the divergence
        // is the result, not a failure of the run
        result["estimate"] = json{{"diverged", true}, {"message", e.what()}};
    }
    result["direct_ratio"] = direct_ratio_dimension(prof, dk);
    if (jump_check) {
        JumpCharacterization jc = jump_characterization(prof, family, dk);
        result["jump_characterization"] = json{{"direct", to_json(jc.direct)},
                                               {"jumped", to_json(jc.jumped)},
                                               {"discrepancy", jc.discrepancy}};
    }
    if (!c.table.empty()) write_text_file(c.table, complexity_csv(prof));
    write_artifact(c, "algodim", config, std::move(result));
    return 0;
}

// naive full-enumeration oracle for the oracle-suite command
std::uint64_t naive_min_cover(const std::vector<std::uint64_t>& covers, int n_elements) {
    std::uint64_t full = (1ull << n_elements) - 1;
    std::uint64_t best = ~0ull;
    for (std::uint64_t pick = 0; pick < (1ull << covers.size()); ++pick) {
        std::uint64_t got = 0;
        std::uint64_t used = 0;
        for (std::size_t i = 0; i < covers.size(); ++i)
            if (pick >> i & 1) {
                got |= covers[i];
                ++used;
            }
        if (got == full && used < best) best = used;
    }
    return best;
}

int run_oracle_suite(const CommonOpts& c, int trials, int max_candidates) {
    if (max_candidates < 2 || max_candidates > 16)
        throw precondition_error("max-candidates must be in [2,16]");
    json config{{"trials", trials}, {"max_candidates", max_candidates}};
    std::uint64_t state = c.seed ? c.seed : 0x9e3779b97f4a7c15ull;
    auto rnd = [&]() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    auto uniform = [&]() { return static_cast<double>(rnd() >> 11) * 0x1.0p-53; };

    int mismatches = 0;
    int done = 0;
    for (int t = 0; t < trials; ++t) {
        int n = 2 + static_cast<int>(rnd() % 7);
        EuclideanSpace plane(t % 2 ? 2u : 1u);
        std::vector<PointId> E;
        for (int i = 0; i < n; ++i) {
            if (plane.dimension() == 1)
                E.push_back(plane.add_point(uniform()));
            else
                E.push_back(plane.add_point({uniform(), uniform()}));
        }
        Scale delta = Scale::of(0.03 + 0.4 * uniform());
        auto clone = plane.clone();
        std::vector<PointId> cands = E;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                cands.push_back(clone->add_midpoint(E[i], E[j]));
        if (cands.size() > static_cast<std::size_t>(max_candidates)) continue;

        std::vector<std::uint64_t> covers;
        for (PointId cand : cands) {
            std::uint64_t m = 0;
            for (std::size_t e = 0; e < E.size(); ++e)
                if (clone->in_open_ball(cand, E[e], delta)) m |= 1ull << e;
            covers.push_back(m);
        }
        if (covering_number(plane, E, delta).count != naive_min_cover(covers, n)) ++mismatches;

        std::uint64_t best = 0;
        for (std::uint64_t pick = 1; pick < (1ull << n); ++pick) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j)
                    if ((pick >> i & 1) && (pick >> j & 1) &&
                        !plane.separated(E[i], E[j], delta))
                        ok = false;
            if (ok)
                best = std::max<std::uint64_t>(
                    best, static_cast<std::uint64_t>(__builtin_popcountll(pick)));
        }
        if (packing_number(plane, E, delta).count != best) ++mismatches;
        ++done;
    }
    json result{{"trials", trials}, {"instances_checked", done}, {"mismatches", mismatches}};
    write_artifact(c, "oracle-suite", config, std::move(result));
    return mismatches == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gauged fractal dimension toolkit"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "generate seven-adic/1-n point sets");
    CommonOpts c_construct;
    std::string kind = "cantor7", bits_file;
    int depth = 6, n_max = 0;
    construct->add_option("--kind", kind, "cantor7|e0|one-over-n");
    construct->add_option("--depth", depth, "construction depth");
    construct->add_option("--n-max", n_max, "point count for one-over-n");
    construct->add_option("--bits-file", bits_file, "ASCII 0/1 bit stream");
    add_common(construct, c_construct);

    auto* dim = app.add_subcommand("dim-estimate", "covering profile + dimension estimates");
    CommonOpts c_dim;
    std::string points_csv, intervals_json, gauge = "theta", dkind = "upper";
    std::string schedule = "geo:2,12", method = "both", mode = "exact";
    int one_over_n = 0;
    std::size_t window = 0;
    double s_min = 1e-3, s_max = 64.0, tol = 1e-3;
    dim->add_option("--points", points_csv, "CSV point cloud (one point per row)");
    dim->add_option("--intervals", intervals_json, "interval-set JSON (construct artifact)");
    dim->add_option("--one-over-n", one_over_n, "use {1/n : n <= N}");
    dim->add_option("--gauge", gauge, "theta | pow(c) | jump(...)");
    dim->add_option("--kind", dkind, "upper|lower");
    dim->add_option("--schedule", schedule, "geo:BASE,COUNT / geo:BASE,FIRST,LAST / list:...");
    dim->add_option("--method", method, "bisection|loglog|both");
    dim->add_option("--mode", mode, "exact|greedy covering");
    dim->add_option("--window", window, "trend window (0: finest half)");
    dim->add_option("--s-min", s_min, "bisection range minimum");
    dim->add_option("--s-max", s_max, "bisection range maximum");
    dim->add_option("--tol", tol, "bisection tolerance");
    add_common(dim, c_dim);

    auto* gv = app.add_subcommand("gauge-validate", "sampled gauge/precision axioms");
    CommonOpts c_gv;
    std::string gv_gauge = "theta", s_grid = "0.5,1,2", gv_sched = "geo:2,20";
    std::string precision, pairs = "1:2";
    int r_max = 40;
    gv->add_option("--gauge", gv_gauge, "gauge descriptor");
    gv->add_option("--s-grid", s_grid, "comma-separated parameters");
    gv->add_option("--schedule", gv_sched, "delta schedule");
    gv->add_option("--precision", precision, "canonical|harmonic (optional)");
    gv->add_option("--pairs", pairs, "s:t pairs for precision checks");
    gv->add_option("--r-max", r_max, "precision index range");
    add_common(gv, c_gv);

    auto* hv = app.add_subcommand("hyper-verify", "hyperspace Minkowski theorem desk check");
    CommonOpts c_hv;
    std::string net_kind = "interval01", hv_gauge = "theta", hv_sched = "geo:2,2,14";
    std::string hv_kind = "upper";
    double tolerance = 0.1;
    hv->add_option("--net-kind", net_kind, "interval01|e0|singleton");
    hv->add_option("--gauge", hv_gauge, "base gauge family (jump applied to K side)");
    hv->add_option("--schedule", hv_sched, "delta schedule");
    hv->add_option("--kind", hv_kind, "upper|lower");
    hv->add_option("--tolerance", tolerance, "pass threshold on the difference");
    add_common(hv, c_hv);

    auto* ad = app.add_subcommand("algodim", "complexity profiles + gauged dimensions");
    CommonOpts c_ad;
    double point = 0.0;
    std::string synthetic, point_bits, ad_gauge = "theta", ad_kind = "upper";
    int ad_depth = 20, ad_rmin = 1;
    bool jump_check = false;
    auto* point_opt = ad->add_option("--point", point, "point of [0,1]");
    ad->add_option("--synthetic", synthetic, "ratio:a | pow2:a | alt:a,b | const:c");
    ad->add_option("--point-bits", point_bits, "file with the point's binary expansion");
    ad->add_option("--depth", ad_depth, "finest resolution r (delta = 2^-r)");
    ad->add_option("--r-min", ad_rmin, "coarsest resolution");
    ad->add_option("--gauge", ad_gauge, "gauge descriptor");
    ad->add_option("--kind", ad_kind, "upper|lower");
    ad->add_flag("--jump-check", jump_check, "also run the jump characterization");
    add_common(ad, c_ad);

    auto* os_cmd = app.add_subcommand("oracle-suite", "exact solvers vs naive enumeration");
    CommonOpts c_os;
    int trials = 500, max_candidates = 12;
    os_cmd->add_option("--trials", trials, "random instances");
    os_cmd->add_option("--max-candidates", max_candidates, "naive enumeration cap");
    add_common(os_cmd, c_os);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed())
            return run_construct(c_construct, kind, depth, n_max, bits_file);
        if (dim->parsed())
            return run_dim_estimate(c_dim, points_csv, intervals_json, one_over_n, gauge,
                                    dkind, schedule, method, mode, window, s_min, s_max, tol);
        if (gv->parsed())
            return run_gauge_validate(c_gv, gv_gauge, s_grid, gv_sched, precision, pairs, r_max);
        if (hv->parsed())
            return run_hyper_verify(c_hv, net_kind, hv_gauge, hv_sched, hv_kind, tolerance);
        if (ad->parsed())
            return run_algodim(c_ad, point, point_opt->count() > 0, synthetic, point_bits,
                               ad_depth, ad_rmin, ad_gauge, ad_kind, jump_check);
        if (os_cmd->parsed()) return run_oracle_suite(c_os, trials, max_candidates);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 1;
    }
}
