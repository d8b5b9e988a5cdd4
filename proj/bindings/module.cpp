#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaugedim/algodim.hpp"
#include "gaugedim/constructions.hpp"
#include "gaugedim/covering.hpp"
#include "gaugedim/dimension.hpp"
#include "gaugedim/errors.hpp"
#include "gaugedim/hyperspace.hpp"

namespace py = pybind11;
using namespace gaugedim;

namespace {

DimKind parse_kind(const std::string& kind) {
    if (kind == "upper") return DimKind::upper;
    if (kind == "lower") return DimKind::lower;
    throw precondition_error("kind must be 'upper' or 'lower'");
}

EuclideanSpace space_of(const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw precondition_error("empty point set");
    EuclideanSpace sp(points.front().size());
    for (const auto& p : points) sp.add_point(p);
    return sp;
}

std::vector<PointId> all_ids(const MetricSpace& sp) {
    std::vector<PointId> ids(sp.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<PointId>(i);
    return ids;
}

py::dict estimate_dict(const DimensionEstimate& est) {
    py::dict d;
    d["value"] = est.value;
    d["bracket"] = py::make_tuple(est.s_lo, est.s_hi);
    d["kind"] = to_string(est.kind);
    d["method"] = est.method;
    d["gauge"] = est.gauge;
    return d;
}

LogCountProfile log_profile(const std::vector<double>& deltas,
                            const std::vector<double>& log2_counts) {
    if (deltas.size() != log2_counts.size())
        throw precondition_error("deltas and counts must have equal length");
    LogCountProfile lp;
    for (std::size_t i = 0; i < deltas.size(); ++i)
        lp.entries.emplace_back(Scale::of(deltas[i]), log2_counts[i]);
    return lp;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "gauged fractal dimension toolkit (C++ core)";

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<no_bracket_error>(m, "NoBracketError", PyExc_RuntimeError);

    m.def("gauge_log2_eval",
          [](const std::string& descriptor, double s, double delta) {
              return GaugeFamily::parse(descriptor).log2_eval(s, delta);
          },
          py::arg("descriptor"), py::arg("s"), py::arg("delta"),
          "log2 of phi_s(delta) for a gauge descriptor (theta, pow(c), jump(...))");

    m.def("lz78_code_length",
          [](const std::string& bits) { return lz78_code_length(bits); },
          py::arg("bits"), "LZ78 code length in bits of a 0/1 string");

    m.def("covering_number",
          [](const std::vector<std::vector<double>>& points, double delta,
             const std::string& mode) {
              EuclideanSpace sp = space_of(points);
              CoverOptions opt;
              opt.mode = mode == "greedy" ? CoverMode::greedy : CoverMode::exact;
              return covering_number(sp, all_ids(sp), Scale::of(delta), opt).count;
          },
          py::arg("points"), py::arg("delta"), py::arg("mode") = "exact",
          "minimum number of open delta-balls covering the points");

    m.def("packing_number",
          [](const std::vector<std::vector<double>>& points, double delta) {
              EuclideanSpace sp = space_of(points);
              return packing_number(sp, all_ids(sp), Scale::of(delta)).count;
          },
          py::arg("points"), py::arg("delta"),
          "maximum number of points with pairwise distance >= delta");

    m.def("hausdorff_distance",
          [](const std::vector<std::vector<double>>& a,
             const std::vector<std::vector<double>>& b) {
              if (a.empty() || b.empty()) throw precondition_error("empty set");
              if (a.front().size() != b.front().size())
                  throw precondition_error("dimension mismatch");
              EuclideanSpace sp(a.front().size());
              std::vector<PointId> ia, ib;
              for (const auto& p : a) ia.push_back(sp.add_point(p));
              for (const auto& p : b) ib.push_back(sp.add_point(p));
              return hausdorff_distance(sp, ia, ib);
          },
          py::arg("a"), py::arg("b"), "Hausdorff distance between finite point sets");

    m.def("hyperspace_bounds",
          [](const std::vector<std::vector<double>>& points, double delta, bool exact) {
              EuclideanSpace sp = space_of(points);
              HyperCoverResult r = hyperspace_covering_number(
                  sp, all_ids(sp), Scale::of(delta),
                  exact ? HyperMode::exact : HyperMode::bounds);
              py::dict d;
              d["lower"] = r.lower;
              d["upper"] = r.upper;
              d["packing_m"] = r.packing_m;
              d["covering_n"] = r.covering_n;
              if (r.exact) d["exact"] = *r.exact;
              return d;
          },
          py::arg("points"), py::arg("delta"), py::arg("exact") = true,
          "covering-number bounds for the hyperspace of a finite set");

    m.def("minkowski_estimate",
          [](const std::vector<double>& deltas, const std::vector<double>& counts,
             const std::string& gauge, const std::string& kind) {
              std::vector<double> logs;
              for (double c : counts) {
                  if (!(c > 0)) throw precondition_error("counts must be positive");
                  logs.push_back(std::log2(c));
              }
              DimensionEstimate est =
                  estimate_log_profile(log_profile(deltas, logs), GaugeFamily::parse(gauge),
                                       parse_kind(kind), {}, "bisection");
              return estimate_dict(est);
          },
          py::arg("deltas"), py::arg("counts"), py::arg("gauge") = "theta",
          py::arg("kind") = "upper",
          "gauged Minkowski dimension estimate from a covering profile");

    m.def("loglog_slope",
          [](const std::vector<double>& deltas, const std::vector<double>& counts) {
              std::vector<double> logs;
              for (double c : counts) logs.push_back(std::log2(c));
              return loglog_slope_log_profile(log_profile(deltas, logs)).value;
          },
          py::arg("deltas"), py::arg("counts"),
          "least-squares box-counting slope of log2 N against log2 1/delta");

    m.def("e0_intervals",
          [](int depth) {
              IntervalSet set = self_similar_e0(depth);
              py::dict d;
              d["level"] = set.level;
              d["nums"] = set.nums;
              d["labels"] = set.labels;
              return d;
          },
          py::arg("depth"), "level-`depth` intervals of the base-7 {1,4} digit set");

    m.def("cantor7_intervals",
          [](std::uint64_t seed, int depth) {
              BitSource bits = BitSource::seeded(seed);
              auto levels = build_construction(bits, depth);
              py::dict d;
              d["level"] = levels.back().level;
              d["nums"] = levels.back().nums;
              d["labels"] = levels.back().labels;
              d["bit_cursor"] = bits.cursor();
              return d;
          },
          py::arg("seed"), py::arg("depth"),
          "randomized seven-adic construction at the given depth");

    m.def("one_over_n",
          [](int n_max) {
              std::vector<double> out;
              for (const auto& r : one_over_n_points(n_max)) out.push_back(r.to_double());
              return out;
          },
          py::arg("n_max"), "{1/n : 1 <= n <= n_max}");

    m.def("point_complexity",
          [](double x, int r) { return point_complexity_at(x, r); },
          py::arg("x"), py::arg("r"),
          "LZ78-proxy complexity of a point of [0,1] at precision 2^-r");

    m.def("proxy_dimension",
          [](double x, int depth, const std::string& kind, const std::string& gauge) {
              std::vector<int> rs;
              for (int r = 1; r <= depth; ++r) rs.push_back(r);
              ComplexityProfile prof = complexity_profile_of_point(x, rs);
              return gauged_dim_from_profile(prof, GaugeFamily::parse(gauge),
                                             parse_kind(kind))
                  .value;
          },
          py::arg("x"), py::arg("depth") = 20, py::arg("kind") = "upper",
          py::arg("gauge") = "theta",
          "gauged algorithmic-dimension proxy of a point of [0,1]");

    m.def("jump_characterization",
          [](const std::string& synthetic, int r_min, int r_max, const std::string& kind) {
              ComplexityProfile prof = synthetic_profile(synthetic, r_min, r_max);
              JumpCharacterization jc =
                  jump_characterization(prof, GaugeFamily::theta(), parse_kind(kind));
              return py::make_tuple(jc.direct.value, jc.jumped.value);
          },
          py::arg("synthetic"), py::arg("r_min") = 1, py::arg("r_max") = 24,
          py::arg("kind") = "upper",
          "(s_direct, s_jump) for a synthetic complexity profile");

    m.def("verify_hyperspace_unit_interval",
          [](int k_min, int k_max, double tolerance) {
              HyperVerifyConfig cfg;
              cfg.tolerance = tolerance;
              HyperVerifyReport rep = verify_hyperspace_minkowski(
                  unit_interval_grid_nets(), GaugeFamily::theta(),
                  geometric_schedule(2, k_min, k_max), DimKind::upper, cfg);
              py::dict d;
              d["base"] = rep.base.value;
              d["hyper_upper"] = rep.hyper_upper.value;
              d["hyper_lower"] = rep.hyper_lower.value;
              d["pass"] = rep.pass;
              return d;
          },
          py::arg("k_min") = 2, py::arg("k_max") = 14, py::arg("tolerance") = 0.1,
          "hyperspace Minkowski theorem desk check on [0,1] grid nets");

    m.attr("__version__") = "0.1.0";
}
