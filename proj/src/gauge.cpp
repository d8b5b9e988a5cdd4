#include "gaugedim/gauge.hpp"

#include <cmath>
#include <sstream>

#include "gaugedim/errors.hpp"

namespace gaugedim {

struct GaugeFamily::Node {
    enum class Kind { Pow, Jump, Custom } kind;
    double c = 1.0;                                        // Pow: delta^{c s}
    std::shared_ptr<const Node> inner;                     // Jump
    std::function<long double(double, double)> fn;         // Custom
    std::string descriptor;

    long double eval(double s, double delta) const {
        switch (kind) {
            case Kind::Pow:
                return static_cast<long double>(c) * s *
                       std::log2(static_cast<long double>(delta));
            case Kind::Jump:
                // log2 jump = -1/phi = -2^{-log2 phi}, exact in log space
                return -std::exp2(-inner->eval(s, delta));
            case Kind::Custom:
                return fn(s, delta);
        }
        return 0.0L;
    }
};

namespace {

void check_eval_args(double s, double delta) {
    if (!(s > 0.0)) throw precondition_error("gauge parameter s must be positive");
    if (!(delta > 0.0)) throw precondition_error("gauge evaluated at delta <= 0");
}

} // namespace

GaugeFamily GaugeFamily::theta() {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Pow;
    node->c = 1.0;
    node->descriptor = "theta";
    return GaugeFamily(node);
}

GaugeFamily GaugeFamily::power_scaled(double c) {
    if (!(c > 0.0)) throw precondition_error("pow(c) gauge needs c > 0");
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Pow;
    node->c = c;
    std::ostringstream os;
    os << "pow(" << c << ")";
    node->descriptor = os.str();
    return GaugeFamily(node);
}

GaugeFamily GaugeFamily::jump_of(const GaugeFamily& base) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Jump;
    node->inner = base.node_;
    node->descriptor = "jump(" + base.descriptor() + ")";
    return GaugeFamily(node);
}

GaugeFamily GaugeFamily::custom(std::string descriptor,
                                std::function<long double(double, double)> log2_eval) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Custom;
    node->fn = std::move(log2_eval);
    node->descriptor = std::move(descriptor);
    return GaugeFamily(node);
}

GaugeFamily GaugeFamily::parse(const std::string& descriptor) {
    std::string d;
    for (char ch : descriptor)
        if (!std::isspace(static_cast<unsigned char>(ch))) d.push_back(ch);
    if (d == "theta") return theta();
    if (d.rfind("jump(", 0) == 0 && d.back() == ')')
        return jump_of(parse(d.substr(5, d.size() - 6)));
    if (d.rfind("pow(", 0) == 0 && d.back() == ')') {
        std::string arg = d.substr(4, d.size() - 5);
        size_t used = 0;
        double c = 0.0;
        try {
            c = std::stod(arg, &used);
        } catch (const std::exception&) {
            throw precondition_error("bad gauge descriptor: " + descriptor);
        }
        if (used != arg.size() || !(c > 0.0))
            throw precondition_error("bad gauge descriptor: " + descriptor);
        return power_scaled(c);
    }
    throw precondition_error("bad gauge descriptor: " + descriptor);
}

double GaugeFamily::log2_eval(double s, double delta) const {
    long double v = log2_eval_l(s, delta);
    if (v < -1.0e308L) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(v);
}

long double GaugeFamily::log2_eval_l(double s, double delta) const {
    check_eval_args(s, delta);
    return node_->eval(s, delta);
}

GaugeFunction GaugeFamily::member(double s) const { return GaugeFunction(*this, s); }

const std::string& GaugeFamily::descriptor() const { return node_->descriptor; }

bool GaugeFamily::is_jump() const { return node_->kind == Node::Kind::Jump; }

GaugeFamily GaugeFamily::jump_base() const {
    if (!is_jump()) throw precondition_error("jump_base on a non-jump family");
    return GaugeFamily(node_->inner);
}

GaugeFunction::GaugeFunction(GaugeFamily family, double s) : family_(std::move(family)), s_(s) {
    if (!(s > 0.0)) throw precondition_error("gauge parameter s must be positive");
}

std::string GaugeFunction::descriptor() const {
    std::ostringstream os;
    os << family_.descriptor() << "[s=" << s_ << "]";
    return os.str();
}

PrecisionFamily PrecisionFamily::canonical() {
    return PrecisionFamily(
        "alpha(s,r)=2^(-s*r)",
        [](double s, int r) { return -s * static_cast<double>(r); }, true);
}

PrecisionFamily PrecisionFamily::custom(std::string descriptor,
                                        std::function<double(double, int)> log2_alpha) {
    return PrecisionFamily(std::move(descriptor), std::move(log2_alpha), false);
}

double PrecisionFamily::log2_alpha(double s, int r) const {
    if (!(s > 0.0)) throw precondition_error("precision parameter s must be positive");
    if (r < 0) throw precondition_error("precision index r must be >= 0");
    return log2_alpha_(s, r);
}

bool PrecisionFamily::exact_at(double s, int r) const {
    if (!canonical_) return false;
    double sr = s * r;
    return sr == std::floor(sr) && std::abs(sr) < 1024.0;
}

PrecisionFamily canonical_precision(double s) {
    if (!(s > 0.0)) throw precondition_error("canonical_precision needs s > 0");
    return PrecisionFamily::canonical();
}

namespace {

std::string sample_str(double s, double delta) {
    std::ostringstream os;
    os << "s=" << s << " delta=" << delta;
    return os.str();
}

} // namespace

ValidationReport validate_gauge_family(const GaugeFamily& family,
                                       const std::vector<double>& s_grid,
                                       const std::vector<double>& delta_schedule,
                                       const GaugeValidationConfig& cfg) {
    if (s_grid.empty()) throw precondition_error("empty s grid");
    for (size_t i = 1; i < s_grid.size(); ++i)
        if (!(s_grid[i] > s_grid[i - 1])) throw precondition_error("s grid must be ascending");
    if (delta_schedule.size() < 4) throw precondition_error("delta schedule too short");
    for (size_t i = 1; i < delta_schedule.size(); ++i)
        if (!(delta_schedule[i] < delta_schedule[i - 1] && delta_schedule[i] > 0.0))
            throw precondition_error("delta schedule must be strictly decreasing and positive");

    ValidationReport rep;
    rep.subject = family.descriptor();

    CheckItem positivity{"positive_and_finite", true, "", {}};
    CheckItem monotone{"nondecreasing_in_delta", true, "", {}};
    CheckItem vanish{"vanishes_at_zero_surrogate", true, "", {{"log2_threshold", cfg.vanish_log2_threshold}}};
    CheckItem cont_l{"continuity_left", true, "", {}};
    CheckItem cont_r{"continuity_right", true, "", {}};
    CheckItem cont2{"continuity_two_sided", true, "", {}};
    CheckItem ordering{"family_ordering_o_small", true, "", {}};

    const size_t n = delta_schedule.size();
    for (double s : s_grid) {
        std::vector<long double> vals(n);
        for (size_t i = 0; i < n; ++i) {
            vals[i] = family.log2_eval_l(s, delta_schedule[i]);
            if (std::isnan(static_cast<double>(vals[i])) || vals[i] > 1.0e307L) {
                if (positivity.pass) {
                    positivity.pass = false;
                    positivity.witness = sample_str(s, delta_schedule[i]);
                }
            }
        }
        // schedule is descending, so log2 values must be nonincreasing along it
        for (size_t i = 1; i < n; ++i) {
            long double slack = cfg.monotone_slack * (std::fabs((double)vals[i - 1]) + 1.0);
            if (vals[i] > vals[i - 1] + slack && monotone.pass) {
                monotone.pass = false;
                monotone.witness = sample_str(s, delta_schedule[i]);
            }
        }
        // eventual decrease toward 0: strictly decreasing tail + small last value
        size_t tail = n / 2;
        bool dec = true;
        for (size_t i = tail + 1; i < n; ++i)
            if (!(vals[i] < vals[i - 1])) dec = false;
        if ((!dec || !(vals[n - 1] < cfg.vanish_log2_threshold)) && vanish.pass) {
            vanish.pass = false;
            vanish.witness = sample_str(s, delta_schedule[n - 1]) +
                             (dec ? " (last value above threshold)" : " (tail not decreasing)");
        }
        // continuity surrogate on interior samples, geometric h-schedule
        for (size_t i = 1; i + 1 < n; i += 2) {
            double d = delta_schedule[i];
            long double base = vals[i];
            long double lastl = 0.0L, lastr = 0.0L, firstl = 0.0L, firstr = 0.0L;
            for (int j = 1; j <= cfg.continuity_h_steps; ++j) {
                double h = d * std::exp2(-(2.0 + j));
                lastl = std::fabs((double)(family.log2_eval_l(s, d - h) - base));
                lastr = std::fabs((double)(family.log2_eval_l(s, d + h) - base));
                if (j == 1) {
                    firstl = lastl;
                    firstr = lastr;
                }
            }
            long double tol = cfg.continuity_rel_tol * (std::fabs((double)base) + 1.0);
            bool okl = lastl <= tol || lastl < firstl * 1e-2L;
            bool okr = lastr <= tol || lastr < firstr * 1e-2L;
            if (!okl && cont_l.pass) {
                cont_l.pass = false;
                cont_l.witness = sample_str(s, d);
            }
            if (!okr && cont_r.pass) {
                cont_r.pass = false;
                cont_r.witness = sample_str(s, d);
            }
        }
    }
    cont2.pass = cont_l.pass && cont_r.pass;
    if (!cont2.pass) cont2.witness = cont_l.pass ? cont_r.witness : cont_l.witness;
    cont2.data["one_sided_only"] = (cont_l.pass != cont_r.pass) ? 1.0 : 0.0;

    // ordering: for s > t, phi_s/phi_t eventually monotone decreasing toward 0
    for (size_t a = 0; a + 1 < s_grid.size(); ++a) {
        double t = s_grid[a], s = s_grid[a + 1];
        std::vector<long double> ratio(n);
        for (size_t i = 0; i < n; ++i)
            ratio[i] = family.log2_eval_l(s, delta_schedule[i]) - family.log2_eval_l(t, delta_schedule[i]);
        size_t tail = n / 2;
        bool dec = true;
        for (size_t i = tail + 1; i < n; ++i)
            if (!(ratio[i] < ratio[i - 1])) dec = false;
        bool small = ratio[n - 1] < cfg.vanish_log2_threshold;
        if (!(dec && small) && ordering.pass) {
            ordering.pass = false;
            ordering.witness = "pair t=" + std::to_string(t) + " s=" + std::to_string(s);
        }
    }

    rep.checks = {positivity, monotone, vanish, cont_l, cont_r, cont2, ordering};
    return rep;
}

ValidationReport validate_precision_family(const PrecisionFamily& alpha,
                                           const GaugeFamily& family,
                                           const std::vector<std::pair<double, double>>& pairs,
                                           int r_max,
                                           const PrecisionValidationConfig& cfg) {
    if (r_max < 8) throw precondition_error("precision validation needs r_max >= 8");
    for (const auto& [s, t] : pairs)
        if (!(s < t)) throw precondition_error("precision pairs need s < t");

    ValidationReport rep;
    rep.subject = alpha.descriptor() + " vs " + family.descriptor();

    for (const auto& [s, t] : pairs) {
        std::ostringstream tag;
        tag << "(s=" << s << ",t=" << t << ")";

        // vanishing of alpha_s
        CheckItem van{"alpha_vanishes " + tag.str(), true, "", {}};
        double prev = alpha.log2_alpha(s, 0);
        for (int r = 1; r <= r_max; ++r) {
            double cur = alpha.log2_alpha(s, r);
            if (!(cur < prev)) {
                van.pass = false;
                van.witness = "r=" + std::to_string(r);
                break;
            }
            prev = cur;
        }
        double c_rate = -alpha.log2_alpha(s, r_max) / r_max;
        van.data["decay_rate_c"] = c_rate;
        if (!(c_rate > 0.0)) {
            van.pass = false;
            if (van.witness.empty()) van.witness = "nonpositive decay rate";
        }

        // ratio bound phi_s(alpha(r)) <= C phi_s(alpha(r+1))
        CheckItem ratio{"gauge_ratio_bound " + tag.str(), true, "", {}};
        double log2C = -std::numeric_limits<double>::infinity();
        for (int r = 0; r < r_max; ++r) {
            double a0 = std::exp2(alpha.log2_alpha(s, r));
            double a1 = std::exp2(alpha.log2_alpha(s, r + 1));
            double d = family.log2_eval(s, a0) - family.log2_eval(s, a1);
            if (d > log2C) log2C = d;
        }
        ratio.data["log2_C"] = log2C;
        if (!(std::exp2(log2C) <= cfg.ratio_constant_cap)) {
            ratio.pass = false;
            ratio.witness = "constant above cap";
        }

        // cross-sum partial sums Cauchy within tested prefix
        CheckItem cross{"cross_sum_cauchy " + tag.str(), true, "", {}};
        double sum = 0.0, comp = 0.0, last_term = 0.0;
        for (int r = 0; r <= r_max; ++r) {
            double a = std::exp2(alpha.log2_alpha(s, r));
            double term = std::exp2(family.log2_eval(t, a) - family.log2_eval(s, a));
            // Kahan
            double y = term - comp;
            double u = sum + y;
            comp = (u - sum) - y;
            sum = u;
            last_term = term;
        }
        cross.data["partial_sum"] = sum;
        cross.data["last_increment"] = last_term;
        if (!(last_term < cfg.cauchy_increment_tol)) {
            cross.pass = false;
            cross.witness = "non-Cauchy: increment " + std::to_string(last_term) + " at r_max";
        }

        rep.checks.push_back(van);
        rep.checks.push_back(ratio);
        rep.checks.push_back(cross);
    }
    return rep;
}

} // namespace gaugedim
