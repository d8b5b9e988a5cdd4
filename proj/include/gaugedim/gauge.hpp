#ifndef GAUGEDIM_GAUGE_HPP
#define GAUGEDIM_GAUGE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gaugedim/logspace.hpp"
#include "gaugedim/report.hpp"

namespace gaugedim {

class GaugeFunction;

/// One-parameter family s -> phi_s of gauge functions, evaluated in log2
/// space. phi_s(delta) = o(phi_t(delta)) as delta -> 0+ for s > t.
///
/// Built-in forms cover the config grammar: `theta` (delta^s), `pow(c)`
/// (delta^{c s}), `jump(...)` (2^{-1/phi_s(delta)}), arbitrarily nested.
class GaugeFamily {
public:
    /// Canonical family theta_s(delta) = delta^s.
    static GaugeFamily theta();

    /// phi_s(delta) = delta^{c s}.
    static GaugeFamily power_scaled(double c);

    /// Jump of a family: 2^{-1/phi_s(delta)}.
    static GaugeFamily jump_of(const GaugeFamily& base);

    /// Family from an arbitrary log2 evaluator (test/synthetic use).
    static GaugeFamily custom(std::string descriptor,
                              std::function<long double(double, double)> log2_eval);

    /// Parse a config descriptor: theta | pow(c) | jump(<descriptor>).
    static GaugeFamily parse(const std::string& descriptor);

    /// log2 phi_s(delta); delta = 0 is a precondition error, not value 0.
    double log2_eval(double s, double delta) const;

    /// Extended-precision variant used by trend evaluation; jump gauges
    /// reach magnitudes far beyond double range.
    long double log2_eval_l(double s, double delta) const;

    LinearValue eval(double s, double delta) const { return to_linear(Log2Value::from_log2(log2_eval(s, delta))); }

    GaugeFunction member(double s) const;

    const std::string& descriptor() const;

    bool is_jump() const;
    GaugeFamily jump_base() const; // precondition: is_jump()

private:
    struct Node;
    explicit GaugeFamily(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// A single gauge function: a family member at fixed parameter s.
class GaugeFunction {
public:
    GaugeFunction(GaugeFamily family, double s);

    double log2_eval(double delta) const { return family_.log2_eval(s_, delta); }
    LinearValue eval(double delta) const { return family_.eval(s_, delta); }

    double parameter() const { return s_; }
    std::string descriptor() const;

private:
    GaugeFamily family_;
    double s_;
};

/// Parameterized precision sequences alpha_s(r) -> 0 with controlled gauge
/// ratios; hypothesis for the Tricot-style bounds.
class PrecisionFamily {
public:
    /// alpha_s(r) = 2^{-s r} (precision family for theta).
    static PrecisionFamily canonical();

    static PrecisionFamily custom(std::string descriptor,
                                  std::function<double(double, int)> log2_alpha);

    double log2_alpha(double s, int r) const;
    double alpha(double s, int r) const { return std::exp2(log2_alpha(s, r)); }

    const std::string& descriptor() const { return descriptor_; }

    /// True when alpha_s(r) is exactly representable (canonical with integer s*r).
    bool exact_at(double s, int r) const;

private:
    PrecisionFamily(std::string d, std::function<double(double, int)> f, bool canon)
        : descriptor_(std::move(d)), log2_alpha_(std::move(f)), canonical_(canon) {}
    std::string descriptor_;
    std::function<double(double, int)> log2_alpha_;
    bool canonical_ = false;
};

/// The canonical precision family; s is validated (> 0) as the principal
/// parameter of interest.
PrecisionFamily canonical_precision(double s);

struct GaugeValidationConfig {
    double vanish_log2_threshold = -6.64; // value below ~1e-2 at the finest scale
    double monotone_slack = 1e-12;        // fp noise allowance, relative
    double continuity_rel_tol = 1e-3;     // |L(d+-h)-L(d)| shrink target at finest h
    int continuity_h_steps = 10;          // geometric h-schedule length
};

/// Sampled validation of the gauge-family axioms over an s-grid and a
/// descending delta schedule. Failures are data, not errors. Continuity is
/// checked two-sided; one-sided-only passes are recorded separately.
ValidationReport validate_gauge_family(const GaugeFamily& family,
                                       const std::vector<double>& s_grid,
                                       const std::vector<double>& delta_schedule,
                                       const GaugeValidationConfig& cfg = {});

struct PrecisionValidationConfig {
    double cauchy_increment_tol = 1e-6;
    double ratio_constant_cap = 4294967296.0; // 2^32
};

/// Sampled validation of a precision family against a gauge family over
/// pairs s < t up to index r_max (precondition r_max >= 8).
ValidationReport validate_precision_family(const PrecisionFamily& alpha,
                                           const GaugeFamily& family,
                                           const std::vector<std::pair<double, double>>& pairs,
                                           int r_max,
                                           const PrecisionValidationConfig& cfg = {});

} // namespace gaugedim

#endif
