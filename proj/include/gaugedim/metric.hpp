#ifndef GAUGEDIM_METRIC_HPP
#define GAUGEDIM_METRIC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gaugedim/rational.hpp"

namespace gaugedim {

using PointId = std::uint32_t;

/// A radius/separation scale. Carries the double value plus an exact
/// rational form when the schedule provides one (7^-l, 2^-k, ...), so that
/// spaces with exact points can decide boundary cases without rounding.
struct Scale {
    double value = 0.0;
    std::optional<Rational> exact;

    static Scale of(double v) {
        if (!(v > 0.0)) throw precondition_error("scale must be positive");
        return {v, std::nullopt};
    }
    static Scale of_rational(const Rational& r) {
        if (!(r > Rational(0))) throw precondition_error("scale must be positive");
        return {r.to_double(), r};
    }
    /// base^-exp, exact (e.g. power_of(7, 3) = 7^-3).
    static Scale power_of(int base, int exp) { return of_rational(Rational::power(base, -exp)); }

    Rational as_rational() const { return exact ? *exact : Rational::from_double(value); }
    Scale doubled() const {
        Scale s;
        s.value = value * 2.0;
        if (exact) s.exact = *exact * Rational(2);
        return s;
    }
};

/// Strictly decreasing positive schedule helpers.
std::vector<Scale> geometric_schedule(int base, int count);             // base^-1 .. base^-count, exact
std::vector<Scale> geometric_schedule(int base, int first, int last);   // base^-first .. base^-last
std::vector<Scale> schedule_from_values(const std::vector<double>& v);  // validated, inexact

/// Distance oracle over an immutable finite point store. Evaluation is pure;
/// concurrent reads are safe. Copies are cheap enough at desk scale and are
/// used when an algorithm wants midpoint-augmented candidates.
class MetricSpace {
public:
    virtual ~MetricSpace() = default;

    virtual std::unique_ptr<MetricSpace> clone() const = 0;
    virtual std::size_t size() const = 0;
    virtual double distance(PointId a, PointId b) const = 0;

    /// Three-way compare of distance(a,b) against a scale; exact where the
    /// space's points admit it, double compare otherwise.
    virtual int distance_vs(PointId a, PointId b, const Scale& delta) const {
        double d = distance(a, b);
        if (d < delta.value) return -1;
        if (d > delta.value) return 1;
        return 0;
    }

    bool in_open_ball(PointId center, PointId p, const Scale& delta) const {
        return distance_vs(center, p, delta) < 0;
    }
    bool separated(PointId a, PointId b, const Scale& delta) const {
        return distance_vs(a, b, delta) >= 0;
    }

    /// 1-D spaces expose a coordinate key for sweep algorithms.
    virtual bool is_line() const { return false; }
    virtual double coordinate(PointId) const { throw precondition_error("space has no line coordinate"); }
    /// Exact coordinate order on line spaces (double compare by default).
    virtual bool coordinate_less(PointId a, PointId b) const { return coordinate(a) < coordinate(b); }
    /// Exact coordinate ordering / gap comparison for line spaces.
    virtual int gap_vs(PointId lo, PointId hi, const Scale& delta) const {
        return distance_vs(lo, hi, delta);
    }

    virtual bool supports_midpoints() const { return false; }
    virtual PointId add_midpoint(PointId, PointId) { throw precondition_error("space has no midpoints"); }

    virtual std::string describe() const = 0;
    /// Short printable form of a point (for witnesses and JSON).
    virtual std::string point_repr(PointId p) const = 0;
};

/// R^n with the Euclidean metric; points stored as doubles.
class EuclideanSpace final : public MetricSpace {
public:
    explicit EuclideanSpace(std::size_t dim);
    static EuclideanSpace line(const std::vector<double>& coords); // dim 1

    PointId add_point(const std::vector<double>& coords);
    PointId add_point(double x); // dim-1 convenience
    std::vector<double> coords(PointId p) const;

    std::unique_ptr<MetricSpace> clone() const override;
    std::size_t size() const override { return count_; }
    double distance(PointId a, PointId b) const override;
    bool is_line() const override { return dim_ == 1; }
    double coordinate(PointId p) const override;
    bool supports_midpoints() const override { return true; }
    PointId add_midpoint(PointId a, PointId b) override;
    std::string describe() const override;
    std::string point_repr(PointId p) const override;

    std::size_t dimension() const { return dim_; }

private:
    std::size_t dim_;
    std::size_t count_ = 0;
    std::vector<double> flat_;
};

/// The line with exact rational points; all comparisons against rational
/// scales are exact. Habitat of the seven-adic constructions.
class RationalLineSpace final : public MetricSpace {
public:
    RationalLineSpace() = default;
    explicit RationalLineSpace(std::vector<Rational> pts) : pts_(std::move(pts)) {}

    PointId add_point(const Rational& r);
    const Rational& point(PointId p) const { return pts_.at(p); }

    std::unique_ptr<MetricSpace> clone() const override;
    std::size_t size() const override { return pts_.size(); }
    double distance(PointId a, PointId b) const override;
    int distance_vs(PointId a, PointId b, const Scale& delta) const override;
    bool is_line() const override { return true; }
    double coordinate(PointId p) const override { return pts_.at(p).to_double(); }
    bool coordinate_less(PointId a, PointId b) const override { return pts_[a] < pts_[b]; }
    bool supports_midpoints() const override { return true; }
    PointId add_midpoint(PointId a, PointId b) override;
    std::string describe() const override { return "rational-line"; }
    std::string point_repr(PointId p) const override { return pts_.at(p).str(); }

private:
    std::vector<Rational> pts_;
};

/// Explicit finite metric given as a square matrix. Entries are validated:
/// symmetry, zero diagonal, positivity off-diagonal, triangle inequality.
class MatrixSpace final : public MetricSpace {
public:
    explicit MatrixSpace(const std::vector<std::vector<double>>& matrix);

    std::unique_ptr<MetricSpace> clone() const override;
    std::size_t size() const override { return n_; }
    double distance(PointId a, PointId b) const override;
    std::string describe() const override { return "explicit-matrix"; }
    std::string point_repr(PointId p) const override { return "#" + std::to_string(p); }

private:
    std::size_t n_;
    std::vector<double> d_;
};

/// Binary sequence space with rho(x,y) = 2^-(longest common prefix).
class SequenceSpace final : public MetricSpace {
public:
    SequenceSpace() = default;

    PointId add_point(const std::vector<std::uint8_t>& bits);
    PointId add_point(const std::string& bits01);

    std::unique_ptr<MetricSpace> clone() const override;
    std::size_t size() const override { return seqs_.size(); }
    double distance(PointId a, PointId b) const override;
    std::string describe() const override { return "sequence-2adic"; }
    std::string point_repr(PointId p) const override;

private:
    std::vector<std::vector<std::uint8_t>> seqs_;
};

/// Max pairwise distance of a nonempty finite set; 0 for singletons.
double diameter(const MetricSpace& space, const std::vector<PointId>& pts);

/// Uniform grid delta-net of [lo,hi]^dim with spacing <= delta (every region
/// point within delta of a net point, verifiable by covering check).
/// Throws capacity_error when the net would exceed `cap` points.
std::vector<std::vector<double>> dyadic_net(const std::vector<double>& lo,
                                            const std::vector<double>& hi,
                                            double delta,
                                            std::size_t cap = 1u << 22);

/// Dense enumeration f: {0,1}* -> [0,1], f(w) = 0.w in binary. Used as the
/// codeword source for the complexity proxy; K(q) minimizes over all
/// codewords of q, i.e. the minimal expansion plus trailing-zero paddings.
class DyadicEnumeration {
public:
    /// Binary-fraction value of a codeword.
    static double decode(const std::string& w);

    struct Candidate {
        std::string minimal_codeword; // trailing zeros stripped
        int resolution;               // codeword may be padded with zeros up to this length
        double value;
    };

    /// All net points k/2^resolution within closed distance delta of x.
    static std::vector<Candidate> candidates_near(double x, double delta, int resolution);

    /// Same, for x given by its (possibly long) binary expansion; exact and
    /// usable at resolutions beyond double precision.
    static std::vector<Candidate> candidates_near_bits(const std::vector<std::uint8_t>& x_bits,
                                                       int resolution);
};

/// CSV point-cloud reader: one point per row, d columns. Rejects NaN and
/// negative entries.
std::vector<std::vector<double>> read_points_csv(const std::string& path);
/// JSON array-of-arrays points reader, same validation.
std::vector<std::vector<double>> read_points_json(const std::string& path);
/// JSON square distance matrix reader.
std::vector<std::vector<double>> read_matrix_json(const std::string& path);

} // namespace gaugedim

#endif
