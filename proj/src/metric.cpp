#include "gaugedim/metric.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gaugedim {

std::vector<Scale> geometric_schedule(int base, int count) {
    return geometric_schedule(base, 1, count);
}

std::vector<Scale> geometric_schedule(int base, int first, int last) {
    if (base < 2) throw precondition_error("geometric schedule base must be >= 2");
    if (first < 0 || last < first) throw precondition_error("bad geometric schedule range");
    std::vector<Scale> out;
    for (int e = first; e <= last; ++e) out.push_back(Scale::power_of(base, e));
    return out;
}

std::vector<Scale> schedule_from_values(const std::vector<double>& v) {
    if (v.empty()) throw precondition_error("empty schedule");
    std::vector<Scale> out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0)) throw precondition_error("schedule values must be positive");
        if (i > 0 && !(v[i] < v[i - 1]))
            throw precondition_error("schedule must be strictly decreasing");
        out.push_back(Scale::of(v[i]));
    }
    return out;
}

// ---------------------------------------------------------------- Euclidean

EuclideanSpace::EuclideanSpace(std::size_t dim) : dim_(dim) {
    if (dim_ == 0) throw precondition_error("Euclidean dimension must be >= 1");
}

EuclideanSpace EuclideanSpace::line(const std::vector<double>& coords) {
    EuclideanSpace s(1);
    for (double c : coords) s.add_point(c);
    return s;
}

PointId EuclideanSpace::add_point(const std::vector<double>& coords) {
    if (coords.size() != dim_) throw precondition_error("point dimension mismatch");
    for (double c : coords)
        if (std::isnan(c)) throw precondition_error("NaN coordinate");
    flat_.insert(flat_.end(), coords.begin(), coords.end());
    return static_cast<PointId>(count_++);
}

PointId EuclideanSpace::add_point(double x) {
    if (dim_ != 1) throw precondition_error("scalar add_point on non-line space");
    if (std::isnan(x)) throw precondition_error("NaN coordinate");
    flat_.push_back(x);
    return static_cast<PointId>(count_++);
}

std::vector<double> EuclideanSpace::coords(PointId p) const {
    return {flat_.begin() + p * dim_, flat_.begin() + (p + 1) * dim_};
}

std::unique_ptr<MetricSpace> EuclideanSpace::clone() const {
    return std::make_unique<EuclideanSpace>(*this);
}

double EuclideanSpace::distance(PointId a, PointId b) const {
    const double* pa = flat_.data() + a * dim_;
    const double* pb = flat_.data() + b * dim_;
    if (dim_ == 1) return std::fabs(pa[0] - pb[0]);
    double acc = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        double d = pa[i] - pb[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double EuclideanSpace::coordinate(PointId p) const {
    if (dim_ != 1) throw precondition_error("coordinate on non-line space");
    return flat_[p];
}

PointId EuclideanSpace::add_midpoint(PointId a, PointId b) {
    std::vector<double> m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        m[i] = 0.5 * (flat_[a * dim_ + i] + flat_[b * dim_ + i]);
    return add_point(m);
}

std::string EuclideanSpace::describe() const {
    return "euclidean-" + std::to_string(dim_);
}

std::string EuclideanSpace::point_repr(PointId p) const {
    std::ostringstream os;
    os.precision(17);
    os << "(";
    for (std::size_t i = 0; i < dim_; ++i) os << (i ? "," : "") << flat_[p * dim_ + i];
    os << ")";
    return os.str();
}

// ------------------------------------------------------------ RationalLine

PointId RationalLineSpace::add_point(const Rational& r) {
    pts_.push_back(r);
    return static_cast<PointId>(pts_.size() - 1);
}

std::unique_ptr<MetricSpace> RationalLineSpace::clone() const {
    return std::make_unique<RationalLineSpace>(*this);
}

double RationalLineSpace::distance(PointId a, PointId b) const {
    return (pts_[a] - pts_[b]).abs().to_double();
}

int RationalLineSpace::distance_vs(PointId a, PointId b, const Scale& delta) const {
    Rational d = (pts_[a] - pts_[b]).abs();
    Rational q = delta.as_rational();
    auto c = d <=> q;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

PointId RationalLineSpace::add_midpoint(PointId a, PointId b) {
    return add_point((pts_[a] + pts_[b]).half());
}

// ----------------------------------------------------------------- Matrix

MatrixSpace::MatrixSpace(const std::vector<std::vector<double>>& m) : n_(m.size()) {
    if (n_ == 0) throw precondition_error("empty distance matrix");
    d_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (m[i].size() != n_) throw precondition_error("distance matrix not square");
        for (std::size_t j = 0; j < n_; ++j) {
            double v = m[i][j];
            if (std::isnan(v) || v < 0.0) throw precondition_error("matrix entries must be finite and >= 0");
            d_[i * n_ + j] = v;
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (d_[i * n_ + i] != 0.0) throw precondition_error("matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (d_[i * n_ + j] != d_[j * n_ + i]) throw precondition_error("matrix not symmetric");
            if (d_[i * n_ + j] <= 0.0) throw precondition_error("off-diagonal entries must be positive");
        }
    }
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (d_[i * n_ + j] > d_[i * n_ + k] + d_[k * n_ + j] + 1e-12)
                    throw precondition_error("matrix violates triangle inequality");
}

std::unique_ptr<MetricSpace> MatrixSpace::clone() const {
    return std::make_unique<MatrixSpace>(*this);
}

double MatrixSpace::distance(PointId a, PointId b) const {
    if (a >= n_ || b >= n_) throw precondition_error("matrix point out of range");
    return d_[a * n_ + b];
}

// --------------------------------------------------------------- Sequence

PointId SequenceSpace::add_point(const std::vector<std::uint8_t>& bits) {
    for (auto b : bits)
        if (b > 1) throw precondition_error("sequence bits must be 0/1");
    seqs_.push_back(bits);
    return static_cast<PointId>(seqs_.size() - 1);
}

PointId SequenceSpace::add_point(const std::string& bits01) {
    std::vector<std::uint8_t> v;
    for (char c : bits01) {
        if (c != '0' && c != '1') throw precondition_error("sequence bits must be 0/1");
        v.push_back(c == '1' ? 1 : 0);
    }
    return add_point(v);
}

std::unique_ptr<MetricSpace> SequenceSpace::clone() const {
    return std::make_unique<SequenceSpace>(*this);
}

double SequenceSpace::distance(PointId a, PointId b) const {
    const auto& x = seqs_.at(a);
    const auto& y = seqs_.at(b);
    if (a == b) return 0.0;
    std::size_t n = std::min(x.size(), y.size());
    std::size_t lcp = 0;
    while (lcp < n && x[lcp] == y[lcp]) ++lcp;
    if (lcp == x.size() && lcp == y.size()) return 0.0;
    return std::exp2(-static_cast<double>(lcp));
}

std::string SequenceSpace::point_repr(PointId p) const {
    std::string s;
    for (auto b : seqs_.at(p)) s.push_back(b ? '1' : '0');
    return s;
}

// ------------------------------------------------------------------ misc

double diameter(const MetricSpace& space, const std::vector<PointId>& pts) {
    if (pts.empty()) throw precondition_error("diameter of empty set");
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, space.distance(pts[i], pts[j]));
    return best;
}

std::vector<std::vector<double>> dyadic_net(const std::vector<double>& lo,
                                            const std::vector<double>& hi,
                                            double delta,
                                            std::size_t cap) {
    if (!(delta > 0.0)) throw precondition_error("net scale must be positive");
    if (lo.size() != hi.size() || lo.empty()) throw precondition_error("bad region bounds");
    std::size_t dim = lo.size();
    std::vector<std::size_t> steps(dim);
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!(hi[i] >= lo[i])) throw precondition_error("bad region bounds");
        steps[i] = static_cast<std::size_t>(std::ceil((hi[i] - lo[i]) / delta)) + 1;
        if (steps[i] > cap || total > cap / steps[i])
            throw capacity_error("dyadic net exceeds configured size cap");
        total *= steps[i];
    }
    std::vector<std::vector<double>> out;
    out.reserve(total);
    std::vector<std::size_t> idx(dim, 0);
    for (;;) {
        std::vector<double> p(dim);
        for (std::size_t i = 0; i < dim; ++i)
            p[i] = std::min(hi[i], lo[i] + static_cast<double>(idx[i]) * delta);
        out.push_back(std::move(p));
        std::size_t k = 0;
        while (k < dim && ++idx[k] == steps[k]) idx[k++] = 0;
        if (k == dim) break;
    }
    return out;
}

// ----------------------------------------------------- dyadic enumeration

double DyadicEnumeration::decode(const std::string& w) {
    double v = 0.0, scale = 0.5;
    for (char c : w) {
        if (c != '0' && c != '1') throw precondition_error("codeword must be 0/1");
        if (c == '1') v += scale;
        scale *= 0.5;
    }
    return v;
}

namespace {

std::string strip_trailing_zeros(std::string w) {
    while (!w.empty() && w.back() == '0') w.pop_back();
    return w;
}

std::string bits_of(std::uint64_t k, int width) {
    std::string s(width, '0');
    for (int i = width - 1; i >= 0; --i) {
        s[i] = (k & 1) ? '1' : '0';
        k >>= 1;
    }
    return s;
}

} // namespace

std::vector<DyadicEnumeration::Candidate> DyadicEnumeration::candidates_near(double x,
                                                                             double delta,
                                                                             int resolution) {
    if (resolution < 0 || resolution > 62) throw precondition_error("resolution out of range");
    if (x < 0.0 || x > 1.0) throw precondition_error("point outside [0,1]");
    std::vector<Candidate> out;
    double step = std::exp2(-resolution);
    auto kmax = static_cast<std::int64_t>(std::exp2(resolution));
    auto k0 = static_cast<std::int64_t>(std::floor(x / step));
    for (std::int64_t k = k0 - 2; k <= k0 + 2; ++k) {
        if (k < 0 || k > kmax) continue;
        double q = static_cast<double>(k) * step;
        if (std::fabs(q - x) <= delta) {
            // value 1.0 has no finite codeword under f(w)=0.w; skip it
            if (k == kmax) continue;
            out.push_back({strip_trailing_zeros(bits_of(static_cast<std::uint64_t>(k), resolution)),
                           resolution, q});
        }
    }
    return out;
}

std::vector<DyadicEnumeration::Candidate> DyadicEnumeration::candidates_near_bits(
    const std::vector<std::uint8_t>& x_bits, int resolution) {
    if (resolution < 1) throw precondition_error("resolution out of range");
    if (static_cast<int>(x_bits.size()) < resolution)
        throw precondition_error("need at least `resolution` bits of the point");
    // q = truncation of x to `resolution` bits satisfies |q - x| <= 2^-resolution;
    // q+ = q + 2^-resolution likewise when x >= q.
    std::string trunc(resolution, '0');
    for (int i = 0; i < resolution; ++i) trunc[i] = x_bits[i] ? '1' : '0';
    std::vector<Candidate> out;
    out.push_back({strip_trailing_zeros(trunc), resolution, decode(trunc)});
    // successor at this resolution (binary increment); drop on overflow past 1
    std::string succ = trunc;
    int i = resolution - 1;
    while (i >= 0 && succ[i] == '1') succ[i--] = '0';
    if (i >= 0) {
        succ[i] = '1';
        out.push_back({strip_trailing_zeros(succ), resolution, decode(succ)});
    }
    return out;
}

// ---------------------------------------------------------------- readers

namespace {

std::vector<std::vector<double>> validate_cloud(std::vector<std::vector<double>> rows,
                                                const std::string& what) {
    if (rows.empty()) throw precondition_error(what + ": no points");
    std::size_t dim = rows.front().size();
    if (dim == 0) throw precondition_error(what + ": empty row");
    for (const auto& r : rows) {
        if (r.size() != dim) throw precondition_error(what + ": ragged rows");
        for (double v : r)
            if (std::isnan(v) || v < 0.0)
                throw precondition_error(what + ": entries must be finite and >= 0");
    }
    return rows;
}

} // namespace

std::vector<std::vector<double>> read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw precondition_error("bad CSV cell in " + path + ": " + cell);
            }
        }
        rows.push_back(std::move(row));
    }
    return validate_cloud(std::move(rows), path);
}

std::vector<std::vector<double>> read_points_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw precondition_error("bad JSON in " + path + ": " + e.what());
    }
    if (!j.is_array()) throw precondition_error(path + ": expected array of points");
    std::vector<std::vector<double>> rows;
    for (const auto& row : j) {
        std::vector<double> r;
        if (row.is_number()) {
            r.push_back(row.get<double>());
        } else if (row.is_array()) {
            for (const auto& v : row) r.push_back(v.get<double>());
        } else {
            throw precondition_error(path + ": expected numeric rows");
        }
        rows.push_back(std::move(r));
    }
    return validate_cloud(std::move(rows), path);
}

std::vector<std::vector<double>> read_matrix_json(const std::string& path) {
    auto rows = read_points_json(path);
    if (rows.size() != rows.front().size())
        throw precondition_error(path + ": matrix must be square");
    return rows;
}

} // namespace gaugedim
