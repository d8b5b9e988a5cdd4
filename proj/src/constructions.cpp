#include "gaugedim/constructions.hpp"

#include <algorithm>
#include <fstream>

#include "gaugedim/errors.hpp"

namespace gaugedim {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

BitSource BitSource::seeded(std::uint64_t seed) {
    BitSource b;
    b.seeded_mode_ = true;
    b.seed_ = seed;
    b.state_ = seed;
    return b;
}

BitSource BitSource::from_bits(std::vector<std::uint8_t> bits) {
    for (auto v : bits)
        if (v > 1) throw precondition_error("bit source values must be 0/1");
    BitSource b;
    b.bits_ = std::move(bits);
    return b;
}

BitSource BitSource::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open bit file " + path);
    std::vector<std::uint8_t> bits;
    char c;
    while (in.get(c)) {
        if (c == '0' || c == '1')
            bits.push_back(c == '1' ? 1 : 0);
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw precondition_error("bit file must contain only 0/1 and whitespace");
    }
    return from_bits(std::move(bits));
}

int BitSource::next() {
    if (seeded_mode_) {
        if (word_bits_ == 0) {
            word_ = splitmix64(state_);
            word_bits_ = 64;
        }
        int bit = static_cast<int>(word_ & 1);
        word_ >>= 1;
        --word_bits_;
        ++cursor_;
        return bit;
    }
    if (cursor_ >= bits_.size()) throw precondition_error("bit source exhausted");
    return bits_[cursor_++];
}

std::array<Interval7, 4> seven_adic_children(const Interval7& parent) {
    long long base = 7 * parent.num;
    int lvl = parent.level + 1;
    // sevenths: K1, J00, J01, K2, J10, J11, K3
    return {Interval7{base + 1, lvl}, Interval7{base + 2, lvl},
            Interval7{base + 4, lvl}, Interval7{base + 5, lvl}};
}

std::vector<IntervalSet> build_construction(BitSource& bits, int depth) {
    if (depth < 0) throw precondition_error("construction depth must be >= 0");
    if (depth > 18) throw capacity_error("construction depth above cap (18)");

    std::vector<IntervalSet> levels;
    IntervalSet cur;
    cur.level = 0;
    cur.nums = {0};
    cur.labels = {""};
    levels.push_back(cur);

    for (int l = 0; l < depth; ++l) {
        IntervalSet next;
        next.level = l + 1;
        next.nums.reserve(cur.nums.size() * 2);
        next.labels.reserve(cur.nums.size() * 2);
        for (std::size_t i = 0; i < cur.nums.size(); ++i) {
            auto kids = seven_adic_children(cur.interval(i));
            int b0 = bits.next();
            int b1 = bits.next();
            // a=0 keeps J_{0 b0} (kids 0,1), a=1 keeps J_{1 b1} (kids 2,3)
            next.nums.push_back(kids[b0 == 0 ? 0 : 1].num);
            next.labels.push_back(cur.labels[i] + "0" + (b0 ? "1" : "0"));
            next.nums.push_back(kids[b1 == 0 ? 2 : 3].num);
            next.labels.push_back(cur.labels[i] + "1" + (b1 ? "1" : "0"));
        }
        levels.push_back(next);
        cur = std::move(next);
    }
    return levels;
}

IntervalSet self_similar_e0(int depth) {
    if (depth < 0) throw precondition_error("depth must be >= 0");
    if (depth > 18) throw capacity_error("depth above cap (18)");
    BitSource zeros = BitSource::from_bits(std::vector<std::uint8_t>(
        depth > 0 ? (std::size_t(2) << depth) - 2 : 0, 0));
    return build_construction(zeros, depth).back();
}

std::vector<int> g_map_digits(const std::vector<int>& digits14,
                              const std::vector<std::uint8_t>& R,
                              std::size_t n_digits) {
    if (n_digits > digits14.size()) throw precondition_error("not enough input digits");
    std::vector<int> out;
    out.reserve(n_digits);
    for (std::size_t n = 0; n < n_digits; ++n) {
        int d = digits14[n];
        if (d != 1 && d != 4) throw precondition_error("g map input digits must be 1 or 4");
        std::size_t idx = 2 * n + static_cast<std::size_t>(d);
        if (idx >= R.size()) throw precondition_error("bit sequence too short for g map");
        out.push_back(d + R[idx]);
    }
    return out;
}

std::vector<Rational> one_over_n_points(int n_max) {
    if (n_max < 1) throw precondition_error("n_max must be >= 1");
    std::vector<Rational> pts;
    pts.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) pts.emplace_back(1, n);
    return pts;
}

std::vector<Rational> sample_points(const IntervalSet& set,
                                    int per_interval,
                                    SampleMode mode,
                                    std::uint64_t seed) {
    if (per_interval < 1) throw precondition_error("per_interval must be >= 1");
    std::vector<Rational> pts;
    if (mode == SampleMode::endpoints) {
        pts.reserve(set.size() * 2);
        for (std::size_t i = 0; i < set.size(); ++i) {
            pts.push_back(set.interval(i).lo());
            pts.push_back(set.interval(i).hi());
        }
    } else {
        std::uint64_t state = seed;
        Rational w = Rational::power(7, -set.level);
        pts.reserve(set.size() * static_cast<std::size_t>(per_interval));
        for (std::size_t i = 0; i < set.size(); ++i) {
            Rational lo = set.interval(i).lo();
            for (int k = 0; k < per_interval; ++k) {
                // uniform in [lo, hi): 20 random bits give an exact dyadic u in [0,1)
                std::uint64_t u = splitmix64(state) >> 44;
                Rational frac(static_cast<long long>(u), 1ll << 20);
                pts.push_back(lo + w * frac);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

ValidationReport check_interval_set(const IntervalSet& set) {
    ValidationReport rep;
    rep.subject = "interval set level " + std::to_string(set.level);

    CheckItem count{"count_is_2_pow_level", true, "", {}};
    std::size_t expect = std::size_t(1) << set.level;
    count.data["count"] = static_cast<double>(set.size());
    if (set.size() != expect || set.labels.size() != set.size()) {
        count.pass = false;
        count.witness = "got " + std::to_string(set.size());
    }

    CheckItem order{"ascending_disjoint", true, "", {}};
    CheckItem gaps{"gaps_at_least_width", true, "", {}};
    for (std::size_t i = 1; i < set.nums.size(); ++i) {
        if (set.nums[i] <= set.nums[i - 1] && order.pass) {
            order.pass = false;
            order.witness = "index " + std::to_string(i);
        }
        // gap = (nums[i] - nums[i-1] - 1) * 7^-level must be >= 7^-level
        if (set.nums[i] - set.nums[i - 1] < 2 && gaps.pass) {
            gaps.pass = false;
            gaps.witness = "index " + std::to_string(i);
        }
    }

    CheckItem labels{"labels_shape", true, "", {}};
    for (std::size_t i = 0; i < set.labels.size(); ++i) {
        const auto& s = set.labels[i];
        bool ok = s.size() == static_cast<std::size_t>(2 * set.level) &&
                  s.find_first_not_of("01") == std::string::npos &&
                  (i == 0 || set.labels[i - 1] < s);
        if (!ok) {
            labels.pass = false;
            labels.witness = "index " + std::to_string(i);
            break;
        }
    }

    CheckItem range{"inside_unit_interval", true, "", {}};
    if (!set.nums.empty()) {
        long long cap = 1;
        for (int i = 0; i < set.level; ++i) cap *= 7;
        if (set.nums.front() < 0 || set.nums.back() + 1 > cap) {
            range.pass = false;
            range.witness = "endpoints outside [0,1]";
        }
    }

    rep.checks = {count, order, gaps, labels, range};
    return rep;
}

ValidationReport check_nesting(const IntervalSet& parent, const IntervalSet& child) {
    ValidationReport rep;
    rep.subject = "nesting level " + std::to_string(parent.level) + " -> " +
                  std::to_string(child.level);
    CheckItem nest{"children_inside_one_parent", true, "", {}};
    if (child.level != parent.level + 1) {
        nest.pass = false;
        nest.witness = "levels not consecutive";
    } else {
        for (std::size_t i = 0; i < child.nums.size(); ++i) {
            long long p = child.nums[i] / 7;
            if (!std::binary_search(parent.nums.begin(), parent.nums.end(), p)) {
                nest.pass = false;
                nest.witness = "child index " + std::to_string(i);
                break;
            }
        }
    }
    rep.checks = {nest};
    return rep;
}

RationalLineSpace make_line_space(const std::vector<Rational>& pts) {
    RationalLineSpace space;
    for (const auto& p : pts) space.add_point(p);
    return space;
}

} // namespace gaugedim
