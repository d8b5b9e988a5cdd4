#ifndef GAUGEDIM_CONSTRUCTIONS_HPP
#define GAUGEDIM_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gaugedim/metric.hpp"
#include "gaugedim/rational.hpp"
#include "gaugedim/report.hpp"

namespace gaugedim {

/// Deterministic bit stream: a seeded generator (splitmix64 words) or an
/// explicit finite list. Martin-Loef randomness is uncomputable; the seeded
/// stream is a documented proxy. `cursor` counts every bit handed out.
class BitSource {
public:
    static BitSource seeded(std::uint64_t seed);
    static BitSource from_bits(std::vector<std::uint8_t> bits); // throws when exhausted
    static BitSource from_file(const std::string& path);        // ASCII 0/1, whitespace ignored

    int next();
    std::uint64_t cursor() const { return cursor_; }
    std::uint64_t seed() const { return seed_; }

private:
    BitSource() = default;
    bool seeded_mode_ = false;
    std::uint64_t seed_ = 0;
    std::uint64_t state_ = 0;
    std::uint64_t word_ = 0;
    int word_bits_ = 0;
    std::vector<std::uint8_t> bits_;
    std::uint64_t cursor_ = 0;
};

/// Closed seven-adic interval [num, num+1] / 7^level.
struct Interval7 {
    long long num = 0;
    int level = 0;

    Rational lo() const { return Rational(num, 1) * Rational::power(7, -level); }
    Rational hi() const { return Rational(num + 1, 1) * Rational::power(7, -level); }
    Rational width() const { return Rational::power(7, -level); }
};

/// One level of a seven-adic construction: 2^level disjoint closed intervals
/// of exact length 7^-level with gaps >= 7^-level, labeled by the strings of
/// A_level in lexicographic order.
struct IntervalSet {
    int level = 0;
    std::vector<long long> nums;       // ascending interval numerators
    std::vector<std::string> labels;   // matching {0,1}^{2*level} strings

    std::size_t size() const { return nums.size(); }
    Interval7 interval(std::size_t i) const { return {nums.at(i), level}; }
};

/// The 2nd, 3rd, 5th and 6th sevenths of the parent, labeled 00,01,10,11.
std::array<Interval7, 4> seven_adic_children(const Interval7& parent);

/// Randomized seven-adic Cantor construction: level l -> l+1 consumes
/// exactly 2^{l+1} bits (b_{u0}, b_{u1} for u in A_l in lex order); the kept
/// child of I_u for branch a is J_{a b_{ua}}. Returns levels 0..depth.
std::vector<IntervalSet> build_construction(BitSource& bits, int depth);

/// Self-similar set E0: reals whose first `depth` base-7 digits are all
/// 1 or 4 (the all-zero-bits instance of the construction).
IntervalSet self_similar_e0(int depth);

/// Digit map g(S)[n] = S[n] + R[2n + S[n]] sending {1,4} digits to
/// {1,2,4,5}; implemented exactly as written.
std::vector<int> g_map_digits(const std::vector<int>& digits14,
                              const std::vector<std::uint8_t>& R,
                              std::size_t n_digits);

/// {1/n : 1 <= n <= n_max} as exact rationals.
std::vector<Rational> one_over_n_points(int n_max);

enum class SampleMode { endpoints, uniform };

/// Finite point sample from an interval set: both exact endpoints per
/// interval, or per_interval uniform points (seeded, exact rationals).
std::vector<Rational> sample_points(const IntervalSet& set,
                                    int per_interval,
                                    SampleMode mode,
                                    std::uint64_t seed = 0);

/// Exact checks of the IntervalSet invariants: count 2^level, widths
/// implicit in the representation, pairwise gaps >= 7^-level, ascending
/// disjoint order, label shape.
ValidationReport check_interval_set(const IntervalSet& set);

/// Each child interval lies inside exactly one parent interval.
ValidationReport check_nesting(const IntervalSet& parent, const IntervalSet& child);

/// Space over the points of a rational sample.
RationalLineSpace make_line_space(const std::vector<Rational>& pts);

} // namespace gaugedim

#endif
