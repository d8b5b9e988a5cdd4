#ifndef GAUGEDIM_ALGODIM_HPP
#define GAUGEDIM_ALGODIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gaugedim/dimension.hpp"
#include "gaugedim/gauge.hpp"
#include "gaugedim/metric.hpp"

namespace gaugedim {

/// LZ78 code length in bits: each complete phrase costs
/// ceil(log2(#phrases so far)) + 1 (dictionary index + literal bit), a
/// trailing incomplete phrase costs its index only. Deterministic and total;
/// 0 for the empty string. A computable stand-in for Kolmogorov complexity.
std::size_t lz78_code_length(const std::vector<std::uint8_t>& bits);
std::size_t lz78_code_length(const std::string& bits01);

/// Scale-indexed record delta_i -> K(delta_i) feeding the dimension
/// functionals.
struct ComplexityProfile {
    std::vector<std::pair<Scale, double>> entries; // delta descending, k >= 0
    std::string provenance; // "proxy" | "synthetic"

    void validate() const;
};

/// Proxy complexity of the point of [0,1] at dyadic precision 2^-r:
/// min over net candidates q with |q - x| <= 2^-r of the minimal LZ78 code
/// length over q's codewords (minimal expansion plus trailing-zero paddings
/// up to the net resolution).
double point_complexity_at(double x, int r);

/// Profile over resolutions r (delta = 2^-r), dyadic enumeration fixed.
ComplexityProfile complexity_profile_of_point(double x, const std::vector<int>& resolutions);

/// Same, with x given by its binary expansion; exact beyond double range.
ComplexityProfile complexity_profile_of_bits(const std::vector<std::uint8_t>& x_bits,
                                             const std::vector<int>& resolutions);

/// Synthetic profile k(2^-r) from a descriptor:
///   ratio:a      k = a*r
///   pow2:a       k = 2^(a*r)
///   alt:a,b      k = a*r for even r, b*r for odd r
///   const:c      k = c
ComplexityProfile synthetic_profile(const std::string& descriptor, int r_min, int r_max);

/// Gauged algorithmic dimension of a profile:
/// inf{s : lim 2^{K(delta)} phi_s(delta) = 0} via the shared bisection.
/// For the canonical family this recovers K(delta)/log2(1/delta) behavior.
DimensionEstimate gauged_dim_from_profile(const ComplexityProfile& profile,
                                          const GaugeFamily& family,
                                          DimKind kind,
                                          const EstimatorConfig& cfg = {});

/// Direct windowed liminf/limsup of k(delta)/log2(1/delta) (the canonical
/// ratio form); cross-check for the theta case.
double direct_ratio_dimension(const ComplexityProfile& profile,
                              DimKind kind,
                              std::size_t window = 0);

/// The jump characterization: s_direct = inf{s : lim K(delta) phi_s(delta) = 0}
/// evaluated directly, against s_jump = gauged dimension under jump(family).
/// The two agree up to combined bisection tolerance.
struct JumpCharacterization {
    DimensionEstimate direct;
    DimensionEstimate jumped;
    double discrepancy = 0.0;
};
JumpCharacterization jump_characterization(const ComplexityProfile& profile,
                                           const GaugeFamily& family,
                                           DimKind kind,
                                           const EstimatorConfig& cfg = {});

} // namespace gaugedim

#endif
