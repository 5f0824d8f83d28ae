#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qgrowth/model.hpp"

namespace qgrowth {

enum class GrowthKind { quantum_dim, integral_dim, multiplicity };
enum class GrowthVerdict { subexponential, exponential, undetermined };

std::string growth_kind_name(GrowthKind k);
std::string growth_verdict_name(GrowthVerdict v);

struct GrowthPoint {
    std::int64_t n = 0;
    double value = 0.0;
    double root = 0.0;  // value^{1/n}
    bool operator==(const GrowthPoint&) const = default;
};

// Growth data for one irrep along its tensor powers.
//
// lower_bound / upper_bound are the generic finite-depth bracket: the largest
// eigenvalue Lambda_u (quantum kind; 1 otherwise) and the Fekete bound
// min_n value^{1/n}. When the family structure pins the limit exactly
// (su2-type towers, free powers, finite tables) it is recorded in `limit` and
// the verdict is decided from the certified interval; otherwise only the
// bracket speaks, and "undetermined" is an honest outcome.
struct GrowthReport {
    GrowthKind kind = GrowthKind::quantum_dim;
    IrrepLabel irrep;
    std::int64_t depth = 0;
    std::vector<GrowthPoint> sequence;
    double lower_bound = 1.0;
    double upper_bound = 1.0;
    std::optional<double> limit;
    GrowthVerdict verdict = GrowthVerdict::undetermined;
    bool estimate_only = false;             // multiplicity kind without a closed form
    std::optional<double> liminf_estimate;  // tail-window root minimum (multiplicity kind)
    std::string note;

    double certified_lower() const { return limit ? *limit : lower_bound; }
    double certified_upper() const { return limit ? *limit : upper_bound; }

    bool operator==(const GrowthReport&) const = default;
};

// multiplicity of an irrep in the modeled action; 0 when not spectral
using MultiplicityFn = std::function<std::int64_t(const IrrepLabel&)>;

GrowthReport growth_sequence(const QuantumGroupModel& model, const IrrepLabel& u, std::int64_t depth,
                             GrowthKind kind, const MultiplicityFn& mult = {},
                             std::optional<double> mult_limit = std::nullopt,
                             std::size_t max_support = kMaxSupport);

// Generic certified bracket for the quantum-dimension growth rate:
// [Lambda_u, min_{n<=depth} D_{u,n}^{1/n}]. The limit lies inside.
std::pair<double, double> growth_rate_bracket(const QuantumGroupModel& model, const IrrepLabel& u,
                                              std::int64_t depth,
                                              std::size_t max_support = kMaxSupport);

struct GrowthSandwichReport {
    IrrepLabel irrep;
    std::int64_t depth = 0;
    double lambda = 1.0;
    double Lambda = 1.0;
    double bracket_lower = 1.0;
    double bracket_upper = 1.0;
    double certified_lower = 1.0;
    double certified_upper = 1.0;
    GrowthVerdict dim_verdict = GrowthVerdict::undetermined;
    bool holds = false;              // every finite check of the sandwich passed
    bool equality_detected = false;  // subexponential integral growth forces both extremes
    bool strict_extremes = false;    // certified growth strictly separates Lambda_u
    bool operator==(const GrowthSandwichReport&) const = default;
};

// Finite-depth verification of the sandwich D_u^{-1} <= lambda_u <= Lambda_u
// <= D_u: checks D_{u,n}^{1/n} >= Lambda_u for n <= depth and, through the
// conjugate, D_{ubar,n}^{1/n} >= 1/lambda_u.
GrowthSandwichReport verify_prop43(const QuantumGroupModel& model, const IrrepLabel& u,
                                   std::int64_t depth, std::size_t max_support = kMaxSupport);

std::int64_t default_growth_depth(const QuantumGroupModel& model);

}  // namespace qgrowth
