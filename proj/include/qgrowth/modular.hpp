#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgrowth/action.hpp"

namespace qgrowth {

// Point spectrum of the modular operator of the invariant state, restricted
// to the spectral subalgebra: on the subspace of an irrep u it is the product
// set Sp((J*J)^{-1}) x Sp((j*j)^{-1}).
struct ModularSpectrumReport {
    std::vector<std::pair<IrrepLabel, EigenSpectrum>> per_irrep;
    EigenSpectrum global;  // multiset union over the subset
    bool factorial_assumed = false;
    std::string assumptions_note;
    bool operator==(const ModularSpectrumReport&) const = default;
};

ModularSpectrumReport delta_point_spectrum(const SpectralActionModel& action,
                                           std::optional<std::vector<IrrepLabel>> subset = {},
                                           std::int64_t default_depth = 6);

struct TracialReport {
    bool tracial = false;
    std::optional<IrrepLabel> witness;
    char condition = ' ';  // 'a': d(u) > dim(u); 'b': Sp(J*J) nontrivial
    bool operator==(const TracialReport&) const = default;
};

// Trace criterion: the invariant state is a trace iff every spectral irrep
// has trivial Sp(j*j) and trivial Sp(J*J). Built-in actions are decided
// structurally; custom actions from their listed data.
TracialReport is_tracial(const SpectralActionModel& action, std::int64_t probe_depth = 8);

enum class FactorClass { trace, III_lambda, III_one, undetermined };

std::string factor_class_name(FactorClass c);

struct Classification {
    FactorClass kind = FactorClass::undetermined;
    double lambda = 0.0;  // III_lambda only
    std::string note;
    bool operator==(const Classification&) const = default;
};

// Subgroup generated by the modular point spectrum, under the recorded
// factoriality assumption. Exact exponent lattices use integer gcd; float
// spectra use a tolerance-based Euclidean reduction of the log set, with an
// explicit undetermined outcome when the reduction hits its resolution.
// III_0 is never produced: the assumptions exclude it.
Classification connes_subgroup(const ModularSpectrumReport& report, double tol = 1e-7);

struct Type3BoundRow {
    IrrepLabel irrep;
    double lambda_u = 0.0;
    double Lambda_u = 0.0;
    double certificate = 0.0;  // B >= D_u
    double value = 0.0;        // min(lambda_u, 1/Lambda_u) / B
    bool operator==(const Type3BoundRow&) const = default;
};

struct Type3BoundReport {
    double bound = 0.0;
    bool type3_one_forced = false;
    std::vector<Type3BoundRow> rows;
    std::string assumptions_note;
    bool operator==(const Type3BoundReport&) const = default;
};

// Lower bound for the parameter of a type III_lambda factor arising from the
// action (factorial M and centralizer assumed): the supremum over spectral
// irreps with d(u) > dim(u) of min(lambda_u, Lambda_u^{-1}) / B_u. Vacuous
// (error) when no spectral irrep has a certified dimension gap.
Type3BoundReport type3_lower_bound(const SpectralActionModel& action, std::int64_t probe_depth = 6,
                                   std::int64_t growth_depth = 0);

// Kac-type remark: 1/n with n the smallest integral dimension of a spectral
// irrep whose modular restriction is nontrivial. Errors when the base is not
// Kac or the action is tracial.
double kac_bound(const SpectralActionModel& action, std::int64_t probe_depth = 8);

struct KacNecessityReport {
    enum class Outcome { vacuous_tracial, verified, undetermined };
    Outcome outcome = Outcome::undetermined;
    std::optional<IrrepLabel> witness;  // spectral irrep with exponential integral growth
    GrowthVerdict witness_verdict = GrowthVerdict::undetermined;
    bool operator==(const KacNecessityReport&) const = default;
};

// For Kac-type bases: a non-tracial action must have a spectral irrep whose
// integral dimension grows exponentially.
KacNecessityReport kac_exponential_necessity(const SpectralActionModel& action,
                                             std::int64_t probe_depth = 8,
                                             std::int64_t growth_depth = 0);

}  // namespace qgrowth
