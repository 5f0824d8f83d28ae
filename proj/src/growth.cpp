#include "qgrowth/growth.hpp"

#include <algorithm>
#include <cmath>

namespace qgrowth {

std::string growth_kind_name(GrowthKind k) {
    switch (k) {
        case GrowthKind::quantum_dim: return "quantum_dim";
        case GrowthKind::integral_dim: return "integral_dim";
        case GrowthKind::multiplicity: return "multiplicity";
    }
    return {};
}

std::string growth_verdict_name(GrowthVerdict v) {
    switch (v) {
        case GrowthVerdict::subexponential: return "subexponential";
        case GrowthVerdict::exponential: return "exponential";
        case GrowthVerdict::undetermined: return "undetermined";
    }
    return {};
}

std::int64_t default_growth_depth(const QuantumGroupModel& model) {
    return model.family() == Family::table ? 12 : 24;
}

GrowthReport growth_sequence(const QuantumGroupModel& model, const IrrepLabel& u, std::int64_t depth,
                             GrowthKind kind, const MultiplicityFn& mult,
                             std::optional<double> mult_limit, std::size_t max_support) {
    if (depth < 1) throw Error("growth depth must be >= 1");
    if (kind == GrowthKind::multiplicity && !mult)
        throw Error("multiplicity growth needs an action model");
    const FusionSystem& fs = model.fusion();
    fs.require_valid(u);

    GrowthReport rep;
    rep.kind = kind;
    rep.irrep = u;
    rep.depth = depth;

    std::set<IrrepLabel> support{fs.unit()};
    for (std::int64_t n = 1; n <= depth; ++n) {
        std::set<IrrepLabel> next;
        for (auto& v : support)
            for (auto& [l, m] : fs.fuse(v, u).entries()) next.insert(l);
        if (next.size() > max_support)
            throw Error("decomposition support exceeds the cap of " + std::to_string(max_support) +
                        " entries");
        support = std::move(next);

        double value = 0.0;
        for (auto& v : support) {
            double x = 0.0;
            switch (kind) {
                case GrowthKind::quantum_dim: x = model.qdim(v); break;
                case GrowthKind::integral_dim: x = static_cast<double>(model.intdim(v)); break;
                case GrowthKind::multiplicity: x = static_cast<double>(mult(v)); break;
            }
            value = std::max(value, x);
        }
        double root = value > 0.0 ? std::pow(value, 1.0 / static_cast<double>(n)) : 0.0;
        rep.sequence.push_back({n, value, root});
    }

    double min_root = rep.sequence.front().root;
    for (auto& p : rep.sequence) min_root = std::min(min_root, p.root);
    rep.upper_bound = min_root;

    switch (kind) {
        case GrowthKind::quantum_dim:
            rep.lower_bound = model.lambda_bounds(u).second;  // D_{u,n} >= Lambda_u^n
            rep.limit = model.qdim_growth_limit(u);
            break;
        case GrowthKind::integral_dim:
            rep.lower_bound = 1.0;
            rep.limit = model.intdim_growth_limit(u);
            break;
        case GrowthKind::multiplicity: {
            rep.lower_bound = 0.0;
            rep.limit = mult_limit;
            // liminf estimate over the tail window (last ceil(depth/2) roots)
            std::int64_t window = (depth + 1) / 2;
            double est = rep.sequence.back().root;
            for (std::int64_t n = depth - window + 1; n <= depth; ++n)
                est = std::min(est, rep.sequence[static_cast<std::size_t>(n - 1)].root);
            rep.liminf_estimate = est;
            if (!mult_limit) {
                rep.estimate_only = true;
                rep.note = "liminf estimated from the tail window; not a certificate";
            }
            break;
        }
    }

    double cl = rep.certified_lower(), cu = rep.certified_upper();
    if (cu <= 1.0 + kVerdictTol)
        rep.verdict = GrowthVerdict::subexponential;
    else if (cl > 1.0 + kVerdictTol)
        rep.verdict = GrowthVerdict::exponential;
    else
        rep.verdict = GrowthVerdict::undetermined;
    if (kind == GrowthKind::multiplicity && rep.estimate_only)
        rep.verdict = GrowthVerdict::undetermined;
    return rep;
}

std::pair<double, double> growth_rate_bracket(const QuantumGroupModel& model, const IrrepLabel& u,
                                              std::int64_t depth, std::size_t max_support) {
    GrowthReport rep =
        growth_sequence(model, u, depth, GrowthKind::quantum_dim, {}, std::nullopt, max_support);
    return {rep.lower_bound, rep.upper_bound};
}

GrowthSandwichReport verify_prop43(const QuantumGroupModel& model, const IrrepLabel& u,
                                   std::int64_t depth, std::size_t max_support) {
    GrowthSandwichReport out;
    out.irrep = u;
    out.depth = depth;
    auto [lam, Lam] = model.lambda_bounds(u);
    out.lambda = lam;
    out.Lambda = Lam;

    GrowthReport qd =
        growth_sequence(model, u, depth, GrowthKind::quantum_dim, {}, std::nullopt, max_support);
    out.bracket_lower = qd.lower_bound;
    out.bracket_upper = qd.upper_bound;
    out.certified_lower = qd.certified_lower();
    out.certified_upper = qd.certified_upper();

    bool holds = lam <= Lam * (1.0 + kRelTol);
    for (auto& p : qd.sequence)
        if (p.root < Lam * (1.0 - kRelTol)) holds = false;
    // conjugate route: D_{ubar,n}^{1/n} >= Lambda_{ubar} = 1/lambda_u
    IrrepLabel ubar = model.fusion().dual(u);
    GrowthReport qdbar =
        growth_sequence(model, ubar, depth, GrowthKind::quantum_dim, {}, std::nullopt, max_support);
    for (auto& p : qdbar.sequence)
        if (p.root < (1.0 / lam) * (1.0 - kRelTol)) holds = false;
    out.holds = holds;

    GrowthReport id =
        growth_sequence(model, u, depth, GrowthKind::integral_dim, {}, std::nullopt, max_support);
    out.dim_verdict = id.verdict;
    // subexponential integral growth certifies both extreme equalities
    out.equality_detected = (id.verdict == GrowthVerdict::subexponential) && holds;
    out.strict_extremes = qd.certified_lower() > Lam * (1.0 + kRelTol);
    return out;
}

}  // namespace qgrowth
