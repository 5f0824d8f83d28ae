#include "qgrowth/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qgrowth {

namespace {

const char* kFactorialNote =
    "factoriality of M and of the centralizer is an input assertion, not computed";

std::int64_t igcd(std::int64_t a, std::int64_t b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

std::string factor_class_name(FactorClass c) {
    switch (c) {
        case FactorClass::trace: return "trace";
        case FactorClass::III_lambda: return "III_lambda_candidate";
        case FactorClass::III_one: return "III_1_candidate";
        case FactorClass::undetermined: return "undetermined";
    }
    return {};
}

ModularSpectrumReport delta_point_spectrum(const SpectralActionModel& action,
                                           std::optional<std::vector<IrrepLabel>> subset,
                                           std::int64_t default_depth) {
    std::vector<IrrepLabel> irreps =
        subset ? std::move(*subset) : action.spectral_probe(default_depth);
    // the unit subspace always contributes the eigenvalue 1
    IrrepLabel unit = action.base().fusion().unit();
    if (std::find(irreps.begin(), irreps.end(), unit) == irreps.end())
        irreps.insert(irreps.begin(), unit);

    ModularSpectrumReport rep;
    rep.factorial_assumed = action.factorial_assumed();
    rep.assumptions_note = kFactorialNote;
    for (auto& u : irreps) {
        if (!action.is_spectral(u))
            throw Error("irrep \"" + u.str() + "\" is not spectral for this action");
        EigenSpectrum s = EigenSpectrum::tensor(action.JJ(u).inverse(),
                                                action.base().jj_spectrum(u).inverse());
        rep.global = EigenSpectrum::merge(rep.global, s);
        rep.per_irrep.emplace_back(u, std::move(s));
    }
    return rep;
}

TracialReport is_tracial(const SpectralActionModel& action, std::int64_t probe_depth) {
    TracialReport rep;
    // structural shortcut: a Kac base has trivial j*j everywhere, and the
    // translation action then inherits trivial J*J
    bool base_kac = action.base().kac();
    bool jj_decided_trivial = base_kac;
    bool JJ_decided_trivial = false;
    switch (action.kind()) {
        case SpectralActionModel::Kind::translation: JJ_decided_trivial = base_kac; break;
        case SpectralActionModel::Kind::bdv:
            JJ_decided_trivial = action.target() && action.target()->kac();
            break;
        case SpectralActionModel::Kind::custom: break;
    }
    if (jj_decided_trivial && JJ_decided_trivial &&
        action.kind() != SpectralActionModel::Kind::custom) {
        rep.tracial = true;
        return rep;
    }
    for (auto& u : action.spectral_probe(probe_depth)) {
        if (!action.base().jj_spectrum(u).is_trivial()) {
            rep.witness = u;
            rep.condition = 'a';
            return rep;
        }
        if (!action.JJ(u).is_trivial()) {
            rep.witness = u;
            rep.condition = 'b';
            return rep;
        }
    }
    rep.tracial = true;
    return rep;
}

Classification connes_subgroup(const ModularSpectrumReport& report, double tol) {
    if (report.global.empty()) throw Error("empty modular spectrum");
    Classification out;
    out.note = report.assumptions_note;

    if (report.global.exact() && report.global.base() < 1.0) {
        // exponent lattice of a single base: exact gcd
        std::int64_t g = 0;
        for (auto e : report.global.exponents()) g = igcd(g, e);
        if (g == 0) {
            out.kind = FactorClass::trace;
            return out;
        }
        out.kind = FactorClass::III_lambda;
        out.lambda = pow_int(report.global.base(), g);
        return out;
    }

    std::vector<double> logs;
    double max_log = 0.0;
    for (double v : report.global.values()) {
        double l = std::fabs(std::log(v));
        max_log = std::max(max_log, l);
        if (l > tol) logs.push_back(l);
    }
    if (logs.empty()) {
        out.kind = FactorClass::trace;
        return out;
    }

    double snap = tol * std::max(1.0, max_log);
    // Euclidean reduction of the log set with snapping
    double g = logs[0];
    for (double l : logs) {
        double a = std::max(g, l), b = std::min(g, l);
        while (b > snap) {
            double r = std::fmod(a, b);
            if (r > b - snap) r = 0.0;  // within tolerance of a multiple
            if (r < snap) r = 0.0;
            a = b;
            b = r;
        }
        g = a;
        if (g < snap) break;
    }
    if (g < snap) {
        // the reduction collapsed: no common generator at this resolution
        out.kind = FactorClass::III_one;
        return out;
    }
    if (g < 8.0 * snap) {
        out.kind = FactorClass::undetermined;
        out.note = "log-lattice reduction unstable at tolerance " + std::to_string(tol);
        return out;
    }
    // all logs must be integer multiples of g
    for (double l : logs) {
        double m = std::round(l / g);
        if (std::fabs(l - m * g) > snap * std::max(1.0, m)) {
            out.kind = FactorClass::undetermined;
            out.note = "log-lattice reduction unstable at tolerance " + std::to_string(tol);
            return out;
        }
    }
    out.kind = FactorClass::III_lambda;
    // snap the generator to an eigenvalue actually present, when one matches
    out.lambda = std::exp(-g);
    for (double v : report.global.values())
        if (v < 1.0 && std::fabs(std::log(v) + g) <= snap) {
            out.lambda = v;
            break;
        }
    return out;
}

Type3BoundReport type3_lower_bound(const SpectralActionModel& action, std::int64_t probe_depth,
                                   std::int64_t growth_depth) {
    if (growth_depth < 1) growth_depth = default_growth_depth(action.base());
    Type3BoundReport rep;
    rep.assumptions_note = kFactorialNote;
    const QuantumGroupModel& m = action.base();
    for (auto& u : action.spectral_probe(probe_depth)) {
        if (u == m.fusion().unit()) continue;
        double d = m.qdim(u);
        double dim = static_cast<double>(m.intdim(u));
        // require a certified dimension gap; borderline irreps are excluded,
        // which keeps the bound valid
        if (d - dim <= kVerdictTol * d) continue;
        auto [lam, Lam] = m.lambda_bounds(u);
        GrowthReport g = growth_sequence(m, u, growth_depth, GrowthKind::quantum_dim);
        Type3BoundRow row;
        row.irrep = u;
        row.lambda_u = lam;
        row.Lambda_u = Lam;
        row.certificate = g.certified_upper();
        row.value = std::min(lam, 1.0 / Lam) / row.certificate;
        rep.rows.push_back(row);
        rep.bound = std::max(rep.bound, row.value);
    }
    if (rep.rows.empty())
        throw Error("type III lower bound is vacuous: no spectral irrep with d(u) > dim(u); "
                    "for Kac-type bases see the kac bound");
    rep.type3_one_forced = rep.bound >= 1.0 - kRelTol;
    return rep;
}

double kac_bound(const SpectralActionModel& action, std::int64_t probe_depth) {
    if (!action.base().kac())
        throw Error("kac bound applies to Kac-type bases only; this model is not Kac");
    std::vector<IrrepLabel> probe = action.spectral_probe(probe_depth);
    std::sort(probe.begin(), probe.end(), [&](const IrrepLabel& a, const IrrepLabel& b) {
        return action.base().intdim(a) < action.base().intdim(b);
    });
    for (auto& u : probe)
        if (!action.JJ(u).is_trivial())
            return 1.0 / static_cast<double>(action.base().intdim(u));
    throw Error("action is tracial: the modular group is trivial on every spectral subspace");
}

KacNecessityReport kac_exponential_necessity(const SpectralActionModel& action,
                                             std::int64_t probe_depth,
                                             std::int64_t growth_depth) {
    if (!action.base().kac()) throw Error("kac necessity check applies to Kac-type bases only");
    if (growth_depth < 1) growth_depth = default_growth_depth(action.base());
    KacNecessityReport rep;
    TracialReport tr = is_tracial(action, probe_depth);
    if (tr.tracial) {
        rep.outcome = KacNecessityReport::Outcome::vacuous_tracial;
        return rep;
    }
    for (auto& u : action.spectral_probe(probe_depth)) {
        if (u == action.base().fusion().unit()) continue;
        GrowthReport g = growth_sequence(action.base(), u, growth_depth, GrowthKind::integral_dim);
        if (g.verdict == GrowthVerdict::exponential) {
            rep.outcome = KacNecessityReport::Outcome::verified;
            rep.witness = u;
            rep.witness_verdict = g.verdict;
            return rep;
        }
    }
    // valid action data cannot be non-tracial with every spectral dimension
    // certified subexponential; without an exponential witness at this depth
    // the honest answer is undetermined
    rep.outcome = KacNecessityReport::Outcome::undetermined;
    return rep;
}

}  // namespace qgrowth
