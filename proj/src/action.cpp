#include "qgrowth/action.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qgrowth {

namespace {

using cvec = std::vector<std::complex<double>>;
using cmat = std::vector<cvec>;  // row-major, square

// antilinear in the first argument
std::complex<double> inner(const cvec& x, const cvec& y) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

cvec matvec(const cmat& m, const cvec& x) {
    cvec y(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) y[i] += m[i][j] * x[j];
    return y;
}

cvec scale_diag(const std::vector<double>& d, const cvec& x) {
    cvec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = d[i] * x[i];
    return y;
}

cvec random_cvec(Rng& rng, std::size_t n) {
    cvec v(n);
    for (auto& z : v) z = rng.complex_gaussian();
    return v;
}

// random unitary via modified Gram-Schmidt on a Gaussian matrix
cmat random_unitary(Rng& rng, std::size_t n) {
    cmat cols(n, cvec(n));
    for (std::size_t j = 0; j < n; ++j) {
        cvec v = random_cvec(rng, n);
        for (std::size_t k = 0; k < j; ++k) {
            std::complex<double> c = inner(cols[k], v);
            for (std::size_t i = 0; i < n; ++i) v[i] -= c * cols[k][i];
        }
        double nrm = std::sqrt(std::abs(inner(v, v)));
        for (auto& z : v) z /= nrm;
        cols[j] = std::move(v);
    }
    cmat u(n, cvec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u[i][j] = cols[j][i];
    return u;
}

cmat adjoint(const cmat& m) {
    cmat a(m.size(), cvec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = std::conj(m[j][i]);
    return a;
}

cmat conj_diag(const cmat& u, const std::vector<double>& d) {
    // U* diag(d) U
    std::size_t n = u.size();
    cmat ustar = adjoint(u);
    cmat out(n, cvec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += ustar[i][k] * d[k] * u[k][j];
            out[i][j] = s;
        }
    return out;
}

}  // namespace

SpectralActionModel SpectralActionModel::translation(QuantumGroupModel base) {
    SpectralActionModel a(Kind::translation, std::move(base));
    a.name_ = "translation";
    return a;
}

SpectralActionModel SpectralActionModel::bdv(QuantumGroupModel source, QuantumGroupModel target,
                                             LabelMap correspondence, std::int64_t check_depth) {
    if (!correspondence) throw Error("bdv action needs a label correspondence");
    const FusionSystem& sf = source.fusion();
    const FusionSystem& tf = target.fusion();
    if (correspondence(sf.unit()) != tf.unit())
        throw Error("bdv correspondence does not map the unit to the unit");
    // fusion-preserving on the sub-tower generated up to check_depth
    std::vector<IrrepLabel> tower = source.enumerate(check_depth);
    for (auto& a : tower)
        for (auto& b : tower) {
            MultiplicityVector lhs;
            try {
                lhs = sf.fuse(a, b);
            } catch (const Error&) {
                continue;  // outside the modeled tower (mixed free words)
            }
            MultiplicityVector mapped;
            for (auto& [l, m] : lhs.entries()) mapped.add(correspondence(l), m);
            MultiplicityVector rhs = tf.fuse(correspondence(a), correspondence(b));
            if (!(mapped == rhs))
                throw Error("correspondence is not fusion-preserving at (" + a.str() + ", " +
                            b.str() + "): image decomposes as " + rhs.str() + ", expected " +
                            mapped.str());
        }
    SpectralActionModel act(Kind::bdv, std::move(source));
    act.target_ = std::move(target);
    act.phi_ = std::move(correspondence);
    act.relaxed_tensor_ = true;
    act.name_ = "bdv";
    return act;
}

SpectralActionModel SpectralActionModel::custom(QuantumGroupModel base,
                                                std::vector<CustomEntry> entries,
                                                bool relaxed_tensor,
                                                std::int64_t certificate_depth) {
    SpectralActionModel act(Kind::custom, std::move(base));
    act.relaxed_tensor_ = relaxed_tensor;
    act.name_ = "custom";
    const QuantumGroupModel& m = act.base_;
    if (certificate_depth < 1) certificate_depth = default_growth_depth(m);

    // always include the unit with its forced data
    CustomEntry unit_entry;
    unit_entry.irrep = m.fusion().unit();
    unit_entry.mult = 1;
    unit_entry.JJ = EigenSpectrum::from_values({1.0});
    act.entries_[unit_entry.irrep] = unit_entry;

    for (auto& e : entries) {
        m.fusion().require_valid(e.irrep);
        std::string where = "action spectrum entry \"" + e.irrep.str() + "\"";
        if (e.irrep == m.fusion().unit()) {
            if (e.mult != 1 || !e.JJ.is_trivial())
                throw Error(where + ": the unit carries mult 1 and Sp(J*J) = {1}");
            continue;
        }
        if (e.mult < 1) throw Error(where + ": mult must be >= 1");
        if (static_cast<std::int64_t>(e.JJ.size()) != e.mult)
            throw Error(where + ": Sp(J*J) has " + std::to_string(e.JJ.size()) +
                        " entries but mult is " + std::to_string(e.mult));
        double qm = e.JJ.sum();
        double d = m.qdim(e.irrep);
        if (static_cast<double>(e.mult) > qm * (1.0 + kRelTol))
            throw Error(where + ": mult " + std::to_string(e.mult) +
                        " exceeds the quantum multiplicity " + std::to_string(qm));
        if (qm > d * (1.0 + kRelTol))
            throw Error(where + ": quantum multiplicity " + std::to_string(qm) +
                        " exceeds the quantum dimension " + std::to_string(d));
        // necessary modular bounds: Sp(J*J) within [1/B, B], B >= D_u certified
        GrowthReport g = growth_sequence(m, e.irrep, certificate_depth, GrowthKind::quantum_dim);
        double B = g.certified_upper();
        if (e.JJ.max_value() > B * (1.0 + kRelTol) || e.JJ.min_value() < (1.0 / B) * (1.0 - kRelTol))
            throw Error(where + ": Sp(J*J) leaves the certified modular window [" +
                        std::to_string(1.0 / B) + ", " + std::to_string(B) +
                        "]; no ergodic action can carry this data");
        if (act.entries_.count(e.irrep)) throw Error(where + ": duplicate entry");
        act.entries_[e.irrep] = e;
    }
    // dual pairing: Trace(J*J on u) = Trace((J*J)^{-1} on ubar) when both listed
    for (auto& [l, e] : act.entries_) {
        IrrepLabel lb = act.base_.fusion().dual(l);
        auto it = act.entries_.find(lb);
        if (it == act.entries_.end()) continue;
        if (!approx_eq(e.JJ.sum(), it->second.JJ.sum_inverse()))
            throw Error("action spectrum entries \"" + l.str() + "\" and \"" + lb.str() +
                        "\": Trace(J*J) does not match the inverse trace on the conjugate");
    }
    return act;
}

SpectralActionModel SpectralActionModel::wang_cuntz(std::int64_t n, std::int64_t depth) {
    if (n < 2) throw Error("wang action needs n >= 2");
    if (depth < 1) throw Error("wang action needs depth >= 1");
    QuantumGroupModel base = QuantumGroupModel::au_f(std::vector<double>(n, 1.0));
    std::vector<CustomEntry> entries;
    std::string word;
    for (std::int64_t k = 1; k <= depth; ++k) {
        word += 'g';
        CustomEntry e;
        e.irrep = IrrepLabel::word(word);
        e.mult = 1;
        e.JJ = EigenSpectrum::from_values({pow_int(static_cast<double>(n), k)});
        entries.push_back(std::move(e));
    }
    SpectralActionModel act = custom(std::move(base), std::move(entries), false, depth + 1);
    act.name_ = "wang";
    return act;
}

bool SpectralActionModel::is_spectral(const IrrepLabel& u) const {
    if (!base_.fusion().is_valid(u)) return false;
    switch (kind_) {
        case Kind::translation:
        case Kind::bdv: {
            if (base_.family() == Family::au_f) {
                // only the modeled towers
                const std::string& w = u.text();
                for (char c : w)
                    if (c != w[0]) return false;
            }
            return true;
        }
        case Kind::custom: return entries_.count(u) > 0;
    }
    return false;
}

std::int64_t SpectralActionModel::mult(const IrrepLabel& u) const {
    if (!is_spectral(u)) return 0;
    switch (kind_) {
        case Kind::translation: return base_.intdim(u);
        case Kind::bdv: return target_->intdim(phi_(u));
        case Kind::custom: return entries_.at(u).mult;
    }
    return 0;
}

EigenSpectrum SpectralActionModel::JJ(const IrrepLabel& u) const {
    if (!is_spectral(u))
        throw Error("irrep \"" + u.str() + "\" is not spectral for this action");
    switch (kind_) {
        case Kind::translation: return base_.jj_spectrum(u).inverse();
        case Kind::bdv: return target_->jj_spectrum(phi_(u));
        case Kind::custom: return entries_.at(u).JJ;
    }
    return {};
}

std::vector<IrrepLabel> SpectralActionModel::spectral_probe(std::int64_t depth) const {
    if (kind_ == Kind::custom) {
        std::vector<IrrepLabel> out;
        out.reserve(entries_.size());
        for (auto& [l, e] : entries_) out.push_back(l);
        return out;
    }
    std::vector<IrrepLabel> out;
    for (auto& l : base_.enumerate(depth))
        if (is_spectral(l)) out.push_back(l);
    return out;
}

std::optional<double> SpectralActionModel::mult_growth_limit(const IrrepLabel& u) const {
    if (!is_spectral(u)) return std::nullopt;
    switch (kind_) {
        case Kind::translation: return base_.intdim_growth_limit(u);
        case Kind::bdv: return target_->intdim_growth_limit(phi_(u));
        case Kind::custom: return std::nullopt;  // decided in mult_growth from the computed run
    }
    return std::nullopt;
}

GrowthReport SpectralActionModel::mult_growth(const IrrepLabel& u, std::int64_t depth,
                                              std::size_t max_support) const {
    MultiplicityFn fn = [this](const IrrepLabel& v) { return mult(v); };
    std::optional<double> limit = mult_growth_limit(u);
    GrowthReport rep =
        growth_sequence(base_, u, depth, GrowthKind::multiplicity, fn, limit, max_support);
    if (kind_ == Kind::custom && !limit) {
        // finite spectrum: multiplicities are bounded, so the limit cannot
        // exceed 1; it equals 1 provided the power supports keep meeting the
        // spectrum, which the finite run can only sample.
        bool all_positive = true;
        for (auto& p : rep.sequence)
            if (p.value < 1.0) all_positive = false;
        if (all_positive) {
            rep.limit = 1.0;
            rep.estimate_only = false;
            rep.note = "bounded multiplicities; positivity beyond the computed depth assumed";
            rep.verdict = GrowthVerdict::subexponential;
        }
    }
    return rep;
}

std::string SpectralActionModel::describe() const {
    std::ostringstream os;
    os << name_ << " action over " << base_.describe();
    if (kind_ == Kind::custom) os << " (" << entries_.size() << " spectral irreps listed)";
    return os.str();
}

namespace {

struct KmsSample {
    std::complex<double> lhs;  // omega(sigma_{-i}(b) a*)
    std::complex<double> rhs;  // omega(a* b)
};

// One evaluation with J*J and j*j given as matrices in arbitrary orthonormal
// bases of the multiplicity and representation spaces.
KmsSample kms_sample(const cmat& JJ, const cmat& jj, const cmat& jjinv, double R2, double Rbar2,
                     const cvec& k, const cvec& k2, const cvec& psi, const cvec& psi2) {
    KmsSample s;
    // omega(a* b) = |R|^{-2} (k', J*J k)(psi, psi')
    s.rhs = (1.0 / R2) * inner(k2, matvec(JJ, k)) * inner(psi, psi2);
    // sigma_{-i}(b) = conj(J*J k') (x) (j*j) psi'
    cvec kb = matvec(JJ, k2);
    cvec psib = matvec(jj, psi2);
    // omega(B a*) = |Rbar|^{-2} (k_B, k)(psi, (j*j)^{-1} psi_B)
    s.lhs = (1.0 / Rbar2) * inner(kb, k) * inner(psi, matvec(jjinv, psib));
    return s;
}

cmat diag_matrix(const std::vector<double>& d) {
    cmat m(d.size(), cvec(d.size(), 0.0));
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

}  // namespace

KmsReport kms_check(const SpectralActionModel& action, const IrrepLabel& u, std::int64_t trials,
                    double tol, std::uint64_t seed) {
    if (!action.is_spectral(u))
        throw Error("irrep \"" + u.str() + "\" is not spectral for this action");
    EigenSpectrum jj = action.base().jj_spectrum(u);
    EigenSpectrum JJv = action.JJ(u);
    std::vector<double> jjd = jj.values();
    std::vector<double> jjinvd(jjd.size());
    for (std::size_t i = 0; i < jjd.size(); ++i) jjinvd[i] = 1.0 / jjd[i];
    double R2 = jj.sum();            // |R|^2 for a standard solution
    double Rbar2 = jj.sum_inverse(); // |Rbar|^2
    cmat JJm = diag_matrix(JJv.values());
    cmat jjm = diag_matrix(jjd);
    cmat jjinvm = diag_matrix(jjinvd);

    KmsReport rep;
    rep.irrep = u;
    rep.trials = trials;
    rep.seed = seed;
    rep.tol = tol;
    Rng rng(seed);
    std::size_t mdim = JJv.size(), hdim = jjd.size();
    for (std::int64_t t = 0; t < trials; ++t) {
        cvec k = random_cvec(rng, mdim), k2 = random_cvec(rng, mdim);
        cvec psi = random_cvec(rng, hdim), psi2 = random_cvec(rng, hdim);
        KmsSample s = kms_sample(JJm, jjm, jjinvm, R2, Rbar2, k, k2, psi, psi2);
        rep.max_violation = std::max(rep.max_violation, std::abs(s.lhs - s.rhs));
    }
    rep.pass = rep.max_violation <= tol;
    return rep;
}

KmsInvarianceReport kms_check_random_basis(const SpectralActionModel& action, const IrrepLabel& u,
                                           std::int64_t trials, double tol, std::uint64_t seed) {
    if (!action.is_spectral(u))
        throw Error("irrep \"" + u.str() + "\" is not spectral for this action");
    EigenSpectrum jj = action.base().jj_spectrum(u);
    EigenSpectrum JJv = action.JJ(u);
    std::vector<double> jjd = jj.values();
    std::vector<double> jjinvd(jjd.size());
    for (std::size_t i = 0; i < jjd.size(); ++i) jjinvd[i] = 1.0 / jjd[i];
    double R2 = jj.sum(), Rbar2 = jj.sum_inverse();
    cmat JJdiag = diag_matrix(JJv.values());
    cmat jjm = diag_matrix(jjd), jjinvm = diag_matrix(jjinvd);

    KmsInvarianceReport out;
    out.kms.irrep = u;
    out.kms.trials = trials;
    out.kms.seed = seed;
    out.kms.tol = tol;
    Rng rng(seed);
    std::size_t mdim = JJv.size(), hdim = jjd.size();
    for (std::int64_t t = 0; t < trials; ++t) {
        cvec k = random_cvec(rng, mdim), k2 = random_cvec(rng, mdim);
        cvec psi = random_cvec(rng, hdim), psi2 = random_cvec(rng, hdim);
        KmsSample s0 = kms_sample(JJdiag, jjm, jjinvm, R2, Rbar2, k, k2, psi, psi2);
        // same state expressed in a rotated multiplicity basis
        cmat U = random_unitary(rng, mdim);
        cmat Ustar = adjoint(U);
        cmat JJrot = conj_diag(U, JJv.values());  // U* diag U
        cvec krot = matvec(Ustar, k), k2rot = matvec(Ustar, k2);
        KmsSample s1 = kms_sample(JJrot, jjm, jjinvm, R2, Rbar2, krot, k2rot, psi, psi2);
        out.kms.max_violation = std::max(out.kms.max_violation, std::abs(s1.lhs - s1.rhs));
        out.max_basis_deviation = std::max(
            {out.max_basis_deviation, std::abs(s1.lhs - s0.lhs), std::abs(s1.rhs - s0.rhs)});
    }
    out.kms.pass = out.kms.max_violation <= tol;
    return out;
}

ModularBoundReport verify_thm48(const SpectralActionModel& action, const IrrepLabel& u,
                                std::int64_t depth, std::size_t max_support) {
    if (!action.is_spectral(u))
        throw Error("irrep \"" + u.str() + "\" is not spectral for this action");
    ModularBoundReport rep;
    rep.irrep = u;
    rep.depth = depth;
    rep.relaxed_tensor = action.relaxed_tensor();

    EigenSpectrum JJv = action.JJ(u);
    rep.jj_min = JJv.min_value();
    rep.jj_max = JJv.max_value();

    GrowthReport g = growth_sequence(action.base(), u, depth, GrowthKind::quantum_dim, {},
                                     std::nullopt, max_support);
    rep.certificate = g.certified_upper();
    rep.bound_holds = rep.jj_max <= rep.certificate * (1.0 + kRelTol) &&
                      rep.jj_min >= (1.0 / rep.certificate) * (1.0 - kRelTol);

    GrowthReport mg = action.mult_growth(u, depth, max_support);
    rep.mult_one_certified =
        mg.limit.has_value() && approx_eq(*mg.limit, 1.0) && !mg.estimate_only;
    if (rep.relaxed_tensor && rep.mult_one_certified) {
        double D_low = g.certified_lower();
        rep.equality_b =
            approx_eq(rep.jj_max, D_low) && approx_eq(rep.jj_min, 1.0 / D_low);
        if (!rep.equality_b)
            rep.note = "relaxed tensor with multiplicity rate 1 but extremes do not attain the "
                       "certified growth value";
    }
    return rep;
}

}  // namespace qgrowth
