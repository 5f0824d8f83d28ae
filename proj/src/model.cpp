#include "qgrowth/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qgrowth {

std::string family_name(Family f) {
    switch (f) {
        case Family::sq_u2: return "sq_u2";
        case Family::ao_f: return "ao_f";
        case Family::au_f: return "au_f";
        case Family::table: return "table";
    }
    return {};
}

double QuantumGroupModel::solve_deformation(double t) {
    if (t < 2.0 - 1e-12) throw Error("no deformation parameter: trace below 2");
    if (t <= 2.0) return 1.0;
    // smaller root of s^2 - t s + 1 = 0
    return (t - std::sqrt(t * t - 4.0)) / 2.0;
}

QuantumGroupModel QuantumGroupModel::sq_u2(double q) {
    if (q == 0.0 || std::fabs(q) > 1.0)
        throw Error("sq_u2 requires a nonzero parameter with |q| <= 1, got " + std::to_string(q));
    QuantumGroupModel m(Family::sq_u2, FusionSystem::su2());
    m.q_ = std::fabs(q);  // all spectra and dimensions depend on |q| only
    m.int_q_ = 1.0;
    m.kac_ = (m.q_ == 1.0);
    return m;
}

QuantumGroupModel QuantumGroupModel::ao_f(std::vector<double> eigs) {
    if (eigs.size() < 2) throw Error("ao_f requires rank(F) >= 2");
    std::sort(eigs.begin(), eigs.end());
    for (double x : eigs)
        if (!(x > 0.0)) throw Error("ao_f eigenvalues must be strictly positive");
    // F conj(F) = +-1 forces Sp(F*F) to be closed under inversion
    for (std::size_t i = 0; i < eigs.size(); ++i)
        if (!approx_eq(eigs[i], 1.0 / eigs[eigs.size() - 1 - i]))
            throw Error("ao_f eigenvalue list is not inversion-symmetric (entry " +
                        std::to_string(eigs[i]) + " lacks a reciprocal partner)");
    QuantumGroupModel m(Family::ao_f, FusionSystem::su2());
    m.fstarf_ = std::move(eigs);
    double trace = 0.0;
    for (double x : m.fstarf_) trace += x;
    m.q_ = solve_deformation(trace);
    m.int_q_ = solve_deformation(static_cast<double>(m.fstarf_.size()));
    m.kac_ = approx_eq(trace, static_cast<double>(m.fstarf_.size()));
    return m;
}

QuantumGroupModel QuantumGroupModel::au_f(std::vector<double> eigs) {
    if (eigs.size() < 2) throw Error("au_f requires rank(F) >= 2");
    std::sort(eigs.begin(), eigs.end());
    double trace = 0.0, trace_inv = 0.0;
    for (double x : eigs) {
        if (!(x > 0.0)) throw Error("au_f eigenvalues must be strictly positive");
        trace += x;
        trace_inv += 1.0 / x;
    }
    if (!approx_eq(trace, trace_inv))
        throw Error("au_f eigenvalues violate the normalization Trace(F*F) = Trace((F*F)^{-1}): "
                    "traces " + std::to_string(trace) + " and " + std::to_string(trace_inv));
    QuantumGroupModel m(Family::au_f, FusionSystem::free_power());
    m.fstarf_ = std::move(eigs);
    m.q_ = 1.0;
    m.kac_ = true;
    for (double x : m.fstarf_)
        if (!approx_eq(x, 1.0)) m.kac_ = false;
    return m;
}

QuantumGroupModel QuantumGroupModel::table(TableDataPtr data) {
    QuantumGroupModel m(Family::table, FusionSystem::table(std::move(data)));
    m.kac_ = true;
    for (auto& ir : m.fusion_.table_data()->irreps)
        if (!approx_eq(ir.qdim, static_cast<double>(ir.dim))) m.kac_ = false;
    return m;
}

void QuantumGroupModel::require_pure_word(const IrrepLabel& u) const {
    const std::string& w = u.text();
    if (w.empty()) return;
    for (char c : w)
        if (c != w[0])
            throw Error("au_f spectra are modeled only for the towers g^k and its conjugate; \"" +
                        u.str() + "\" is a mixed word");
}

double QuantumGroupModel::qdim(const IrrepLabel& u) const {
    fusion_.require_valid(u);
    switch (family_) {
        case Family::sq_u2:
        case Family::ao_f: {
            std::int64_t r = u.index();
            // [r+1]_q evaluated at the deformation parameter
            double s = 0.0;
            for (std::int64_t k = -r; k <= r; k += 2) s += pow_int(q_, k);
            return s;
        }
        case Family::au_f: {
            double trace = 0.0;
            for (double x : fstarf_) trace += x;
            return pow_int(trace, static_cast<std::int64_t>(u.text().size()));
        }
        case Family::table:
            return fusion_.table_data()->irreps[fusion_.table_data()->index.at(u.text())].qdim;
    }
    return 1.0;
}

std::optional<LaurentPoly> QuantumGroupModel::qdim_laurent(const IrrepLabel& u) const {
    fusion_.require_valid(u);
    if (family_ == Family::sq_u2 || family_ == Family::ao_f)
        return LaurentPoly::q_integer(u.index() + 1);
    return std::nullopt;
}

std::int64_t QuantumGroupModel::intdim(const IrrepLabel& u) const {
    fusion_.require_valid(u);
    switch (family_) {
        case Family::sq_u2: return u.index() + 1;
        case Family::ao_f: {
            // dim(u_{r+1}) = m dim(u_r) - dim(u_{r-1}), dim(u_0) = 1, dim(u_1) = m
            std::int64_t m = static_cast<std::int64_t>(fstarf_.size());
            std::int64_t prev = 1, cur = m;
            if (u.index() == 0) return 1;
            for (std::int64_t r = 1; r < u.index(); ++r) {
                std::int64_t next = checked_add(checked_mul(m, cur), -prev);
                prev = cur;
                cur = next;
            }
            return cur;
        }
        case Family::au_f: {
            std::int64_t m = static_cast<std::int64_t>(fstarf_.size());
            std::int64_t d = 1;
            for (std::size_t i = 0; i < u.text().size(); ++i) d = checked_mul(d, m);
            return d;
        }
        case Family::table:
            return fusion_.table_data()->irreps[fusion_.table_data()->index.at(u.text())].dim;
    }
    return 1;
}

EigenSpectrum QuantumGroupModel::jj_spectrum(const IrrepLabel& u, std::size_t max_entries) const {
    fusion_.require_valid(u);
    switch (family_) {
        case Family::sq_u2: {
            std::int64_t r = u.index();
            std::vector<std::int64_t> e;
            e.reserve(r + 1);
            for (std::int64_t k = -r; k <= r; k += 2) e.push_back(k);
            return EigenSpectrum::from_exponents(q_, std::move(e));
        }
        case Family::ao_f: {
            // Seeded by Sp(F*F) and extended through the fusion rules:
            // S(u_{r+1}) = S(u_1) (x) S(u_r) minus S(u_{r-1}); the subtraction
            // failing would mean the seed data is inconsistent.
            std::int64_t r = u.index();
            if (r == 0) return EigenSpectrum::from_values({1.0});
            EigenSpectrum prev = EigenSpectrum::from_values({1.0});
            EigenSpectrum cur = EigenSpectrum::from_values(fstarf_);
            for (std::int64_t k = 1; k < r; ++k) {
                EigenSpectrum prod = EigenSpectrum::tensor(EigenSpectrum::from_values(fstarf_), cur);
                if (prod.size() > max_entries)
                    throw Error("jj spectrum of " + u.str() + " exceeds the materialization cap");
                EigenSpectrum next = prod.multiset_subtract(prev);
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
        case Family::au_f: {
            require_pure_word(u);
            EigenSpectrum letter_g = EigenSpectrum::from_values(fstarf_);
            EigenSpectrum acc = EigenSpectrum::from_values({1.0});
            for (char c : u.text()) {
                acc = EigenSpectrum::tensor(acc, c == 'g' ? letter_g : letter_g.inverse());
                if (acc.size() > max_entries)
                    throw Error("jj spectrum of " + u.str() + " exceeds the materialization cap");
            }
            return acc;
        }
        case Family::table: {
            auto& ir = fusion_.table_data()->irreps[fusion_.table_data()->index.at(u.text())];
            if (ir.jj.empty()) {
                // default in the table format: Kac-type irrep
                if (!approx_eq(ir.qdim, static_cast<double>(ir.dim)))
                    throw Error("table irrep \"" + ir.key +
                                "\" has no jj_spectrum but quantum dimension != dim");
                return EigenSpectrum::from_values(std::vector<double>(ir.dim, 1.0));
            }
            return EigenSpectrum::from_values(ir.jj);
        }
    }
    return {};
}

std::pair<double, double> QuantumGroupModel::lambda_bounds(const IrrepLabel& u) const {
    fusion_.require_valid(u);
    switch (family_) {
        case Family::sq_u2: {
            std::int64_t r = u.index();
            return {pow_int(q_, r), pow_int(q_, -r)};
        }
        case Family::ao_f: {
            // extremes multiply along the fusion extension: the top product
            // never collides with the subtracted lower tower
            std::int64_t r = u.index();
            return {pow_int(fstarf_.front(), r), pow_int(fstarf_.back(), r)};
        }
        case Family::au_f: {
            require_pure_word(u);
            double lo = 1.0, hi = 1.0;
            for (char c : u.text()) {
                if (c == 'g') {
                    lo *= fstarf_.front();
                    hi *= fstarf_.back();
                } else {
                    lo *= 1.0 / fstarf_.back();
                    hi *= 1.0 / fstarf_.front();
                }
            }
            return {lo, hi};
        }
        case Family::table: {
            EigenSpectrum s = jj_spectrum(u);
            return {s.min_value(), s.max_value()};
        }
    }
    return {1.0, 1.0};
}

std::optional<double> QuantumGroupModel::qdim_growth_limit(const IrrepLabel& u) const {
    fusion_.require_valid(u);
    switch (family_) {
        case Family::sq_u2:
        case Family::ao_f:
            // the top component of u_r^{(x)n} is u_{rn} with value [rn+1]_q,
            // and [rn+1]_q^{1/n} -> q^{-r}
            return pow_int(q_, -u.index());
        case Family::au_f:
            // powers of one generator stay irreducible, so the sequence is
            // exactly multiplicative
            return qdim(u);
        case Family::table:
            // finitely many irreps: values are bounded and >= 1
            return 1.0;
    }
    return std::nullopt;
}

std::optional<double> QuantumGroupModel::intdim_growth_limit(const IrrepLabel& u) const {
    fusion_.require_valid(u);
    switch (family_) {
        case Family::sq_u2: return 1.0;  // dims along the tower are linear in the label
        case Family::ao_f: return pow_int(int_q_, -u.index());
        case Family::au_f: return static_cast<double>(intdim(u));
        case Family::table: return 1.0;
    }
    return std::nullopt;
}

std::vector<IrrepLabel> QuantumGroupModel::enumerate(std::int64_t depth) const {
    std::vector<IrrepLabel> out;
    switch (fusion_.kind()) {
        case FusionKind::su2_type:
            for (std::int64_t r = 0; r <= depth; ++r) out.push_back(IrrepLabel::series(r));
            break;
        case FusionKind::free_power: {
            out.push_back(IrrepLabel::word(""));
            std::string g, gbar;
            for (std::int64_t k = 1; k <= depth; ++k) {
                g += 'g';
                gbar += 'G';
                out.push_back(IrrepLabel::word(gbar));
                out.push_back(IrrepLabel::word(g));
            }
            break;
        }
        case FusionKind::table_driven: out = fusion_.table_labels(); break;
    }
    return out;
}

std::string QuantumGroupModel::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::sq_u2: os << "S_qU(2), q = " << q_; break;
        case Family::ao_f: {
            os << "A_o(F), Sp(F*F) = {";
            for (std::size_t i = 0; i < fstarf_.size(); ++i) os << (i ? ", " : "") << fstarf_[i];
            os << "}";
            break;
        }
        case Family::au_f: {
            os << "A_u(F), Sp(F*F) = {";
            for (std::size_t i = 0; i < fstarf_.size(); ++i) os << (i ? ", " : "") << fstarf_[i];
            os << "}";
            break;
        }
        case Family::table:
            os << "table with " << fusion_.table_data()->irreps.size() << " irreps";
            break;
    }
    if (kac_) os << " (Kac type)";
    return os.str();
}

}  // namespace qgrowth
