#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgrowth/fusion.hpp"
#include "qgrowth/spectrum.hpp"

namespace qgrowth {

enum class Family { sq_u2, ao_f, au_f, table };

std::string family_name(Family f);

// A fusion system together with per-irrep quantum/integral dimensions and the
// spectra of j*j for standard solutions. Immutable; all member functions are
// pure and thread-safe.
//
// Built-in families:
//   sq_u2  — series labels; spectra are exact exponent ladders of |q|.
//   ao_f   — series labels (free orthogonal with SU(2) fusion); data seeded by
//            the eigenvalues of F*F and extended through the fusion rules.
//   au_f   — word labels (free unitary); all powers of the generator stay
//            irreducible. Only the towers g^k and G^k are modeled.
//   table  — everything read from a validated fusion table.
class QuantumGroupModel {
public:
    static QuantumGroupModel sq_u2(double q);
    // eigenvalues of F*F; must be inversion-symmetric as a multiset (the
    // spectral consequence of F·conj(F) = ±1), which implies the trace
    // normalization Trace(F*F) = Trace((F*F)^{-1}).
    static QuantumGroupModel ao_f(std::vector<double> fstarf_eigenvalues);
    // eigenvalues of F*F; must satisfy the trace normalization.
    static QuantumGroupModel au_f(std::vector<double> fstarf_eigenvalues);
    static QuantumGroupModel table(TableDataPtr data);

    Family family() const { return family_; }
    const FusionSystem& fusion() const { return fusion_; }
    const std::vector<double>& fstarf_eigenvalues() const { return fstarf_; }

    // deformation parameter in (0, 1]: |q| for sq_u2, the solution of
    // q + 1/q = Trace(F*F) for ao_f, 1 otherwise
    double q() const { return q_; }

    bool kac() const { return kac_; }

    double qdim(const IrrepLabel& u) const;
    // exact Laurent form of the quantum dimension, when the family has one
    std::optional<LaurentPoly> qdim_laurent(const IrrepLabel& u) const;
    std::int64_t intdim(const IrrepLabel& u) const;

    // Sp(j*j) for a standard solution. The multiset has intdim(u) entries;
    // materialization is capped (au_f towers and ao_f extensions grow with
    // the integral dimension).
    EigenSpectrum jj_spectrum(const IrrepLabel& u, std::size_t max_entries = kMaxSupport) const;

    // (lambda_u, Lambda_u): spectrum extremes, computed without materializing
    // the full multiset.
    std::pair<double, double> lambda_bounds(const IrrepLabel& u) const;

    // Exact growth limits known from family structure (see growth.hpp);
    // nullopt when no closed form applies.
    std::optional<double> qdim_growth_limit(const IrrepLabel& u) const;
    std::optional<double> intdim_growth_limit(const IrrepLabel& u) const;

    // First labels in canonical order, for probing/enumeration: series
    // u_0..u_depth, word towers 1, g..g^depth, G..G^depth, or all table keys.
    std::vector<IrrepLabel> enumerate(std::int64_t depth) const;

    std::string describe() const;

    // solves s + 1/s = t for the root 0 < s <= 1 (t >= 2)
    static double solve_deformation(double t);

private:
    QuantumGroupModel(Family f, FusionSystem fs) : family_(f), fusion_(std::move(fs)) {}

    void require_pure_word(const IrrepLabel& u) const;

    Family family_;
    FusionSystem fusion_;
    std::vector<double> fstarf_;
    double q_ = 1.0;
    double int_q_ = 1.0;  // deformation of the integral-dimension recursion (ao_f)
    bool kac_ = true;
};

}  // namespace qgrowth
