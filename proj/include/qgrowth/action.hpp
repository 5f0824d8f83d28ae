#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgrowth/growth.hpp"
#include "qgrowth/model.hpp"

namespace qgrowth {

// One homogeneous element of the spectral subalgebra: a = conj(k) (x) psi with
// k in the multiplicity space of `support` and psi in its representation space.
struct SpectralElement {
    IrrepLabel support;
    std::vector<std::complex<double>> k;    // length mult(support)
    std::vector<std::complex<double>> psi;  // length intdim(support)
};

// Spectral data of an ergodic action: which irreps occur, the dimension of
// each multiplicity space, and Sp(J*J) on it. Built-ins:
//   translation — every irrep spectral, mult(u) = intdim(u),
//                 Sp(J*J) = Sp((j*j)^{-1}) (the convention that makes the
//                 modular spectrum on the u-subspace the product set
//                 Sp(j*j) x Sp((j*j)^{-1}));
//   bdv         — from a fusion-preserving bijection onto a second model:
//                 mult(u) = intdim of the image, Sp(J*J) = image jj-spectrum,
//                 relaxed_tensor set;
//   custom      — finite spectrum list, validated on construction: |Sp(J*J)| =
//                 mult(u), mult(u) <= Trace(J*J) <= d(u), Sp(J*J) within the
//                 certified growth bounds [1/B_u, B_u], and the inverse-trace
//                 pairing when both u and its dual are listed.
class SpectralActionModel {
public:
    enum class Kind { translation, bdv, custom };

    struct CustomEntry {
        IrrepLabel irrep;
        std::int64_t mult = 1;
        EigenSpectrum JJ;
    };

    using LabelMap = std::function<IrrepLabel(const IrrepLabel&)>;

    static SpectralActionModel translation(QuantumGroupModel base);
    static SpectralActionModel bdv(QuantumGroupModel source, QuantumGroupModel target,
                                   LabelMap correspondence, std::int64_t check_depth = 4);
    static SpectralActionModel custom(QuantumGroupModel base, std::vector<CustomEntry> entries,
                                      bool relaxed_tensor = false,
                                      std::int64_t certificate_depth = 0);
    // the Cuntz-gradation tower over A_u(n): spectrum {g^k, k <= depth},
    // mult 1, Sp(J*J)(g^k) = {n^k}
    static SpectralActionModel wang_cuntz(std::int64_t n, std::int64_t depth = 6);

    Kind kind() const { return kind_; }
    const QuantumGroupModel& base() const { return base_; }
    const QuantumGroupModel* target() const { return target_ ? &*target_ : nullptr; }
    bool relaxed_tensor() const { return relaxed_tensor_; }
    const std::string& name() const { return name_; }

    // factoriality of M and its centralizer is an input assertion, recorded in
    // reports and never computed
    bool factorial_assumed() const { return factorial_assumed_; }
    SpectralActionModel& assume_factorial(bool yes = true) {
        factorial_assumed_ = yes;
        return *this;
    }

    bool is_spectral(const IrrepLabel& u) const;
    std::int64_t mult(const IrrepLabel& u) const;  // 0 when not spectral
    EigenSpectrum JJ(const IrrepLabel& u) const;   // error when not spectral
    double quantum_mult(const IrrepLabel& u) const { return JJ(u).sum(); }

    // spectral irreps in canonical order: the listed set for custom actions,
    // the enumeration towers up to `depth` otherwise
    std::vector<IrrepLabel> spectral_probe(std::int64_t depth) const;
    bool spectrum_is_finite() const { return kind_ == Kind::custom; }

    // closed-form limit of the multiplicity growth rate, when family
    // structure certifies one
    std::optional<double> mult_growth_limit(const IrrepLabel& u) const;

    GrowthReport mult_growth(const IrrepLabel& u, std::int64_t depth,
                             std::size_t max_support = kMaxSupport) const;

    std::string describe() const;

private:
    explicit SpectralActionModel(Kind k, QuantumGroupModel base)
        : kind_(k), base_(std::move(base)) {}

    Kind kind_;
    QuantumGroupModel base_;
    std::optional<QuantumGroupModel> target_;
    LabelMap phi_;
    std::map<IrrepLabel, CustomEntry> entries_;
    bool relaxed_tensor_ = false;
    bool factorial_assumed_ = false;
    std::string name_ = "action";
};

struct KmsReport {
    IrrepLabel irrep;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    double max_violation = 0.0;
    bool pass = false;
    bool operator==(const KmsReport&) const = default;
};

// Monte-Carlo check of the KMS identity of the invariant state on elements
// supported on one irrep: for a = conj(k) (x) psi, b = conj(k') (x) psi',
//   omega(a* b)            = |R|^{-2} (k', J*J k) (psi, psi')
//   omega(b a*)            = |Rbar|^{-2} (k', k) (psi, (j*j)^{-1} psi')
//   sigma_{-i}(conj(k) (x) psi) = conj(J*J k) (x) (j*j) psi
// and the check compares omega(sigma_{-i}(b) a*) against omega(a* b).
// Inner products are antilinear in the first argument; |R|^2 = Trace(j*j),
// |Rbar|^2 = Trace((j*j)^{-1}).
KmsReport kms_check(const SpectralActionModel& action, const IrrepLabel& u, std::int64_t trials,
                    double tol, std::uint64_t seed = kDefaultSeed);

// Same identity evaluated in a random unitary conjugation of the multiplicity
// basis per trial; also returns the worst deviation of each side from its
// diagonal-basis value (both must vanish: the state does not see the basis).
struct KmsInvarianceReport {
    KmsReport kms;
    double max_basis_deviation = 0.0;
};
KmsInvarianceReport kms_check_random_basis(const SpectralActionModel& action, const IrrepLabel& u,
                                           std::int64_t trials, double tol,
                                           std::uint64_t seed = kDefaultSeed);

struct ModularBoundReport {
    IrrepLabel irrep;
    std::int64_t depth = 0;
    double jj_min = 0.0;
    double jj_max = 0.0;
    double certificate = 0.0;  // B >= D_u, from the growth bracket
    bool bound_holds = false;
    bool mult_one_certified = false;
    bool relaxed_tensor = false;
    bool equality_b = false;
    std::string note;
    bool operator==(const ModularBoundReport&) const = default;
};

// Certificate for the modular eigenvalue bounds: Sp(J*J) within [1/B, B] with
// B the certified upper bound for D_u at the given depth. When the action is
// relaxed-tensor and the multiplicity growth rate is certified to be 1, also
// checks that the extremes of Sp(J*J) attain the certified value of D_u.
ModularBoundReport verify_thm48(const SpectralActionModel& action, const IrrepLabel& u,
                                std::int64_t depth, std::size_t max_support = kMaxSupport);

}  // namespace qgrowth
