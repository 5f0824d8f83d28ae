#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgrowth/common.hpp"
#include "qgrowth/laurent.hpp"

namespace qgrowth {

// Multiset of strictly positive reals, modeling Sp(j*j) and Sp(J*J) of
// standard solutions. Two storage modes:
//   exact  — integer exponents e over a base 0 < b <= 1, entry value b^e;
//   float  — plain values.
// Exact mode survives inversion, tensor products (same base) and unions, so
// su2-type spectra never round until a report is printed.
class EigenSpectrum {
public:
    EigenSpectrum() = default;

    static EigenSpectrum from_exponents(double base, std::vector<std::int64_t> exponents);
    static EigenSpectrum from_values(std::vector<double> values);

    bool exact() const { return exact_; }
    double base() const { return base_; }
    // ascending; exact mode only
    const std::vector<std::int64_t>& exponents() const;
    // ascending, always available
    const std::vector<double>& values() const { return values_; }

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    double min_value() const;
    double max_value() const;
    double sum() const;          // Trace of the positive operator
    double sum_inverse() const;  // Trace of its inverse

    EigenSpectrum inverse() const;

    // Pairwise products; exponents add when both operands are exact over the
    // same base.
    static EigenSpectrum tensor(const EigenSpectrum& a, const EigenSpectrum& b);

    // Multiset union.
    static EigenSpectrum merge(const EigenSpectrum& a, const EigenSpectrum& b);

    // Multiset difference (this minus other); an element of `other` with no
    // match in `this` within rtol is a hard error.
    EigenSpectrum multiset_subtract(const EigenSpectrum& other, double rtol = kRelTol) const;

    bool approx_equal(const EigenSpectrum& other, double rtol = kRelTol) const;
    bool is_trivial(double rtol = kRelTol) const;  // every entry ~ 1

    // exact Laurent form (coefficients = multiplicities); exact mode only
    LaurentPoly laurent() const;

    bool operator==(const EigenSpectrum&) const = default;

    std::string str() const;

private:
    bool exact_ = false;
    double base_ = 1.0;
    std::vector<std::int64_t> exponents_;
    std::vector<double> values_;
};

// Spectrum calculus for tensor products of standard solutions: the spectrum
// of j*j on a tensor product is the multiset of pairwise products.
inline EigenSpectrum tensor_jj_spectrum(const EigenSpectrum& a, const EigenSpectrum& b) {
    return EigenSpectrum::tensor(a, b);
}

}  // namespace qgrowth
