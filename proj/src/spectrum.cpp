#include "qgrowth/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qgrowth {

EigenSpectrum EigenSpectrum::from_exponents(double base, std::vector<std::int64_t> exponents) {
    if (!(base > 0.0) || base > 1.0) throw Error("spectrum base must satisfy 0 < base <= 1");
    EigenSpectrum s;
    s.exact_ = true;
    s.base_ = base;
    std::sort(exponents.begin(), exponents.end());
    s.exponents_ = std::move(exponents);
    s.values_.reserve(s.exponents_.size());
    // base <= 1: descending exponents give ascending values
    for (auto it = s.exponents_.rbegin(); it != s.exponents_.rend(); ++it)
        s.values_.push_back(pow_int(base, *it));
    if (base == 1.0) std::fill(s.values_.begin(), s.values_.end(), 1.0);
    return s;
}

EigenSpectrum EigenSpectrum::from_values(std::vector<double> values) {
    for (double v : values)
        if (!(v > 0.0)) throw Error("spectrum entries must be strictly positive");
    EigenSpectrum s;
    std::sort(values.begin(), values.end());
    s.values_ = std::move(values);
    return s;
}

const std::vector<std::int64_t>& EigenSpectrum::exponents() const {
    if (!exact_) throw Error("spectrum has no exact exponent form");
    return exponents_;
}

double EigenSpectrum::min_value() const {
    if (values_.empty()) throw Error("empty spectrum");
    return values_.front();
}

double EigenSpectrum::max_value() const {
    if (values_.empty()) throw Error("empty spectrum");
    return values_.back();
}

double EigenSpectrum::sum() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
}

double EigenSpectrum::sum_inverse() const {
    double s = 0.0;
    // descending values -> ascending inverses, deterministic order
    for (auto it = values_.rbegin(); it != values_.rend(); ++it) s += 1.0 / *it;
    return s;
}

EigenSpectrum EigenSpectrum::inverse() const {
    if (exact_) {
        std::vector<std::int64_t> e;
        e.reserve(exponents_.size());
        for (auto x : exponents_) e.push_back(-x);
        return from_exponents(base_, std::move(e));
    }
    std::vector<double> v;
    v.reserve(values_.size());
    for (double x : values_) v.push_back(1.0 / x);
    return from_values(std::move(v));
}

EigenSpectrum EigenSpectrum::tensor(const EigenSpectrum& a, const EigenSpectrum& b) {
    if (a.exact_ && b.exact_ && approx_eq(a.base_, b.base_, 1e-15)) {
        std::vector<std::int64_t> e;
        e.reserve(a.exponents_.size() * b.exponents_.size());
        for (auto ea : a.exponents_)
            for (auto eb : b.exponents_) e.push_back(checked_add(ea, eb));
        return from_exponents(a.base_, std::move(e));
    }
    std::vector<double> v;
    v.reserve(a.values_.size() * b.values_.size());
    for (double x : a.values_)
        for (double y : b.values_) v.push_back(x * y);
    return from_values(std::move(v));
}

EigenSpectrum EigenSpectrum::merge(const EigenSpectrum& a, const EigenSpectrum& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.exact_ && b.exact_ && approx_eq(a.base_, b.base_, 1e-15)) {
        std::vector<std::int64_t> e = a.exponents_;
        e.insert(e.end(), b.exponents_.begin(), b.exponents_.end());
        return from_exponents(a.base_, std::move(e));
    }
    std::vector<double> v = a.values_;
    v.insert(v.end(), b.values_.begin(), b.values_.end());
    return from_values(std::move(v));
}

EigenSpectrum EigenSpectrum::multiset_subtract(const EigenSpectrum& other, double rtol) const {
    if (exact_ && other.exact_ && approx_eq(base_, other.base_, 1e-15)) {
        std::vector<std::int64_t> rest = exponents_;
        for (auto e : other.exponents_) {
            auto it = std::find(rest.begin(), rest.end(), e);
            if (it == rest.end())
                throw Error("multiset subtraction failed: exponent " + std::to_string(e) +
                            " not present");
            rest.erase(it);
        }
        return from_exponents(base_, std::move(rest));
    }
    std::vector<double> rest = values_;  // sorted
    for (double x : other.values_) {
        auto it = std::min_element(rest.begin(), rest.end(), [&](double a, double b) {
            return std::fabs(a - x) < std::fabs(b - x);
        });
        if (it == rest.end() || !approx_eq(*it, x, rtol))
            throw Error("multiset subtraction failed: value " + std::to_string(x) +
                        " has no match within tolerance");
        rest.erase(it);
    }
    return from_values(std::move(rest));
}

bool EigenSpectrum::approx_equal(const EigenSpectrum& other, double rtol) const {
    if (size() != other.size()) return false;
    if (exact_ && other.exact_ && approx_eq(base_, other.base_, 1e-15))
        return exponents_ == other.exponents_ || base_ == 1.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!approx_eq(values_[i], other.values_[i], rtol)) return false;
    return true;
}

bool EigenSpectrum::is_trivial(double rtol) const {
    for (double v : values_)
        if (!approx_eq(v, 1.0, rtol)) return false;
    return true;
}

LaurentPoly EigenSpectrum::laurent() const {
    LaurentPoly p;
    for (auto e : exponents()) p += LaurentPoly::monomial(e);
    return p;
}

std::string EigenSpectrum::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ", ";
        os << values_[i];
    }
    os << "}";
    return os.str();
}

}  // namespace qgrowth
