#pragma once

// Integer Laurent polynomials in one variable. Quantum dimensions and the
// exact-mode eigenvalue multisets of the su2-type families live on the
// exponent lattice of a single parameter, so identities between them
// (trace identities, fusion compatibility) can be checked without rounding.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "qgrowth/common.hpp"

namespace qgrowth {

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(std::int64_t exponent, std::int64_t coeff = 1) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exponent] = coeff;
        return p;
    }

    static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }

    // [n] = x^{n-1} + x^{n-3} + ... + x^{1-n}; [0] = 0.
    static LaurentPoly q_integer(std::int64_t n) {
        LaurentPoly p;
        for (std::int64_t k = 0; k < n; ++k) p.terms_[n - 1 - 2 * k] = 1;
        return p;
    }

    bool zero() const { return terms_.empty(); }

    std::int64_t coeff(std::int64_t exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }

    const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(checked_add(ea, eb), checked_mul(ca, cb));
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly&) const = default;

    double eval(double x) const {
        double s = 0.0;
        for (auto& [e, c] : terms_) s += static_cast<double>(c) * pow_int(x, e);
        return s;
    }

    std::string str(const std::string& var = "q") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto [e, c] = *it;
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            std::int64_t a = c >= 0 ? c : -c;
            if (a != 1 || e == 0) os << a;
            if (e != 0) {
                if (a != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void add_term(std::int64_t e, std::int64_t c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
            return;
        }
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }

    std::map<std::int64_t, std::int64_t> terms_;
};

}  // namespace qgrowth
