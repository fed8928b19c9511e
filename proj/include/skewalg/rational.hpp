#pragma once

/**
 * @file rational.hpp
 * @brief Exact coefficient fields Q and Q(i) for the multivariate code.
 *
 * Both follow the same adapter interface as FiniteField. In Q(i) the base
 * automorphism is complex conjugation; Q has only the identity.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "errors.hpp"

namespace skewalg {

using rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const rational& r) {
    return r.str();
}

inline rational rational_from_decimal(const std::string& digits) {
    if (digits.empty()) throw std::invalid_argument("empty integer");
    for (char ch : digits)
        if (ch < '0' || ch > '9') throw std::invalid_argument("malformed integer '" + digits + "'");
    return rational(boost::multiprecision::cpp_int(digits));
}

class RationalField {
public:
    using value_type = rational;

    struct Formatted {
        bool negative;
        std::string body;
        bool compound;
    };

    rational zero() const { return 0; }
    rational one() const { return 1; }
    rational generator() const { return 1; }
    bool is_zero(const rational& a) const { return a == 0; }
    bool equal(const rational& a, const rational& b) const { return a == b; }
    rational add(const rational& a, const rational& b) const { return a + b; }
    rational sub(const rational& a, const rational& b) const { return a - b; }
    rational neg(const rational& a) const { return -a; }
    rational mul(const rational& a, const rational& b) const { return a * b; }
    rational inv(const rational& a) const {
        require(a != 0, "inverse of zero");
        return 1 / a;
    }
    rational from_int(long long n) const { return n; }
    rational from_decimal(const std::string& digits) const { return rational_from_decimal(digits); }
    rational automorphism(const rational& a, long long) const { return a; }
    long long automorphism_order() const { return 1; }
    std::optional<rational> atom(const std::string&) const { return std::nullopt; }

    std::string to_string(const rational& a) const { return rational_to_string(a); }
    Formatted format(const rational& a) const {
        if (a < 0) return {true, rational_to_string(-a), false};
        return {false, rational_to_string(a), false};
    }
    std::string name() const { return "Q"; }
};

/// a + b i with exact rational parts.
struct gaussian {
    rational re = 0;
    rational im = 0;
    bool operator==(const gaussian& o) const { return re == o.re && im == o.im; }
    bool operator!=(const gaussian& o) const { return !(*this == o); }
    bool operator<(const gaussian& o) const { return re < o.re || (re == o.re && im < o.im); }
};

class GaussianRationalField {
public:
    using value_type = gaussian;
    using Formatted = RationalField::Formatted;

    gaussian zero() const { return {}; }
    gaussian one() const { return {1, 0}; }
    /// i generates Q(i) over Q.
    gaussian generator() const { return {0, 1}; }
    bool is_zero(const gaussian& a) const { return a.re == 0 && a.im == 0; }
    bool equal(const gaussian& a, const gaussian& b) const { return a == b; }
    gaussian add(const gaussian& a, const gaussian& b) const { return {a.re + b.re, a.im + b.im}; }
    gaussian sub(const gaussian& a, const gaussian& b) const { return {a.re - b.re, a.im - b.im}; }
    gaussian neg(const gaussian& a) const { return {-a.re, -a.im}; }
    gaussian mul(const gaussian& a, const gaussian& b) const {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    gaussian inv(const gaussian& a) const {
        require(!is_zero(a), "inverse of zero");
        const rational n = a.re * a.re + a.im * a.im;
        return {a.re / n, -a.im / n};
    }
    gaussian from_int(long long n) const { return {n, 0}; }
    gaussian from_decimal(const std::string& digits) const { return {rational_from_decimal(digits), 0}; }
    gaussian conj(const gaussian& a) const { return {a.re, -a.im}; }
    gaussian automorphism(const gaussian& a, long long p) const { return (p % 2 != 0) ? conj(a) : a; }
    long long automorphism_order() const { return 2; }
    std::optional<gaussian> atom(const std::string& name) const {
        if (name == "i") return generator();
        return std::nullopt;
    }

    std::string to_string(const gaussian& a) const {
        auto f = format(a);
        return (f.negative ? "-" : "") + f.body;
    }
    /// "3", "-1/2", "i", "1/2*i", "(1+2*i)".
    Formatted format(const gaussian& a) const {
        if (a.im == 0) return RationalField{}.format(a.re);
        if (a.re == 0) {
            const bool neg = a.im < 0;
            const rational m = neg ? rational(-a.im) : a.im;
            return {neg, m == 1 ? std::string("i") : rational_to_string(m) + "*i", false};
        }
        std::string body = rational_to_string(a.re);
        const rational m = a.im < 0 ? rational(-a.im) : a.im;
        body += a.im < 0 ? "-" : "+";
        body += m == 1 ? std::string("i") : rational_to_string(m) + "*i";
        return {false, "(" + body + ")", true};
    }
    std::string name() const { return "Q(i)"; }
};

}  // namespace skewalg
