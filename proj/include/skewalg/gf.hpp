#pragma once

/**
 * @file gf.hpp
 * @brief Table-driven finite fields GF(q^k), Frobenius powers and prime fields.
 *
 * Elements are small integers: 0 is zero and i > 0 stands for z0^(i-1), where
 * z0 is the least primitive element in polynomial-lex order. Multiplication goes
 * through exponents, addition through the base-q digit representation.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace skewalg {

using elem = std::uint32_t;

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Parameters that pin down a field: characteristic, degree and the defining modulus.
struct FieldSpec {
    unsigned q = 2;
    unsigned k = 1;
    std::vector<unsigned> modulus;  ///< low degree first, monic, length k + 1
};

namespace detail {

// Dense polynomials over Z_q with low-degree-first coefficients.
using zq_poly = std::vector<unsigned>;

inline void zq_trim(zq_poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline zq_poly zq_mod(zq_poly a, const zq_poly& m, unsigned q) {
    zq_trim(a);
    const std::size_t dm = m.size() - 1;
    unsigned inv_lc = 1;
    while ((inv_lc * m.back()) % q != 1) ++inv_lc;
    while (a.size() >= m.size()) {
        const unsigned c = (a.back() * inv_lc) % q;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + q * q - (c * m[i]) % q) % q;
        zq_trim(a);
    }
    return a;
}

inline bool zq_irreducible(const zq_poly& f, unsigned q) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k <= 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (unsigned d = 1; d <= k / 2; ++d) {
        unsigned long long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= q;
        for (unsigned long long v = 0; v < count; ++v) {
            zq_poly g(d + 1, 0);
            unsigned long long t = v;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(t % q);
                t /= q;
            }
            g[d] = 1;
            if (zq_mod(f, g, q).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * GF(q^k) with exp/log tables.
 *
 * Also models the coefficient-field interface used by the generic linear
 * algebra and PBW code (value_type, add, mul, inv, automorphism, ...).
 * The base automorphism is the Frobenius map z -> z^q.
 */
class FiniteField {
public:
    using value_type = elem;

    static constexpr unsigned max_size = 1u << 16;

    FiniteField(unsigned q, unsigned k) {
        require(is_prime(q), "characteristic " + std::to_string(q) + " is not prime");
        require(k >= 1 && k <= 16, "extension degree must lie in [1, 16]");
        unsigned long long size = 1;
        for (unsigned i = 0; i < k; ++i) size *= q;
        guard(size <= max_size, "field size q^k exceeds 2^16");
        q_ = q;
        k_ = k;
        size_ = static_cast<elem>(size);
        t_ = size_ - 1;
        pick_modulus();
        build_tables();
        symbol_ = size_ == 4 ? "w" : "g";
    }

    unsigned q() const { return q_; }
    unsigned k() const { return k_; }
    unsigned characteristic() const { return q_; }
    elem size() const { return size_; }
    elem order() const { return t_; }  ///< order of the multiplicative group
    const std::vector<unsigned>& modulus() const { return modulus_; }
    FieldSpec spec() const { return {q_, k_, modulus_}; }
    const std::string& symbol() const { return symbol_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    /// The primitive element z0.
    elem generator() const { return t_ == 1 ? 1 : 2; }

    bool is_zero(elem a) const { return a == 0; }
    bool equal(elem a, elem b) const { return a == b; }
    bool valid(elem a) const { return a < size_; }

    elem add(elem a, elem b) const {
        if (a == 0) return b;
        if (b == 0) return a;
        if (!add_table_.empty()) return add_table_[a * size_ + b];
        return from_packed_[packed_add(to_packed_[a], to_packed_[b])];
    }
    elem neg(elem a) const {
        if (a == 0 || q_ == 2) return a;
        return mul(a, minus_one_);
    }
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        elem e = (a - 1) + (b - 1);
        if (e >= t_) e -= t_;
        return e + 1;
    }
    elem inv(elem a) const {
        require(a != 0, "inverse of zero");
        return a == 1 ? 1 : (t_ - (a - 1)) + 1;
    }
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    elem pow(elem a, long long e) const {
        if (a == 0) {
            require(e >= 0, "negative power of zero");
            return e == 0 ? 1 : 0;
        }
        long long r = static_cast<long long>(a - 1) * (e % static_cast<long long>(t_));
        r %= static_cast<long long>(t_);
        if (r < 0) r += t_;
        return static_cast<elem>(r) + 1;
    }

    /// Discrete logarithm base z0 of a nonzero element.
    elem log(elem a) const {
        require(a != 0, "logarithm of zero");
        return a - 1;
    }
    /// z0^e for any integer e.
    elem exp(long long e) const {
        long long r = e % static_cast<long long>(t_);
        if (r < 0) r += t_;
        return static_cast<elem>(r) + 1;
    }

    /// z^(q^p); p may be negative (Frobenius has order k).
    elem frobenius(elem a, long long p) const {
        if (a <= 1) return a;
        long long pp = p % static_cast<long long>(k_);
        if (pp < 0) pp += k_;
        unsigned long long e = static_cast<unsigned long long>(a - 1) * qpow_mod_t_[pp];
        return static_cast<elem>(e % t_) + 1;
    }
    /// Power of the base automorphism, used by the generic PBW code.
    elem automorphism(elem a, long long p) const { return frobenius(a, p); }
    long long automorphism_order() const { return k_; }

    /// Image of an integer in the prime subfield.
    elem from_int(long long n) const {
        long long r = n % static_cast<long long>(q_);
        if (r < 0) r += q_;
        return from_packed_[static_cast<unsigned>(r)];
    }
    bool in_prime_field(elem a) const { return to_packed_[a] < q_; }
    /// Integer value in [0, q) of a prime-field element.
    unsigned prime_value(elem a) const {
        require(in_prime_field(a), "element is not in the prime field");
        return to_packed_[a];
    }

    /// Base-q digits of the polynomial representative c0 + c1 a + ... (length k).
    std::vector<unsigned> coords(elem a) const {
        std::vector<unsigned> c(k_);
        unsigned v = to_packed_[a];
        for (unsigned i = 0; i < k_; ++i) {
            c[i] = v % q_;
            v /= q_;
        }
        return c;
    }
    elem from_coords(const std::vector<unsigned>& c) const {
        require(c.size() == k_, "coordinate vector has wrong length");
        unsigned v = 0;
        for (unsigned i = k_; i-- > 0;) {
            require(c[i] < q_, "coordinate out of range");
            v = v * q_ + c[i];
        }
        return from_packed_[v];
    }
    unsigned packed(elem a) const { return to_packed_[a]; }
    elem from_packed(unsigned v) const { return from_packed_.at(v); }

    /// Residue class of the modulus variable (the canonical basis is 1, a, ..., a^(k-1)).
    elem residue() const {
        if (k_ >= 2) return from_packed_[q_];
        return from_int(static_cast<long long>(q_) - modulus_[0]);
    }

    std::vector<elem> elements() const {
        std::vector<elem> v(size_);
        std::iota(v.begin(), v.end(), elem{0});
        return v;
    }

    /// "0", "1", or the generator power "g^e" (GF(4) uses the symbol "w").
    std::string to_string(elem a) const {
        if (a == 0) return "0";
        if (a == 1) return "1";
        if (a == 2) return symbol_;
        return symbol_ + "^" + std::to_string(a - 1);
    }
    /// Printing hook for multivariate output: (negative sign, body, needs parentheses).
    struct Formatted {
        bool negative;
        std::string body;
        bool compound;
    };
    Formatted format(elem a) const { return {false, to_string(a), false}; }

    /// Named constants accepted inside expressions: g (or w in GF(4)) and the residue a.
    std::optional<elem> atom(const std::string& name) const {
        if (name == "g" || name == symbol_) return generator();
        if (name == "a") return residue();
        return std::nullopt;
    }
    elem from_decimal(const std::string& digits) const {
        long long n = 0;
        for (char ch : digits) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("malformed integer '" + digits + "'");
            n = (n * 10 + (ch - '0')) % static_cast<long long>(q_);
        }
        return from_int(n);
    }

    /// Accepts 0, 1, integers, g^e (or w^e in GF(4)) and sums/products of these
    /// with the residue symbol a, e.g. "1+2*a^2".
    elem parse(const std::string& text) const {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw std::invalid_argument("empty field element");
        elem total = 0;
        std::size_t pos = 0;
        bool negate = false;
        if (s[0] == '+' || s[0] == '-') {
            negate = s[0] == '-';
            pos = 1;
        }
        while (true) {
            std::size_t end = s.find_first_of("+-", pos);
            std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            elem v = parse_product(term);
            total = add(total, negate ? neg(v) : v);
            if (end == std::string::npos) break;
            negate = s[end] == '-';
            pos = end + 1;
        }
        return total;
    }

    std::string name() const {
        return "GF(" + std::to_string(size_) + ")";
    }

private:
    unsigned q_ = 2, k_ = 1;
    elem size_ = 2, t_ = 1;
    elem minus_one_ = 1;
    std::vector<unsigned> modulus_;
    std::vector<unsigned> to_packed_;  // index -> digits
    std::vector<elem> from_packed_;    // digits -> index
    std::vector<unsigned long long> qpow_mod_t_;
    std::vector<elem> add_table_;
    std::string symbol_;

    unsigned packed_add(unsigned x, unsigned y) const {
        if (q_ == 2) return x ^ y;
        unsigned r = 0, base = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += ((x % q_ + y % q_) % q_) * base;
            x /= q_;
            y /= q_;
            base *= q_;
        }
        return r;
    }

    unsigned packed_mul(unsigned x, unsigned y) const {
        detail::zq_poly a(k_), b(k_), p(2 * k_, 0);
        for (unsigned i = 0; i < k_; ++i) {
            a[i] = x % q_;
            x /= q_;
            b[i] = y % q_;
            y /= q_;
        }
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < k_; ++j) p[i + j] = (p[i + j] + a[i] * b[j]) % q_;
        p = detail::zq_mod(p, modulus_, q_);
        unsigned r = 0;
        for (unsigned i = static_cast<unsigned>(p.size()); i-- > 0;) r = r * q_ + p[i];
        return r;
    }

    void pick_modulus() {
        // Lexicographically least monic irreducible: compare c_{k-1}, ..., c_0.
        for (unsigned v = 0; v < size_; ++v) {
            detail::zq_poly f(k_ + 1);
            unsigned t = v;
            for (unsigned i = 0; i < k_; ++i) {
                f[i] = t % q_;
                t /= q_;
            }
            f[k_] = 1;
            if (detail::zq_irreducible(f, q_)) {
                modulus_ = f;
                return;
            }
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    void build_tables() {
        unsigned prim = 0;
        for (unsigned cand = 1; cand < size_ && prim == 0; ++cand) {
            unsigned x = cand;
            elem ord = 1;
            while (x != 1) {
                x = packed_mul(x, cand);
                ++ord;
                if (ord > t_) break;
            }
            if (ord == t_) prim = cand;
        }
        if (prim == 0) throw std::logic_error("no primitive element found");
        to_packed_.assign(size_, 0);
        from_packed_.assign(size_, 0);
        unsigned x = 1;
        for (elem e = 0; e < t_; ++e) {
            to_packed_[e + 1] = x;
            from_packed_[x] = e + 1;
            x = packed_mul(x, prim);
        }
        qpow_mod_t_.assign(k_, 1);
        for (unsigned i = 1; i < k_; ++i) qpow_mod_t_[i] = (qpow_mod_t_[i - 1] * q_) % t_;
        if (t_ == 1)
            for (auto& v : qpow_mod_t_) v = 0;
        minus_one_ = from_packed_[q_ - 1];
        if (size_ <= 256) {
            add_table_.assign(static_cast<std::size_t>(size_) * size_, 0);
            for (elem a = 0; a < size_; ++a)
                for (elem b = 0; b < size_; ++b)
                    add_table_[a * size_ + b] = from_packed_[packed_add(to_packed_[a], to_packed_[b])];
        }
    }

    elem parse_factor(const std::string& f) const {
        if (f.empty()) throw std::invalid_argument("malformed field element");
        if (std::isdigit(static_cast<unsigned char>(f[0]))) {
            long long n = 0;
            for (char ch : f) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw std::invalid_argument("malformed integer '" + f + "'");
                n = (n * 10 + (ch - '0')) % static_cast<long long>(q_);
            }
            return from_int(n);
        }
        std::string base = f;
        long long e = 1;
        if (auto caret = f.find('^'); caret != std::string::npos) {
            base = f.substr(0, caret);
            const std::string ex = f.substr(caret + 1);
            if (ex.empty()) throw std::invalid_argument("missing exponent in '" + f + "'");
            try {
                std::size_t used = 0;
                e = std::stoll(ex, &used);
                if (used != ex.size()) throw std::invalid_argument(ex);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed exponent in '" + f + "'");
            }
        }
        elem b;
        if (base == "g" || base == symbol_)
            b = generator();
        else if (base == "a")
            b = residue();
        else
            throw std::invalid_argument("unknown field symbol '" + base + "' in " + name());
        return pow(b, e);
    }

    elem parse_product(const std::string& term) const {
        if (term.empty()) throw std::invalid_argument("malformed field element");
        elem v = 1;
        std::size_t pos = 0;
        while (true) {
            std::size_t end = term.find('*', pos);
            v = mul(v, parse_factor(term.substr(pos, end == std::string::npos ? std::string::npos : end - pos)));
            if (end == std::string::npos) break;
            pos = end + 1;
        }
        return v;
    }
};

/// Parses "GF(9)", "GF(3^2)" or "GF(2^1)" into (q, k).
inline std::pair<unsigned, unsigned> parse_field_literal(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')')
        throw std::invalid_argument("field literal must look like GF(q^k): '" + text + "'");
    const std::string body = s.substr(3, s.size() - 4);
    auto to_uint = [&](const std::string& t) {
        if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed field literal '" + text + "'");
        return static_cast<unsigned>(std::stoul(t));
    };
    if (auto caret = body.find('^'); caret != std::string::npos)
        return {to_uint(body.substr(0, caret)), to_uint(body.substr(caret + 1))};
    unsigned n = to_uint(body);
    require(n >= 2, "field size must be a prime power");
    unsigned p = 2;
    while (n % p != 0) ++p;
    unsigned k = 0, m = n;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    require(m == 1, "field size " + std::to_string(n) + " is not a prime power");
    return {p, k};
}

/// Z_p with plain modular arithmetic; used for linear algebra over the prime field.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(unsigned p) : p_(p) { require(is_prime(p), "modulus is not prime"); }

    unsigned p() const { return p_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }
    value_type add(value_type a, value_type b) const { return (a + b) % p_; }
    value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
    value_type neg(value_type a) const { return (p_ - a) % p_; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((static_cast<unsigned long long>(a) * b) % p_);
    }
    value_type inv(value_type a) const {
        require(a != 0, "inverse of zero");
        // Fermat: a^(p-2).
        unsigned long long r = 1, b = a, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<value_type>(r);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    value_type from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    std::string to_string(value_type a) const { return std::to_string(a); }

private:
    unsigned p_;
};

}  // namespace skewalg
