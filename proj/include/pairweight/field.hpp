// Copyright 2026 The pairweight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAIRWEIGHT_FIELD_HPP
#define PAIRWEIGHT_FIELD_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairweight/numeric.hpp"

namespace pairweight {

/// An element of F_{p^d} in discrete-log form: ZERO, or alpha^k with 0 <= k < p^d - 1.
class FieldElement {
  public:
    static constexpr std::uint32_t zero_raw = std::numeric_limits<std::uint32_t>::max();

    constexpr FieldElement() = default;

    static constexpr FieldElement zero() { return FieldElement(); }
    /// alpha^k; k must already be reduced modulo the group order.
    static constexpr FieldElement from_exponent(std::uint32_t k) { return FieldElement(k); }

    constexpr bool is_zero() const { return raw_ == zero_raw; }
    /// Exponent k of alpha^k. Precondition: !is_zero().
    constexpr std::uint32_t exponent() const { return raw_; }
    constexpr std::uint32_t raw() const { return raw_; }

    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;

  private:
    constexpr explicit FieldElement(std::uint32_t raw) : raw_(raw) {}
    std::uint32_t raw_ = zero_raw;
};

/// Trace values Tr_{p^sub}^{p^d}(alpha^k), tabulated by exponent.
struct TraceTable {
    std::uint32_t sub_degree = 0;
    std::vector<FieldElement> by_exponent;

    FieldElement operator()(FieldElement x) const {
        return x.is_zero() ? FieldElement::zero() : by_exponent[x.exponent()];
    }
};

/// The finite field F_r, r = p^d, built on the lexicographically smallest monic
/// primitive polynomial of degree d over F_p. Immutable once constructed.
class FieldCtx {
  public:
    static constexpr std::uint64_t default_table_cap = std::uint64_t{1} << 22;

    FieldCtx(std::uint32_t p, std::uint32_t d, std::uint64_t table_cap = default_table_cap)
        : p_(p), d_(d) {
        if (!numeric::is_prime(p)) throw ParameterError("p must be prime (got " + std::to_string(p) + ")");
        if (d == 0) throw ParameterError("extension degree d must be >= 1");
        std::uint64_t r = 1;
        for (std::uint32_t i = 0; i < d; ++i) {
            r *= p;
            if (r > table_cap)
                throw ParameterError("table cap exceeded: " + std::to_string(p) + "^" + std::to_string(d) +
                                     " > " + std::to_string(table_cap));
        }
        r_ = static_cast<std::uint32_t>(r);
        order_ = r_ - 1;
        modulus_ = find_primitive_modulus();
        build_tables();
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return d_; }
    std::uint32_t size() const { return r_; }
    /// Order of the multiplicative group, r - 1.
    std::uint32_t order() const { return order_; }
    /// Monic modulus coefficients c_0 .. c_d (c_d == 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement::zero(); }
    FieldElement one() const { return FieldElement::from_exponent(0); }
    FieldElement alpha() const { return alpha_pow(1); }
    FieldElement alpha_pow(std::int64_t k) const {
        return FieldElement::from_exponent(static_cast<std::uint32_t>(numeric::floor_mod(k, order_)));
    }

    /// Polynomial-basis index sum_i c_i p^i of x.
    std::uint32_t to_packed(FieldElement x) const { return x.is_zero() ? 0 : antilog_[x.exponent()]; }
    FieldElement from_packed(std::uint32_t v) const {
        if (v >= r_) throw ParameterError("packed value out of range");
        return v == 0 ? FieldElement::zero() : FieldElement::from_exponent(log_[v]);
    }
    std::vector<std::uint32_t> to_coefficients(FieldElement x) const {
        std::vector<std::uint32_t> c(d_);
        std::uint32_t v = to_packed(x);
        for (auto& ci : c) {
            ci = v % p_;
            v /= p_;
        }
        return c;
    }
    FieldElement from_coefficients(std::span<const std::uint32_t> c) const {
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i] % p_;
        return from_packed(static_cast<std::uint32_t>(v));
    }

    /// Exponent of 1 + alpha^k, or FieldElement::zero_raw when 1 + alpha^k = 0.
    std::uint32_t zech(std::uint32_t k) const { return zech_[k]; }
    std::span<const std::uint32_t> zech_table() const { return zech_; }

    FieldElement add(FieldElement x, FieldElement y) const {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        std::uint32_t delta = y.exponent() >= x.exponent() ? y.exponent() - x.exponent()
                                                           : y.exponent() + order_ - x.exponent();
        std::uint32_t z = zech_[delta];
        if (z == FieldElement::zero_raw) return FieldElement::zero();
        return reduce(std::uint64_t{x.exponent()} + z);
    }
    FieldElement neg(FieldElement x) const {
        if (x.is_zero() || p_ == 2) return x;
        return reduce(std::uint64_t{x.exponent()} + order_ / 2);
    }
    FieldElement sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }
    FieldElement mul(FieldElement x, FieldElement y) const {
        if (x.is_zero() || y.is_zero()) return FieldElement::zero();
        return reduce(std::uint64_t{x.exponent()} + y.exponent());
    }
    FieldElement inv(FieldElement x) const {
        if (x.is_zero()) throw std::domain_error("inverse of zero");
        return FieldElement::from_exponent(x.exponent() == 0 ? 0 : order_ - x.exponent());
    }
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
    FieldElement pow(FieldElement x, std::int64_t n) const {
        if (x.is_zero()) {
            if (n < 0) throw std::domain_error("negative power of zero");
            return n == 0 ? one() : FieldElement::zero();
        }
        __int128 e = static_cast<__int128>(x.exponent()) * numeric::floor_mod(n, order_);
        return FieldElement::from_exponent(static_cast<std::uint32_t>(e % order_));
    }

    bool divides_degree(std::uint32_t sub_d) const { return sub_d != 0 && d_ % sub_d == 0; }

    /// Tr from F_r down to the subfield of size p^sub_d.
    FieldElement trace(FieldElement x, std::uint32_t sub_d) const {
        require_subdegree(sub_d);
        if (x.is_zero()) return x;
        const std::uint64_t frob = frobenius_multiplier(sub_d);
        std::uint64_t k = x.exponent();
        FieldElement acc = FieldElement::zero();
        for (std::uint32_t j = 0; j < d_ / sub_d; ++j) {
            acc = add(acc, FieldElement::from_exponent(static_cast<std::uint32_t>(k)));
            k = k * frob % order_;
        }
        return acc;
    }

    TraceTable trace_table(std::uint32_t sub_d) const {
        require_subdegree(sub_d);
        TraceTable t{sub_d, std::vector<FieldElement>(order_)};
        for (std::uint32_t k = 0; k < order_; ++k) t.by_exponent[k] = trace(FieldElement::from_exponent(k), sub_d);
        return t;
    }

    bool in_subfield(FieldElement x, std::uint32_t sub_d) const {
        require_subdegree(sub_d);
        if (x.is_zero()) return true;
        std::uint32_t step = order_ / (static_cast<std::uint32_t>(numeric::checked_pow(p_, sub_d)) - 1);
        return x.exponent() % step == 0;
    }

    /// Integer value in [0, p) of an element of the prime subfield.
    std::uint32_t prime_value(FieldElement x) const {
        std::uint32_t v = to_packed(x);
        if (v >= p_) throw std::domain_error("element is not in the prime subfield");
        return v;
    }

  private:
    FieldElement reduce(std::uint64_t e) const {
        return FieldElement::from_exponent(static_cast<std::uint32_t>(e % order_));
    }

    void require_subdegree(std::uint32_t sub_d) const {
        if (!divides_degree(sub_d))
            throw ParameterError("subfield degree " + std::to_string(sub_d) + " does not divide " +
                                 std::to_string(d_));
    }

    // p^sub_d reduced modulo r - 1 (alpha^(k * p^sub_d) is the Frobenius image).
    std::uint64_t frobenius_multiplier(std::uint32_t sub_d) const {
        if (order_ == 1) return 0;
        std::uint64_t m = 1;
        for (std::uint32_t i = 0; i < sub_d; ++i) m = m * p_ % order_;
        return m;
    }

    using Poly = std::vector<std::uint64_t>;  // length d_, residues modulo the candidate

    Poly mulmod(const Poly& a, const Poly& b, const std::vector<std::uint32_t>& f) const {
        std::vector<std::uint64_t> prod(2 * d_ - 1, 0);
        for (std::uint32_t i = 0; i < d_; ++i) {
            if (a[i] == 0) continue;
            for (std::uint32_t j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        }
        for (std::size_t k = prod.size(); k-- > d_;) {
            std::uint64_t t = prod[k];
            if (t == 0) continue;
            prod[k] = 0;
            for (std::uint32_t i = 0; i < d_; ++i)
                prod[k - d_ + i] = (prod[k - d_ + i] + (p_ - t) * f[i]) % p_;
        }
        prod.resize(d_);
        return prod;
    }

    Poly x_power(std::uint64_t e, const std::vector<std::uint32_t>& f) const {
        Poly result(d_, 0), base(d_, 0);
        result[0] = 1;
        if (d_ == 1)
            base[0] = (p_ - f[0]) % p_;
        else
            base[1] = 1;
        while (e > 0) {
            if (e & 1) result = mulmod(result, base, f);
            base = mulmod(base, base, f);
            e >>= 1;
        }
        return result;
    }

    bool is_one(const Poly& a) const {
        if (a[0] != 1) return false;
        for (std::uint32_t i = 1; i < d_; ++i)
            if (a[i] != 0) return false;
        return true;
    }

    // x has order exactly r - 1 modulo f; this also forces f irreducible.
    bool is_primitive(const std::vector<std::uint32_t>& f) const {
        if (f[0] == 0) return false;
        if (!is_one(x_power(order_, f))) return false;
        for (std::uint64_t ell : numeric::prime_factors(order_))
            if (is_one(x_power(order_ / ell, f))) return false;
        return true;
    }

    std::vector<std::uint32_t> find_primitive_modulus() const {
        std::vector<std::uint32_t> f(d_ + 1, 0);
        f[d_] = 1;
        if (order_ == 1) {  // F_2: x + 1
            f[0] = 1;
            return f;
        }
        // c_0 is the most significant digit of the enumeration order.
        for (std::uint64_t idx = 0; idx < r_; ++idx) {
            std::uint64_t v = idx;
            for (std::uint32_t i = d_; i-- > 0;) {
                f[i] = static_cast<std::uint32_t>(v % p_);
                v /= p_;
            }
            if (is_primitive(f)) return f;
        }
        throw std::logic_error("no primitive polynomial found for p=" + std::to_string(p_) +
                               " d=" + std::to_string(d_));
    }

    void build_tables() {
        antilog_.assign(order_, 0);
        log_.assign(r_, FieldElement::zero_raw);
        std::vector<std::uint32_t> state(d_, 0);
        state[0] = 1;
        std::vector<std::uint32_t> pw(d_);
        for (std::uint32_t i = 0, acc = 1; i < d_; ++i, acc *= p_) pw[i] = acc;
        for (std::uint32_t k = 0; k < order_; ++k) {
            std::uint32_t packed = 0;
            for (std::uint32_t i = 0; i < d_; ++i) packed += state[i] * pw[i];
            if (log_[packed] != FieldElement::zero_raw)
                throw std::logic_error("modulus is not primitive: alpha^" + std::to_string(k) + " repeats");
            antilog_[k] = packed;
            log_[packed] = k;
            std::uint32_t top = state[d_ - 1];
            for (std::uint32_t i = d_ - 1; i > 0; --i) state[i] = state[i - 1];
            state[0] = 0;
            if (top != 0)
                for (std::uint32_t i = 0; i < d_; ++i)
                    state[i] = static_cast<std::uint32_t>((state[i] + std::uint64_t{p_ - top} * modulus_[i]) % p_);
        }
        zech_.assign(order_, FieldElement::zero_raw);
        for (std::uint32_t k = 0; k < order_; ++k) {
            std::uint32_t v = antilog_[k];
            std::uint32_t c0 = v % p_;
            std::uint32_t w = v - c0 + (c0 + 1) % p_;
            zech_[k] = w == 0 ? FieldElement::zero_raw : log_[w];
        }
    }

    std::uint32_t p_;
    std::uint32_t d_;
    std::uint32_t r_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

}  // namespace pairweight

#endif  // PAIRWEIGHT_FIELD_HPP
