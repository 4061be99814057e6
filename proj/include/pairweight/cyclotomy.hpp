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

#ifndef PAIRWEIGHT_CYCLOTOMY_HPP
#define PAIRWEIGHT_CYCLOTOMY_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pairweight/field.hpp"

// Cyclotomic classes C_i^(N,r) = alpha^i <alpha^N>, their (generalized)
// cyclotomic numbers and Gaussian periods.

namespace pairweight {

/// Result of an identity checker. not_applicable means its hypotheses fail.
enum class CheckOutcome { pass, fail, not_applicable };

inline const char* to_string(CheckOutcome c) {
    switch (c) {
        case CheckOutcome::pass: return "PASS";
        case CheckOutcome::fail: return "FAIL";
        case CheckOutcome::not_applicable: return "NOT_APPLICABLE";
    }
    return "?";
}

using ComplexValue = std::complex<double>;

namespace cyclotomy {

inline void require_order(const FieldCtx& ctx, std::uint64_t n) {
    if (n == 0 || ctx.order() % n != 0)
        throw ParameterError("class order " + std::to_string(n) + " does not divide r-1 = " +
                             std::to_string(ctx.order()));
}

inline void require_index(std::uint64_t n, std::uint64_t i) {
    if (i >= n) throw ParameterError("class index " + std::to_string(i) + " out of range [0, " + std::to_string(n) + ")");
}

inline std::uint32_t class_of(const FieldCtx& ctx, std::uint32_t n, FieldElement x) {
    require_order(ctx, n);
    if (x.is_zero()) throw ParameterError("zero has no cyclotomic class");
    return x.exponent() % n;
}

/// (i,j)^(l,f,r) = |(1 + C_i^(l,r)) ∩ C_j^(f,r)|, counted over C_i^(l,r).
inline std::uint64_t generalized_cyclotomic_number(const FieldCtx& ctx, std::uint32_t l, std::uint32_t f,
                                                   std::uint32_t i, std::uint32_t j) {
    require_order(ctx, l);
    require_order(ctx, f);
    require_index(l, i);
    require_index(f, j);
    std::uint64_t count = 0;
    for (std::uint32_t k = i; k < ctx.order(); k += l) {
        std::uint32_t z = ctx.zech(k);
        if (z != FieldElement::zero_raw && z % f == j) ++count;
    }
    return count;
}

inline std::uint64_t cyclotomic_number(const FieldCtx& ctx, std::uint32_t n, std::uint32_t i, std::uint32_t j) {
    return generalized_cyclotomic_number(ctx, n, n, i, j);
}

/// Full l x f table of generalized cyclotomic numbers in one pass over F_r^*.
inline std::vector<std::vector<std::uint64_t>> generalized_cyclotomic_matrix(const FieldCtx& ctx, std::uint32_t l,
                                                                             std::uint32_t f) {
    require_order(ctx, l);
    require_order(ctx, f);
    std::vector<std::vector<std::uint64_t>> m(l, std::vector<std::uint64_t>(f, 0));
    for (std::uint32_t k = 0; k < ctx.order(); ++k) {
        std::uint32_t z = ctx.zech(k);
        if (z != FieldElement::zero_raw) ++m[k % l][z % f];
    }
    return m;
}

/// eta_i^(N,r) evaluated from the histogram of absolute traces over C_i.
inline ComplexValue gaussian_period_numeric(const FieldCtx& ctx, std::uint32_t n, std::uint32_t i) {
    require_order(ctx, n);
    require_index(n, i);
    const std::uint32_t p = ctx.characteristic();
    std::vector<std::uint64_t> hist(p, 0);
    for (std::uint32_t k = i; k < ctx.order(); k += n)
        ++hist[ctx.prime_value(ctx.trace(FieldElement::from_exponent(k), 1))];
    ComplexValue sum = 0.0;
    for (std::uint32_t t = 0; t < p; ++t)
        sum += static_cast<double>(hist[t]) * std::polar(1.0, 2.0 * std::numbers::pi * t / p);
    return sum;
}

/// Closed-form quadratic Gaussian periods (eta_0, eta_1) of F_{p^(s m)}, p odd.
inline std::pair<ComplexValue, ComplexValue> gaussian_period_closed_form_n2(std::uint32_t p, std::uint32_t s,
                                                                            std::uint32_t m) {
    if (p == 2 || !numeric::is_prime(p)) throw ParameterError("quadratic Gaussian periods need an odd prime p");
    if (s == 0 || m == 0) throw ParameterError("s and m must be positive");
    const std::uint64_t sm = std::uint64_t{s} * m;
    // q^(m/2) = p^(sm/2)
    const double root = std::pow(static_cast<double>(p), static_cast<double>(sm) / 2.0);
    ComplexValue eta0;
    if (p % 4 == 1) {
        eta0 = sm % 2 == 0 ? ComplexValue((-1.0 - root) / 2.0, 0.0) : ComplexValue((root - 1.0) / 2.0, 0.0);
    } else {
        switch (sm % 4) {
            case 0: eta0 = {(-1.0 - root) / 2.0, 0.0}; break;
            case 2: eta0 = {(root - 1.0) / 2.0, 0.0}; break;
            case 3: eta0 = {-0.5, -root / 2.0}; break;
            default: eta0 = {-0.5, root / 2.0}; break;
        }
    }
    return {eta0, -1.0 - eta0};
}

/// Multiset {x y : y in F_q^*, x in C_i^(e,r)} equals ((q-1)/e) gcd(m,e) copies of
/// C_i^(gcd(m,e),r). Requires e | q-1, q = p^q_sub_degree, r = q^m.
inline CheckOutcome check_multiset_scaling(const FieldCtx& ctx, std::uint32_t q_sub_degree, std::uint32_t e,
                                           std::uint32_t i) {
    if (!ctx.divides_degree(q_sub_degree))
        throw ParameterError("subfield degree must divide the field degree");
    const std::uint32_t q = static_cast<std::uint32_t>(numeric::checked_pow(ctx.characteristic(), q_sub_degree));
    const std::uint32_t m = ctx.degree() / q_sub_degree;
    if (e == 0 || (q - 1) % e != 0) throw ParameterError("e must divide q-1");
    require_index(e, i);
    const std::uint32_t n = ctx.order();
    const std::uint32_t sub_step = n / (q - 1);  // F_q^* = <alpha^sub_step>
    std::vector<std::uint32_t> mult(n, 0);
    for (std::uint32_t k = i; k < n; k += e)
        for (std::uint32_t u = 0; u < q - 1; ++u) ++mult[(k + std::uint64_t{u} * sub_step) % n];
    const std::uint32_t g = std::gcd(m, e);
    const std::uint32_t expected = (q - 1) / e * g;
    for (std::uint32_t k = 0; k < n; ++k)
        if (mult[k] != (k % g == i % g ? expected : 0)) return CheckOutcome::fail;
    return CheckOutcome::pass;
}

/// F_q^* ⊂ C_0^(N,r) whenever q ≡ 1 (mod N) and m ≡ 0 (mod N).
inline CheckOutcome check_subfield_containment(const FieldCtx& ctx, std::uint32_t q_sub_degree, std::uint32_t n) {
    if (!ctx.divides_degree(q_sub_degree))
        throw ParameterError("subfield degree must divide the field degree");
    if (n == 0) throw ParameterError("N must be positive");
    const std::uint32_t q = static_cast<std::uint32_t>(numeric::checked_pow(ctx.characteristic(), q_sub_degree));
    const std::uint32_t m = ctx.degree() / q_sub_degree;
    if (q % n != 1 % n || m % n != 0) return CheckOutcome::not_applicable;
    const std::uint32_t sub_step = ctx.order() / (q - 1);
    for (std::uint32_t u = 0; u < q - 1; ++u)
        if ((std::uint64_t{u} * sub_step) % n != 0) return CheckOutcome::fail;
    return CheckOutcome::pass;
}

}  // namespace cyclotomy
}  // namespace pairweight

#endif  // PAIRWEIGHT_CYCLOTOMY_HPP
