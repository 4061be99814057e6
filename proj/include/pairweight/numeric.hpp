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

#ifndef PAIRWEIGHT_NUMERIC_HPP
#define PAIRWEIGHT_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairweight {

/// Raised when caller-supplied parameters violate a documented precondition.
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive enumeration would exceed the configured work budget.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("enumeration budget exceeded: requires " + std::to_string(required) +
                             " symbol operations, budget is " + std::to_string(budget)),
          required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

  private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

namespace numeric {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// All positive divisors in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/// base^exp, throwing ParameterError instead of wrapping past `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                                 std::uint64_t limit = UINT64_MAX) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > limit / base)
            throw ParameterError(std::to_string(base) + "^" + std::to_string(exp) +
                                 " exceeds " + std::to_string(limit));
        out *= base;
    }
    return out;
}

/// Exact quotient; throws std::logic_error when `den` does not divide `num`.
inline std::int64_t exact_div(std::int64_t num, std::int64_t den) {
    if (den == 0 || num % den != 0)
        throw std::logic_error("non-exact division " + std::to_string(num) + " / " +
                               std::to_string(den));
    return num / den;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Exact rational number with normalized sign and lowest terms.
class Fraction {
  public:
    constexpr Fraction(std::int64_t num = 0) : num_(num), den_(1) {}
    Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::domain_error("fraction with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Fraction operator+(Fraction a, Fraction b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Fraction operator-(Fraction a, Fraction b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Fraction operator*(Fraction a, Fraction b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Fraction operator/(Fraction a, Fraction b) {
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
        os << f.num_;
        if (f.den_ != 1) os << '/' << f.den_;
        return os;
    }

  private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// q^k for possibly negative k, as an exact fraction.
inline Fraction fraction_pow(std::int64_t q, std::int64_t k) {
    std::int64_t mag = static_cast<std::int64_t>(checked_pow(q, k < 0 ? -k : k, INT32_MAX));
    return k < 0 ? Fraction(1, mag) : Fraction(mag);
}

}  // namespace numeric
}  // namespace pairweight

#endif  // PAIRWEIGHT_NUMERIC_HPP
