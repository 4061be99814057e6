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

#ifndef PAIRWEIGHT_PAIRCODE_HPP
#define PAIRWEIGHT_PAIRCODE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "pairweight/distribution.hpp"
#include "pairweight/field.hpp"

namespace pairweight {

/// Which closed-form family of results covers a parameter set.
enum class Regime {
    coprime,       // m > 2, gcd(m, e(q-1)/h) = 1
    gcd_two_odd,   // e = 2, gcd(m, 2(q-1)/h) = 2, (q-1)/h odd
    gcd_two_even,  // e = 2, gcd(m, 2(q-1)/h) = 2, (q-1)/h even
    other,
};

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::coprime: return "THM1";
        case Regime::gcd_two_odd: return "THM2/4";
        case Regime::gcd_two_even: return "THM3/5";
        case Regime::other: return "OTHER";
    }
    return "?";
}

/// Validated parameters of the cyclic code C_(q,m,h,e) over F_q, q = p^s, r = q^m,
/// together with the ambient field F_r and its trace table down to F_q.
class CodeParams {
  public:
    CodeParams(std::uint32_t p, std::uint32_t s, std::uint32_t m, std::uint32_t h, std::uint32_t e,
               std::uint64_t table_cap = FieldCtx::default_table_cap) {
        if (!numeric::is_prime(p)) throw ParameterError("p must be prime (got " + std::to_string(p) + ")");
        if (s == 0) throw ParameterError("s must be >= 1");
        if (m == 0) throw ParameterError("m must be >= 1");
        if (e <= 1) throw ParameterError("e must satisfy e > 1");
        if (h == 0 || h % e != 0) throw ParameterError("e must divide h");
        const std::uint64_t q = numeric::checked_pow(p, s, table_cap);
        if ((q - 1) % h != 0) throw ParameterError("h must divide q-1");
        auto st = std::make_shared<State>(FieldCtx(p, s * m, table_cap));
        st->p = p;
        st->s = s;
        st->m = m;
        st->h = h;
        st->e = e;
        st->q = static_cast<std::uint32_t>(q);
        st->r = st->field.size();
        st->n = static_cast<std::uint32_t>(std::uint64_t{h} * (st->r - 1) / (q - 1));
        st->g = st->field.alpha_pow((q - 1) / h);
        st->beta = st->field.alpha_pow((st->r - 1) / e);
        st->trace = st->field.trace_table(s);
        state_ = std::move(st);
    }

    std::uint32_t p() const { return state_->p; }
    std::uint32_t s() const { return state_->s; }
    std::uint32_t m() const { return state_->m; }
    std::uint32_t h() const { return state_->h; }
    std::uint32_t e() const { return state_->e; }
    std::uint32_t q() const { return state_->q; }
    std::uint32_t r() const { return state_->r; }
    /// Code length h(r-1)/(q-1), the multiplicative order of g.
    std::uint32_t n() const { return state_->n; }

    const FieldCtx& field() const { return state_->field; }
    /// Tr_q^r tabulated by exponent.
    const TraceTable& trace() const { return state_->trace; }
    FieldElement g() const { return state_->g; }
    FieldElement beta() const { return state_->beta; }
    FieldElement beta_g() const { return field().mul(beta(), g()); }

    Regime regime() const {
        const std::uint32_t qh = (q() - 1) / h();
        if (m() > 2 && std::gcd(m(), e() * qh) == 1) return Regime::coprime;
        if (e() == 2 && std::gcd(m(), 2 * qh) == 2) return qh % 2 == 1 ? Regime::gcd_two_odd : Regime::gcd_two_even;
        return Regime::other;
    }

    std::string label() const {
        return "C(q=" + std::to_string(q()) + ",m=" + std::to_string(m()) + ",h=" + std::to_string(h()) +
               ",e=" + std::to_string(e()) + ")";
    }

  private:
    struct State {
        explicit State(FieldCtx f) : field(std::move(f)) {}
        FieldCtx field;
        TraceTable trace;
        std::uint32_t p = 0, s = 0, m = 0, h = 0, e = 0, q = 0, r = 0, n = 0;
        FieldElement g, beta;
    };
    std::shared_ptr<const State> state_;
};

/// One codeword: symbols are elements of F_r lying in the subfield F_q.
struct Codeword {
    std::vector<FieldElement> symbols;
};

/// c(a,b)_i = Tr_q^r(a g^i + b (beta g)^i) for i < length (length defaults to n).
inline Codeword codeword(const CodeParams& params, FieldElement a, FieldElement b, std::uint32_t length = 0) {
    const FieldCtx& f = params.field();
    const std::uint32_t len = length == 0 ? params.n() : length;
    Codeword c;
    c.symbols.reserve(len);
    FieldElement gi = f.one(), bgi = f.one();
    const FieldElement step_b = params.beta_g();
    for (std::uint32_t i = 0; i < len; ++i) {
        c.symbols.push_back(params.trace()(f.add(f.mul(a, gi), f.mul(b, bgi))));
        gi = f.mul(gi, params.g());
        bgi = f.mul(bgi, step_b);
    }
    return c;
}

inline std::uint32_t hamming_weight(std::span<const FieldElement> c) {
    return static_cast<std::uint32_t>(std::count_if(c.begin(), c.end(), [](FieldElement x) { return !x.is_zero(); }));
}

/// Number of cyclic positions i with (c_i, c_{i+1}) != (0, 0).
inline std::uint32_t symbol_pair_weight(std::span<const FieldElement> c) {
    const std::size_t n = c.size();
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!c[i].is_zero() || !c[(i + 1) % n].is_zero()) ++w;
    return w;
}

inline std::uint32_t hamming_weight(const Codeword& c) { return hamming_weight(c.symbols); }
inline std::uint32_t symbol_pair_weight(const Codeword& c) { return symbol_pair_weight(c.symbols); }

/// T(a,b): cyclic positions where two consecutive trace values both vanish.
inline std::uint32_t t_count(const CodeParams& params, FieldElement a, FieldElement b) {
    const std::uint32_t n = params.n();
    const FieldCtx& f = params.field();
    const FieldElement bg = params.beta_g();
    auto symbol = [&](std::uint32_t i) {
        return params.trace()(f.add(f.mul(a, f.pow(params.g(), i)), f.mul(b, f.pow(bg, i))));
    };
    std::uint32_t t = 0;
    FieldElement first = symbol(0), prev = first;
    for (std::uint32_t i = 1; i <= n; ++i) {
        FieldElement cur = i == n ? first : symbol(i);
        if (prev.is_zero() && cur.is_zero()) ++t;
        prev = cur;
    }
    return t;
}

struct EnumerationOptions {
    unsigned workers = 0;  // 0 = hardware concurrency
    std::uint64_t budget = std::uint64_t{1} << 32;
};

/// All three histograms of an exhaustive pass over (a,b) in F_r x F_r.
struct CodeStatistics {
    std::uint32_t length = 0;
    WeightDistribution pair;
    WeightDistribution hamming;
    WeightDistribution t_values;
    /// Nonzero codewords with 0 < d_H < length violating d_H + 1 <= w_p <= 2 d_H.
    std::uint64_t sandwich_violations = 0;
    /// Number of (a,b) mapping to the zero word.
    std::uint64_t kernel_size = 0;
};

namespace detail {

inline unsigned resolve_workers(unsigned w) {
    if (w != 0) return w;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

}  // namespace detail

/// Table-driven evaluation of which of the first `length` symbols of c(a,b) vanish.
/// Each symbol costs two exponent increments, one Zech lookup and one trace lookup.
class ZeroPatternKernel {
  public:
    ZeroPatternKernel(const CodeParams& params, std::uint32_t length)
        : length_(length), order_(params.field().order()) {
        const FieldCtx& f = params.field();
        g_exp_ = params.g().exponent();
        bg_exp_ = params.beta_g().exponent();
        gap_ = (bg_exp_ + order_ - g_exp_) % order_;
        // zero_flag_[k] for k < 2 order covers u + zech with u, zech < order; a
        // vanished sum maps zech to 2 order, so u + vanished lands in the all-ones tail.
        vanished_ = 2 * order_;
        zero_flag_.assign(3 * order_, 1);
        for (std::uint32_t k = 0; k < 2 * order_; ++k)
            zero_flag_[k] = params.trace().by_exponent[k % order_].is_zero();
        zech_.resize(order_);
        for (std::uint32_t k = 0; k < order_; ++k)
            zech_[k] = f.zech(k) == FieldElement::zero_raw ? vanished_ : f.zech(k);
    }

    std::uint32_t length() const { return length_; }

    /// z[i] = 1 iff Tr(a g^i + b (beta g)^i) = 0.
    void fill(FieldElement a, FieldElement b, std::span<std::uint8_t> z) const {
        if (a.is_zero() && b.is_zero()) {
            std::fill(z.begin(), z.begin() + length_, 1);
        } else if (a.is_zero() || b.is_zero()) {
            const std::uint32_t step = a.is_zero() ? bg_exp_ : g_exp_;
            std::uint32_t u = a.is_zero() ? b.exponent() : a.exponent();
            for (std::uint32_t i = 0; i < length_; ++i) {
                z[i] = zero_flag_[u];
                u += step;
                if (u >= order_) u -= order_;
            }
        } else {
            std::uint32_t u = a.exponent();
            std::uint32_t delta = (b.exponent() + order_ - u) % order_;
            for (std::uint32_t i = 0; i < length_; ++i) {
                z[i] = zero_flag_[u + zech_[delta]];
                u += g_exp_;
                if (u >= order_) u -= order_;
                delta += gap_;
                if (delta >= order_) delta -= order_;
            }
        }
    }

    /// Cyclic count of i with z[i] = z[i+1] = 1.
    std::uint32_t adjacent_zero_pairs(std::span<const std::uint8_t> z) const {
        std::uint32_t both = 0;
        for (std::uint32_t i = 0; i + 1 < length_; ++i) both += z[i] & z[i + 1];
        return both + (z[length_ - 1] & z[0]);
    }

  private:
    std::uint32_t length_;
    std::uint32_t order_;
    std::uint32_t g_exp_ = 0, bg_exp_ = 0, gap_ = 0, vanished_ = 0;
    std::vector<std::uint8_t> zero_flag_;
    std::vector<std::uint32_t> zech_;
};

/// Element with enumeration index i: 0 -> ZERO, i -> alpha^(i-1).
inline FieldElement element_at(std::uint32_t i) {
    return i == 0 ? FieldElement::zero() : FieldElement::from_exponent(i - 1);
}

namespace detail {

// Exhaustive pass over (a,b). Worker k handles a-indices congruent to k modulo the
// worker count; per-worker histograms are merged by integer addition.
inline CodeStatistics enumerate_prefix(const CodeParams& params, std::uint32_t length,
                                       const EnumerationOptions& opt) {
    const std::uint64_t r = params.r();
    const std::uint64_t work = r * r * length;
    if (work > opt.budget) throw BudgetError(work, opt.budget);
    const ZeroPatternKernel kernel(params, length);

    struct Local {
        std::vector<std::uint64_t> pair, hamming, t;
        std::uint64_t violations = 0;
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(resolve_workers(opt.workers), params.r()));
    std::vector<Local> locals(workers);

    auto run = [&](unsigned worker) {
        Local& loc = locals[worker];
        loc.pair.assign(length + 1, 0);
        loc.hamming.assign(length + 1, 0);
        loc.t.assign(length + 1, 0);
        std::vector<std::uint8_t> z(length);
        for (std::uint32_t ia = worker; ia < r; ia += workers) {
            for (std::uint32_t ib = 0; ib < r; ++ib) {
                kernel.fill(element_at(ia), element_at(ib), z);
                std::uint32_t zeros = 0;
                for (std::uint8_t v : z) zeros += v;
                const std::uint32_t both = kernel.adjacent_zero_pairs(z);
                const std::uint32_t dh = length - zeros;
                const std::uint32_t wp = length - both;
                ++loc.pair[wp];
                ++loc.hamming[dh];
                ++loc.t[both];
                if (dh > 0 && dh < length && (wp < dh + 1 || wp > 2 * dh)) ++loc.violations;
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    CodeStatistics out;
    out.length = length;
    for (const Local& loc : locals) {
        for (std::uint32_t w = 0; w <= length; ++w) {
            out.pair.add(w, loc.pair[w]);
            out.hamming.add(w, loc.hamming[w]);
            out.t_values.add(w, loc.t[w]);
        }
        out.sandwich_violations += loc.violations;
    }
    out.kernel_size = out.hamming.count(0);
    return out;
}

}  // namespace detail

inline std::uint64_t required_work(const CodeParams& params) {
    return std::uint64_t{params.r()} * params.r() * params.n();
}

inline CodeStatistics enumerate_code(const CodeParams& params, const EnumerationOptions& opt = {}) {
    return detail::enumerate_prefix(params, params.n(), opt);
}

inline WeightDistribution pair_weight_distribution(const CodeParams& params, const EnumerationOptions& opt = {}) {
    return enumerate_code(params, opt).pair;
}
inline WeightDistribution hamming_weight_distribution(const CodeParams& params, const EnumerationOptions& opt = {}) {
    return enumerate_code(params, opt).hamming;
}
inline WeightDistribution t_value_distribution(const CodeParams& params, const EnumerationOptions& opt = {}) {
    return enumerate_code(params, opt).t_values;
}

/// log_q of the number of distinct codewords, from the size of the kernel of (a,b) -> c(a,b).
inline std::uint32_t dimension_from_kernel(const CodeParams& params, std::uint64_t kernel_size) {
    // kernel is an F_q-subspace of F_r^2, so its size is a power of q
    std::uint32_t k = 0;
    std::uint64_t v = kernel_size;
    while (v > 1) {
        if (v % params.q() != 0) throw std::logic_error("kernel size is not a power of q");
        v /= params.q();
        ++k;
    }
    return 2 * params.m() - k;
}

inline std::uint32_t dimension(const CodeParams& params, const EnumerationOptions& opt = {}) {
    return dimension_from_kernel(params, enumerate_code(params, opt).kernel_size);
}

/// Singleton-type bound equality: q^dim = q^(n - d_p + 2).
inline bool is_mds_symbol_pair(std::int64_t n, std::int64_t dim, std::int64_t d_p, std::uint32_t q) {
    if (q < 2) throw ParameterError("alphabet size must be >= 2");
    if (d_p < 2 || d_p > n)
        throw ParameterError("pair distance " + std::to_string(d_p) + " outside [2, " + std::to_string(n) + "]");
    return dim == n - d_p + 2;
}

/// The code restricted to coordinates 0 .. n/2-1 (e = 2, q odd, n ≡ 0 mod 4).
class PuncturedCode {
  public:
    explicit PuncturedCode(CodeParams params) : params_(std::move(params)) {
        if (params_.e() != 2) throw ParameterError("puncturing requires e = 2");
        if (params_.q() % 2 == 0) throw ParameterError("puncturing requires q odd");
        if (params_.n() % 4 != 0) throw ParameterError("puncturing requires n ≡ 0 (mod 4)");
        validate_antipodal();
    }

    const CodeParams& parent() const { return params_; }
    std::uint32_t length() const { return params_.n() / 2; }

    Codeword codeword(FieldElement a, FieldElement b) const { return pairweight::codeword(params_, a, b, length()); }

    CodeStatistics enumerate(const EnumerationOptions& opt = {}) const {
        return detail::enumerate_prefix(params_, length(), opt);
    }

  private:
    // c_i = -c_{i + n/2} on a deterministic spread of (a, b).
    void validate_antipodal() const {
        const FieldCtx& f = params_.field();
        const std::uint32_t half = length();
        const std::uint32_t order = f.order();
        for (std::uint32_t t = 0; t < 8; ++t) {
            FieldElement a = t == 0 ? f.zero() : f.alpha_pow(std::int64_t{t} * 7919 % order);
            FieldElement b = t == 1 ? f.zero() : f.alpha_pow(std::int64_t{t} * 104729 % order);
            Codeword full = pairweight::codeword(params_, a, b);
            for (std::uint32_t i = 0; i < half; ++i)
                if (full.symbols[i] != f.neg(full.symbols[i + half]))
                    throw std::logic_error("antipodal identity failed for " + params_.label());
        }
    }

    CodeParams params_;
};

inline PuncturedCode puncture_half(const CodeParams& params) { return PuncturedCode(params); }

/// Largest number of pairs (i, y) in [0,e) x F_q^* sharing the value
/// beta^i (1 + beta g y) / (1 + g y). Precondition: m >= 2 so that 1 + g y != 0.
inline std::uint32_t ratio_max_multiplicity(const CodeParams& params) {
    if (params.m() < 2) throw ParameterError("ratio map needs m >= 2");
    const FieldCtx& f = params.field();
    const std::uint32_t sub_step = f.order() / (params.q() - 1);
    std::map<FieldElement, std::uint32_t> seen;
    std::uint32_t best = 0;
    for (std::uint32_t i = 0; i < params.e(); ++i) {
        FieldElement bi = f.pow(params.beta(), i);
        for (std::uint32_t u = 0; u < params.q() - 1; ++u) {
            FieldElement gy = f.mul(params.g(), f.alpha_pow(std::int64_t{u} * sub_step));
            FieldElement num = f.add(f.one(), f.mul(params.beta(), gy));
            FieldElement den = f.add(f.one(), gy);
            best = std::max(best, ++seen[f.mul(bi, f.div(num, den))]);
        }
    }
    return best;
}

}  // namespace pairweight

#endif  // PAIRWEIGHT_PAIRCODE_HPP
