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

// Command-line front end: field, cyclotomy, code and verify subcommands.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pairweight/pairweight.hpp"

namespace {

using namespace pairweight;

enum Exit : int { exit_ok = 0, exit_fail = 1, exit_params = 2, exit_budget = 3 };

struct Common {
    unsigned workers = 0;
    std::uint64_t seed = 0x5eed;
    std::uint64_t budget = std::uint64_t{1} << 32;
    std::string output;
    std::string format = "json";
};

struct CodeArgs {
    std::uint32_t p = 0, s = 1, m = 0, h = 0, e = 0;
    Json echo() const { return Json{{"p", p}, {"s", s}, {"m", m}, {"h", h}, {"e", e}}; }
};

std::uint64_t table_cap_from_env() {
    const char* raw = std::getenv("PAIRWEIGHT_TABLE_CAP");
    if (!raw || !*raw) return FieldCtx::default_table_cap;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(raw, &used);
        if (used == std::string(raw).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParameterError(std::string("PAIRWEIGHT_TABLE_CAP must be a positive integer (got '") + raw + "')");
}

class Emitter {
  public:
    explicit Emitter(const Common& c) : common_(c) {}

    void write(const std::string& body) const {
        if (common_.output.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream out(common_.output);
        if (!out) throw std::runtime_error("cannot open output file " + common_.output);
        out << body;
    }
    void envelope(render::Envelope env) const {
        env.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
                             .count();
        write(render::to_json(env).dump(2) + "\n");
    }

  private:
    const Common& common_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string modulus_text(const std::vector<std::uint32_t>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c[k] != 1 || k == 0) os << c[k];
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

Json complex_json(ComplexValue z) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
    return Json{{"real", z.real()}, {"imag", z.imag()}, {"text", os.str()}};
}

Json field_result(const FieldCtx& f) {
    Json rows = Json::array();
    const std::uint32_t shown = std::min<std::uint32_t>(f.order(), 8);
    for (std::uint32_t k = 0; k < shown; ++k) {
        const FieldElement x = f.alpha_pow(k);
        Json row{{"exponent", k}, {"coefficients", f.to_coefficients(x)}, {"packed", f.to_packed(x)}};
        const std::uint32_t z = f.zech(k);
        row["zech"] = z == FieldElement::zero_raw ? Json(nullptr) : Json(z);
        rows.push_back(row);
    }
    return Json{{"p", f.characteristic()},
                {"d", f.degree()},
                {"r", f.size()},
                {"modulus", f.modulus()},
                {"modulus_text", modulus_text(f.modulus())},
                {"powers", rows}};
}

Json distribution_result(const WeightDistribution& d) {
    return Json{{"distribution", to_json(d)}, {"enumerator", d.enumerator()}, {"support_size", d.support_size()},
                {"total", d.total()}};
}

std::string render_distribution(const std::string& format, const render::Envelope& env, const WeightDistribution& d) {
    if (format == "csv") return render::csv(d);
    if (format == "text") return env.result["code"].get<std::string>() + "\n" + render::text(d);
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbol-pair weights of two-nonzero cyclic codes over finite fields"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool with_format) {
        sub->set_help_flag("--help", "Print this help message and exit");
        sub->add_option("-o,--output", common.output, "Write output to this file instead of stdout");
        sub->add_option("--workers", common.workers, "Enumeration threads (0 = available parallelism)");
        sub->add_option("--seed", common.seed, "Seed for sampled spot checks");
        sub->add_option("--budget", common.budget, "Maximum enumeration work r^2 n");
        if (with_format)
            sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    };

    std::uint32_t fp = 0, fd = 0;
    auto* field_cmd = app.add_subcommand("field", "Construct F_{p^d} and print its primitive modulus");
    add_common(field_cmd, false);
    field_cmd->add_option("-p", fp, "Characteristic")->required();
    field_cmd->add_option("-d", fd, "Extension degree")->required();

    std::uint32_t cp = 0, cd = 0;
    std::vector<std::uint32_t> number_args, gnumber_args, period_args;
    auto* cyc = app.add_subcommand("cyclotomy", "Cyclotomic numbers and Gaussian periods of F_{p^d}");
    add_common(cyc, false);
    cyc->add_option("-p", cp, "Characteristic")->required();
    cyc->add_option("-d", cd, "Extension degree")->required();
    cyc->require_subcommand(1);
    cyc->fallthrough();
    auto* number = cyc->add_subcommand("number", "Cyclotomic number (i,j) of order N");
    number->add_option("args", number_args, "N i j")->expected(3)->required();
    auto* gnumber = cyc->add_subcommand("gnumber", "Generalized cyclotomic number (i,j)^(l,f,r)");
    gnumber->add_option("args", gnumber_args, "l f i j")->expected(4)->required();
    auto* period = cyc->add_subcommand("period", "Gaussian period eta_i of order N (numeric)");
    period->add_option("args", period_args, "N i")->expected(2)->required();
    auto* period_closed = cyc->add_subcommand("period-closed", "Quadratic Gaussian periods, closed form vs numeric");

    CodeArgs ca;
    auto add_code_params = [&](CLI::App* sub) {
        sub->add_option("-p", ca.p, "Characteristic")->required();
        sub->add_option("-s", ca.s, "Base field degree, q = p^s");
        sub->add_option("-m", ca.m, "Extension degree, r = q^m")->required();
        sub->add_option("-h", ca.h, "Index parameter with h | q-1")->required();
        sub->add_option("-e", ca.e, "Splitting parameter with e | h")->required();
    };
    auto* code = app.add_subcommand("code", "Enumerate C(q,m,h,e)");
    add_common(code, true);
    add_code_params(code);
    code->require_subcommand(1);
    code->fallthrough();
    code->add_subcommand("dist", "Symbol-pair weight distribution");
    code->add_subcommand("hdist", "Hamming weight distribution");
    code->add_subcommand("tdist", "Distribution of adjacent zero pairs T");
    code->add_subcommand("dim", "Dimension over F_q");
    code->add_subcommand("puncture-dist", "Pair weight distribution of the antipodal half puncture");

    std::optional<std::int64_t> corrupt;
    auto* verify = app.add_subcommand("verify", "Compare every applicable closed form against enumeration");
    add_common(verify, true);
    add_code_params(verify);
    verify->add_option("--corrupt-weight", corrupt, "Decrement one enumerated count (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_params;
    }

    const Emitter emit(common);
    render::Envelope env;
    if (field_cmd->parsed()) {
        env.command = "field";
        env.params = Json{{"p", fp}, {"d", fd}};
    } else if (cyc->parsed()) {
        env.command = "cyclotomy " + cyc->get_subcommands().front()->get_name();
        env.params = Json{{"p", cp}, {"d", cd}};
        if (number->parsed()) env.params["args"] = number_args;
        if (gnumber->parsed()) env.params["args"] = gnumber_args;
        if (period->parsed()) env.params["args"] = period_args;
    } else {
        env.command = code->parsed() ? "code " + code->get_subcommands().front()->get_name() : "verify";
        env.params = ca.echo();
    }
    const EnumerationOptions enum_opt{common.workers, common.budget};
    try {
        const std::uint64_t cap = table_cap_from_env();
        if (field_cmd->parsed()) {
            env.result = field_result(FieldCtx(fp, fd, cap));
        } else if (cyc->parsed()) {
            const FieldCtx f(cp, cd, cap);
            if (number->parsed()) {
                env.result = Json{{"value", cyclotomy::cyclotomic_number(f, number_args[0], number_args[1],
                                                                          number_args[2])}};
            } else if (gnumber->parsed()) {
                env.result = Json{{"value", cyclotomy::generalized_cyclotomic_number(
                                                f, gnumber_args[0], gnumber_args[1], gnumber_args[2], gnumber_args[3])}};
            } else if (period->parsed()) {
                env.result = complex_json(cyclotomy::gaussian_period_numeric(f, period_args[0], period_args[1]));
            } else if (period_closed->parsed()) {
                const auto [eta0, eta1] = cyclotomy::gaussian_period_closed_form_n2(cp, 1, cd);
                const ComplexValue num0 = cyclotomy::gaussian_period_numeric(f, 2, 0);
                const ComplexValue num1 = cyclotomy::gaussian_period_numeric(f, 2, 1);
                env.result = Json{{"closed_form", {complex_json(eta0), complex_json(eta1)}},
                                  {"numeric", {complex_json(num0), complex_json(num1)}},
                                  {"max_abs_error", std::max(std::abs(eta0 - num0), std::abs(eta1 - num1))}};
            }
        } else {
            const bool is_verify = verify->parsed();
            const CodeParams params(ca.p, ca.s, ca.m, ca.h, ca.e, cap);
            if (is_verify) {
                VerifyOptions vo;
                vo.enumeration = enum_opt;
                vo.seed = common.seed;
                vo.corrupt_weight = corrupt;
                const VerificationReport rep = verify_all(params, vo);
                for (const auto& c : rep.checks)
                    if (c.status == CheckOutcome::fail)
                        std::cerr << "FAIL " << c.name << ": " << (c.detail.empty() ? "mismatch" : c.detail) << '\n';
                for (const auto& f : rep.flags) std::cerr << "flag: " << f << '\n';
                env.result = render::to_json(rep);
                if (common.format == "csv")
                    emit.write(render::csv(rep));
                else if (common.format == "text")
                    emit.write(render::text(rep));
                else
                    emit.envelope(env);
                return rep.all_pass() ? exit_ok : exit_fail;
            }
            const std::string action = code->get_subcommands().front()->get_name();
            if (action == "puncture-dist") {
                const PuncturedCode pc = puncture_half(params);
                const CodeStatistics st = pc.enumerate(enum_opt);
                const std::uint32_t dim = dimension_from_kernel(params, st.kernel_size);
                const std::int64_t dp = st.pair.min_nonzero_weight().value_or(0);
                env.result = distribution_result(st.pair);
                env.result["code"] = "punctured " + params.label();
                env.result["length"] = pc.length();
                env.result["dimension"] = dim;
                env.result["min_pair_distance"] = dp;
                env.result["mds"] = dp >= 2 && is_mds_symbol_pair(pc.length(), dim, dp, params.q());
                if (common.format != "json") {
                    emit.write(render_distribution(common.format, env, st.pair));
                    return exit_ok;
                }
            } else {
                const CodeStatistics st = enumerate_code(params, enum_opt);
                const WeightDistribution& d =
                    action == "hdist" ? st.hamming : action == "tdist" ? st.t_values : st.pair;
                env.result = action == "dim" ? Json::object() : distribution_result(d);
                env.result["code"] = params.label();
                env.result["regime"] = to_string(params.regime());
                env.result["length"] = params.n();
                env.result["dimension"] = dimension_from_kernel(params, st.kernel_size);
                if (action == "dim") env.result["kernel_size"] = st.kernel_size;
                if (action != "dim" && common.format != "json") {
                    emit.write(render_distribution(common.format, env, d));
                    return exit_ok;
                }
            }
        }
        emit.envelope(env);
        return exit_ok;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        env.ok = false;
        env.result = Json{{"error", e.what()}, {"required_work", e.required()}, {"budget", e.budget()}};
        emit.envelope(env);
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        env.ok = false;
        env.result = Json{{"error", e.what()}};
        emit.envelope(env);
        return exit_params;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        env.ok = false;
        env.result = Json{{"error", e.what()}};
        emit.envelope(env);
        return exit_fail;
    }
}
