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

#ifndef PAIRWEIGHT_RENDER_HPP
#define PAIRWEIGHT_RENDER_HPP

#include <cstdint>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pairweight/distribution.hpp"
#include "pairweight/verify.hpp"

namespace pairweight::render {

inline constexpr const char* schema_version = "1.0.0";

struct Envelope {
    std::string command;
    Json params = Json::object();
    Json result = Json::object();
    bool ok = true;
    std::int64_t elapsed_ms = 0;
};

inline Json to_json(const Envelope& env) {
    return Json{{"schema_version", schema_version}, {"command", env.command},   {"params", env.params},
                {"result", env.result},             {"status", env.ok ? "ok" : "error"},
                {"elapsed_ms", env.elapsed_ms}};
}

inline Json to_json(const Check& c) {
    return Json{{"name", c.name},          {"anchor", c.anchor}, {"status", to_string(c.status)},
                {"predicted", c.predicted}, {"actual", c.actual}, {"detail", c.detail},
                {"elapsed_ms", c.elapsed_ms}};
}

inline Json to_json(const VerificationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back(to_json(c));
    return Json{{"code", rep.params},
                {"regime", rep.regime},
                {"all_pass", rep.all_pass()},
                {"summary",
                 {{"pass", rep.count(CheckOutcome::pass)},
                  {"fail", rep.count(CheckOutcome::fail)},
                  {"not_applicable", rep.count(CheckOutcome::not_applicable)}}},
                {"flags", rep.flags},
                {"checks", checks}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

inline std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace detail

/// Header plus one row per weight in the support.
inline std::string csv(const WeightDistribution& d) {
    std::ostringstream os;
    os << "weight,count\n";
    for (auto [w, c] : d.counts()) os << w << ',' << c << '\n';
    return os.str();
}

inline std::string text(const WeightDistribution& d, char var = 'z') {
    std::ostringstream os;
    os << d.enumerator(var) << '\n';
    for (auto [w, c] : d.counts()) os << "  " << w << '\t' << c << '\n';
    return os.str();
}

inline std::string csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << "name,status,anchor,predicted,actual,detail\n";
    for (const auto& c : rep.checks)
        os << c.name << ',' << to_string(c.status) << ',' << detail::csv_field(c.anchor) << ','
           << detail::csv_field(detail::scalar(c.predicted)) << ',' << detail::csv_field(detail::scalar(c.actual))
           << ',' << detail::csv_field(c.detail) << '\n';
    return os.str();
}

inline std::string text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "code " << rep.params.dump() << " regime " << rep.regime << '\n';
    for (const auto& c : rep.checks) {
        os << to_string(c.status) << "  " << c.name;
        if (c.status != CheckOutcome::not_applicable)
            os << "  predicted=" << detail::scalar(c.predicted) << " actual=" << detail::scalar(c.actual);
        if (!c.detail.empty()) os << "  (" << c.detail << ')';
        os << '\n';
    }
    for (const auto& f : rep.flags) os << "FLAG  " << f << '\n';
    os << rep.count(CheckOutcome::pass) << " pass, " << rep.count(CheckOutcome::fail) << " fail, "
       << rep.count(CheckOutcome::not_applicable) << " not applicable\n";
    return os.str();
}

}  // namespace pairweight::render

#endif  // PAIRWEIGHT_RENDER_HPP
