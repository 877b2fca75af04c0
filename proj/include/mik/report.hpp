#pragma once

#include <chrono>
#include <optional>
#include <string>

#include <json.hpp>

#include "mik/certify.hpp"
#include "mik/enumerate.hpp"

namespace mik {

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    j["power_bound"] = v.power_bound;
    if (v.witness_prime) j["witness_prime"] = v.witness_prime->str();
    if (v.witness_power) j["witness_power"] = *v.witness_power;
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

inline nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["rule"] = to_string(c.rule);
    j["ideal"] = c.ideal;
    j["ambient"] = c.ambient;
    if (c.monomial) j["monomial"] = *c.monomial;
    if (c.ell) j["ell"] = *c.ell;
    if (c.var_i) j["var_i"] = *c.var_i;
    if (c.var_j) j["var_j"] = *c.var_j;
    if (c.witness_prime) j["witness_prime"] = *c.witness_prime;
    if (c.witness_power) j["witness_power"] = *c.witness_power;
    if (c.power_bound) j["power_bound"] = *c.power_bound;
    if (!c.premises.empty()) {
        j["premises"] = nlohmann::json::array();
        for (const auto& p : c.premises) j["premises"].push_back(to_json(p));
    }
    return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    auto rule = rule_from_string(j.at("rule").get<std::string>());
    if (!rule) throw std::invalid_argument("unknown certificate rule");
    c.rule = *rule;
    c.ideal = j.at("ideal").get<std::string>();
    c.ambient = j.at("ambient").get<std::size_t>();
    if (j.contains("monomial")) c.monomial = j["monomial"].get<std::string>();
    if (j.contains("ell")) c.ell = j["ell"].get<unsigned>();
    if (j.contains("var_i")) c.var_i = j["var_i"].get<std::size_t>();
    if (j.contains("var_j")) c.var_j = j["var_j"].get<std::size_t>();
    if (j.contains("witness_prime"))
        c.witness_prime = j["witness_prime"].get<std::vector<std::size_t>>();
    if (j.contains("witness_power"))
        c.witness_power = j["witness_power"].get<unsigned>();
    if (j.contains("power_bound")) c.power_bound = j["power_bound"].get<unsigned>();
    if (j.contains("premises"))
        for (const auto& p : j["premises"])
            c.premises.push_back(certificate_from_json(p));
    return c;
}

inline nlohmann::json to_json(const SweepReport& r) {
    nlohmann::json j;
    j["total"] = r.total;
    j["holds"] = r.holds;
    j["fails"] = r.fails;
    j["unknown"] = r.unknown;
    j["failing"] = r.failing;
    j["duration_ms"] = r.duration_ms;
    return j;
}

inline nlohmann::json to_json(const CcResult& r) {
    nlohmann::json j;
    j["kind"] = to_string(r.kind);
    j["candidate"] = r.candidate();
    j["conjecture_relevant"] = r.conjecture_relevant;
    j["reason"] = r.reason;
    if (r.failing_minor) {
        j["failing_minor"] = {{"delete", r.failing_minor->first},
                              {"contract", r.failing_minor->second}};
    }
    if (r.cor43_witness) {
        j["witness"] = {{"ell", r.cor43_witness->ell},
                        {"monomial", r.cor43_witness->v.str()}};
    }
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    if (r.ntf_verdict) j["ntf_verdict"] = to_json(*r.ntf_verdict);
    return j;
}

/// Report skeleton shared by every CLI command.
inline nlohmann::json make_report(const std::string& command,
                                  const std::string& input,
                                  nlohmann::json parameters) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = command;
    j["input"] = input;
    j["parameters"] = std::move(parameters);
    return j;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace mik
