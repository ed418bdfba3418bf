// SPDX-License-Identifier: Apache-2.0
//
// fdmimo - shared-antenna full-duplex massive MU-MIMO simulator
// Copyright (C) 2026 The fdmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fdmimo/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fdmimo {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(trim(item));
    return out;
}

[[noreturn]] void fail(const ConfigEntry& e, const std::string& what) {
    throw UsageError(e.origin + ": key '" + e.key + "': " + what);
}

double number(const ConfigEntry& e) {
    try {
        return parse_real(e.value);
    } catch (const UsageError&) {
        fail(e, "non-numeric value '" + e.value + "'");
    }
}

long long integer(const ConfigEntry& e) {
    const double v = number(e);
    if (v != std::floor(v) || !std::isfinite(v)) {
        fail(e, "expected an integer, got '" + e.value + "'");
    }
    return static_cast<long long>(v);
}

std::complex<double> complex_value(const ConfigEntry& e) {
    const std::string& v = e.value;
    if (!v.empty() && v.front() == '(') {
        if (v.back() != ')') fail(e, "malformed complex value '" + v + "'");
        const auto parts = split_list(v.substr(1, v.size() - 2));
        if (parts.size() != 2) fail(e, "malformed complex value '" + v + "'");
        try {
            return {parse_real(parts[0]), parse_real(parts[1])};
        } catch (const UsageError&) {
            fail(e, "non-numeric value '" + v + "'");
        }
    }
    return {number(e), 0.0};
}

bool boolean(const ConfigEntry& e) {
    if (e.value == "1" || e.value == "true" || e.value == "on") return true;
    if (e.value == "0" || e.value == "false" || e.value == "off") return false;
    fail(e, "expected a boolean, got '" + e.value + "'");
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_list(text)) {
        const double v = parse_real(item);
        if (v != std::floor(v) || v < 1 || v > 1e7) {
            throw UsageError("not a positive integer: '" + item + "'");
        }
        out.push_back(static_cast<int>(v));
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

std::vector<ConfigEntry> read_config_entries(std::istream& in,
                                             const std::string& source) {
    std::vector<ConfigEntry> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string origin = source + ":" + std::to_string(line_no);
        if (eq == std::string::npos) {
            throw UsageError(origin + ": expected key=value, got '" + line + "'");
        }
        out.push_back({trim(line.substr(0, eq)), trim(line.substr(eq + 1)), origin});
    }
    return out;
}

ParsedConfig parse_config(const std::vector<ConfigEntry>& entries) {
    ParsedConfig pc;
    SweepConfig& sc = pc.sweep;
    SystemParams& p = sc.params;
    sc.m_values = kDefaultMGrid;
    sc.master_seed = 20150101;

    std::vector<double> beta_k = {0.1};
    const ConfigEntry* beta_entry = nullptr;
    const ConfigEntry* m_entry = nullptr;
    const ConfigEntry* k_entry = nullptr;

    for (const auto& e : entries) {
        const std::string& key = e.key;
        if (key == "M_values") {
            std::vector<int> m;
            try {
                m = parse_int_list(e.value);
            } catch (const UsageError& err) {
                fail(e, err.what());
            }
            for (std::size_t i = 1; i < m.size(); ++i) {
                if (m[i] <= m[i - 1]) fail(e, "values must be strictly ascending");
            }
            sc.m_values = std::move(m);
            pc.m_values_set = true;
            m_entry = &e;
        } else if (key == "trials") {
            const long long t = integer(e);
            if (t < 1) fail(e, "must be >= 1");
            sc.trials = static_cast<int>(t);
            pc.trials_set = true;
        } else if (key == "seed") {
            try {
                std::size_t pos = 0;
                sc.master_seed = std::stoull(e.value, &pos);
                if (pos != e.value.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                fail(e, "expected an unsigned 64-bit integer");
            }
        } else if (key == "K") {
            const long long k = integer(e);
            if (k < 1) fail(e, "must be >= 1");
            p.K = static_cast<int>(k);
            k_entry = &e;
        } else if (key == "beta_k") {
            beta_k.clear();
            for (const auto& item : split_list(e.value)) {
                try {
                    beta_k.push_back(parse_real(item));
                } catch (const UsageError&) {
                    fail(e, "non-numeric value '" + item + "'");
                }
            }
            beta_entry = &e;
        } else if (key == "beta_si") {
            p.beta_si = number(e);
        } else if (key == "beta_prime") {
            p.beta_prime = number(e);
        } else if (key == "p_u") {
            p.p_u = number(e);
        } else if (key == "p_d") {
            p.p_d = number(e);
        } else if (key == "p_u_db") {
            p.p_u = from_db(number(e));
        } else if (key == "p_d_db") {
            p.p_d = from_db(number(e));
        } else if (key == "c_direct") {
            p.c_direct = complex_value(e);
        } else if (key == "c_prime") {
            p.c_prime = complex_value(e);
        } else if (key == "scheme") {
            try {
                p.scheme = parse_scheme(e.value);
            } catch (const UsageError&) {
                fail(e, "expected zf or mrt, got '" + e.value + "'");
            }
            pc.scheme_set = true;
        } else if (key == "links") {
            sc.links.clear();
            for (const auto& item : split_list(e.value)) {
                try {
                    sc.links.push_back(parse_link(item));
                } catch (const UsageError&) {
                    fail(e, "unknown link '" + item + "'");
                }
            }
        } else if (key == "normalize") {
            sc.normalize = boolean(e);
        } else if (key == "downlink_si_uses_uplink_power") {
            p.downlink_si_uses_uplink_power = boolean(e);
        } else if (key == "ue_reflected_amplitude_convention") {
            if (e.value == "sqrt_beta_prime") {
                p.ue_reflected_amplitude_convention = UeReflectedConvention::kSqrtBetaPrime;
            } else if (e.value == "beta_prime") {
                p.ue_reflected_amplitude_convention = UeReflectedConvention::kBetaPrime;
            } else {
                fail(e, "expected sqrt_beta_prime or beta_prime");
            }
        } else {
            fail(e, "unknown key");
        }
    }

    if (beta_k.size() == 1) {
        p.beta_k.assign(static_cast<std::size_t>(p.K), beta_k.front());
    } else if (beta_k.size() == static_cast<std::size_t>(p.K)) {
        p.beta_k = beta_k;
    } else {
        fail(*beta_entry, "has " + std::to_string(beta_k.size()) +
                              " entries, expected 1 or K=" + std::to_string(p.K));
    }

    if (sc.m_values.front() <= p.K) {
        const std::string what = "M=" + std::to_string(sc.m_values.front()) +
                                 " must exceed K=" + std::to_string(p.K);
        if (m_entry) fail(*m_entry, what);
        if (k_entry) fail(*k_entry, what);
        throw UsageError(what);
    }
    p.M = sc.m_values.front();
    try {
        sc.validate();
    } catch (const ParameterError& err) {
        throw UsageError(std::string("invalid configuration: ") + err.what());
    }
    return pc;
}

Manifest describe(const SweepConfig& config) {
    const SystemParams& p = config.params;
    auto join_ints = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    auto complex_str = [](std::complex<double> z) {
        return "(" + format_real(z.real()) + "," + format_real(z.imag()) + ")";
    };
    std::string beta_k, links;
    for (std::size_t i = 0; i < p.beta_k.size(); ++i) {
        beta_k += (i ? "," : "") + format_real(p.beta_k[i]);
    }
    for (std::size_t i = 0; i < config.links.size(); ++i) {
        links += (i ? "," : "") + std::string(to_string(config.links[i]));
    }
    return {
        {"M_values", join_ints(config.m_values)},
        {"trials", std::to_string(config.trials)},
        {"seed", std::to_string(config.master_seed)},
        {"K", std::to_string(p.K)},
        {"beta_k", beta_k},
        {"beta_si", format_real(p.beta_si)},
        {"beta_prime", format_real(p.beta_prime)},
        {"p_u", format_real(p.p_u)},
        {"p_d", format_real(p.p_d)},
        {"c_direct", complex_str(p.c_direct)},
        {"c_prime", complex_str(p.c_prime)},
        {"scheme", std::string(to_string(p.scheme))},
        {"links", links},
        {"normalize", config.normalize ? "true" : "false"},
        {"downlink_si_uses_uplink_power",
         p.downlink_si_uses_uplink_power ? "true" : "false"},
        {"ue_reflected_amplitude_convention",
         std::string(to_string(p.ue_reflected_amplitude_convention))},
    };
}

}  // namespace fdmimo
