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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "fdmimo/asymptotics.hpp"
#include "fdmimo/channel.hpp"
#include "fdmimo/config.hpp"
#include "fdmimo/montecarlo.hpp"
#include "fdmimo/processing.hpp"

using namespace fdmimo;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20150101;

int workers() {
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& check) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt_opt(std::optional<double> v) {
    return v ? fmt("%.1f", *v) : std::string("none");
}

bool within(std::optional<double> v, double lo, double hi) {
    return v && *v >= lo && *v <= hi;
}

bool near_rel(std::optional<double> v, double target, double tol) {
    return v && std::abs(*v - target) <= tol * target;
}

SweepConfig zf_sweep(Link link, int trials) {
    SweepConfig c;
    c.params.scheme = Scheme::kZf;
    c.m_values = kDefaultMGrid;
    c.trials = trials;
    c.master_seed = kSeed;
    c.links = {link};
    return c;
}

std::optional<double> crossing(const PowerTable& t, Link link, PowerTerm term) {
    const auto s = select_series(t, link, Scheme::kZf, term);
    return find_crossing(s, 0.0);
}

double loglog_slope(const std::vector<std::pair<double, double>>& series) {
    // x = log10 M, y = log10 power = dB / 10
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(series.size());
    for (const auto& [m, db] : series) {
        const double x = std::log10(m);
        const double y = db / 10.0;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome check_decay(const std::vector<DecaySeries>& all) {
    bool ok = true;
    std::string detail;
    for (const auto& s : all) {
        const bool dec = s.medians_strictly_decreasing();
        ok = ok && dec;
        const auto m = s.medians();
        detail += s.statistic + (dec ? " ok" : " NOT decreasing");
        detail += fmt(" [%.3g", m.front()) + fmt(" -> %.3g]; ", m.back());
    }
    return {ok, detail};
}

int run_sim(const std::string& args) {
    const std::string cmd = std::string(FDMIMO_SIM_PATH) + " " + args + " >/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    std::printf("fdmimo acceptance, seed %llu, %d worker(s)\n",
                static_cast<unsigned long long>(kSeed), workers());

    report(1, "uplink ZF si_total decays as 1/M", [] {
        SweepConfig c = zf_sweep(Link::kUplink, 500);
        c.params.c_direct = 0.5;
        const auto t = run_sweep(c, workers()).table;
        const double slope =
            loglog_slope(select_series(t, Link::kUplink, Scheme::kZf, PowerTerm::kSiTotal));
        return Outcome{slope >= -1.2 && slope <= -0.8,
                       fmt("slope %.3f, window [-1.2, -0.8]", slope)};
    });

    report(2, "downlink si_total crossing, c'=0.6", [] {
        SweepConfig c = zf_sweep(Link::kDownlink, 1000);
        c.params.c_prime = 0.6;
        const auto m = crossing(run_sweep(c, workers()).table, Link::kDownlink,
                                PowerTerm::kSiTotal);
        const SystemParams& p = c.params;
        const double oracle =
            p.K * (std::norm(p.c_prime) + p.beta_prime) * p.inverse_beta_sum() + p.K;
        return Outcome{within(m, 120, 230) && near_rel(m, oracle, 0.10),
                       "M* " + fmt_opt(m) + ", window [120, 230], closed form " +
                           fmt("%.1f +-10%%", oracle)};
    });

    report(3, "downlink interference+noise crossing, c'=0.7", [] {
        SweepConfig c = zf_sweep(Link::kDownlink, 1000);
        c.params.c_prime = 0.7;
        const auto m = crossing(run_sweep(c, workers()).table, Link::kDownlink,
                                PowerTerm::kTotalIntPlusNoise);
        const SystemParams& p = c.params;
        const double oracle =
            (p.K * (std::norm(p.c_prime) + p.beta_prime) + 1.0) * p.inverse_beta_sum() + p.K;
        return Outcome{within(m, 155, 300) && near_rel(m, oracle, 0.10),
                       "M* " + fmt_opt(m) + ", window [155, 300], closed form " +
                           fmt("%.1f +-10%%", oracle)};
    });

    report(4, "uplink ZF crossings, c=0.5 and c=0.9", [] {
        SweepConfig c = zf_sweep(Link::kUplink, 1000);
        c.params.c_direct = 0.5;
        const auto si = crossing(run_sweep(c, workers()).table, Link::kUplink,
                                 PowerTerm::kSiTotal);
        c.params.c_direct = 0.9;
        const auto total = crossing(run_sweep(c, workers()).table, Link::kUplink,
                                    PowerTerm::kTotalIntPlusNoise);
        return Outcome{within(si, 180, 340) && within(total, 300, 560),
                       "si_total M* " + fmt_opt(si) + " in [180, 340]; total M* " +
                           fmt_opt(total) + " in [300, 560]"};
    });

    report(5, "ZF identities at M=64", [] {
        SystemParams p;
        p.M = 64;
        p.scheme = Scheme::kZf;
        const RngStream root(kSeed, 5);
        double worst_identity = 0.0, worst_db = -INFINITY;
        for (int t = 0; t < 100; ++t) {
            const auto real = sample_realization(p, root.split(t));
            const ComplexMatrixd w = build_receiver(real.G, Scheme::kZf);
            const ComplexMatrixd a = build_precoder(real.G, Scheme::kZf, p);
            worst_identity = std::max(
                worst_identity,
                frobenius_norm(ComplexMatrixd(w * real.G) - ComplexMatrixd::Identity(p.K, p.K)));
            const auto up = uplink_terms(real, a, w, p);
            const auto down = downlink_terms(real, a, p);
            worst_db = std::max({worst_db, to_db(up.inter_user.squaredNorm() / p.K),
                                 to_db(down.inter_user.squaredNorm() / p.K)});
        }
        return Outcome{worst_identity < 1e-10 && worst_db < -100.0,
                       fmt("max ||WG - I||_F %.2e", worst_identity) +
                           fmt(", max inter_user %.1f dB", worst_db)};
    });

    report(6, "precoder normalization E{s^H s} = 1", [] {
        bool ok = true;
        std::string detail;
        for (Scheme s : {Scheme::kZf, Scheme::kMrtMrc}) {
            SystemParams p;
            p.M = 64;
            p.scheme = s;
            const RngStream root(kSeed, 6);
            double acc = 0.0;
            constexpr int kTrials = 10000;
            for (int t = 0; t < kTrials; ++t) {
                RngStream rng = root.split(static_cast<std::uint64_t>(s), t);
                const ComplexMatrixd g = sample_user_channel(p, rng);
                const ComplexMatrixd x_d = cscg_sample(rng, p.K, 1);
                acc += (build_precoder(g, s, p) * x_d).squaredNorm();
            }
            const double mean = acc / kTrials;
            ok = ok && std::abs(mean - 1.0) <= 0.02;
            detail += std::string(to_string(s)) + fmt(" %.4f; ", mean);
        }
        return Outcome{ok, detail + "window 1 +- 2%"};
    });

    report(7, "quadratic-form statistics vanish", [] {
        std::vector<DecaySeries> all;
        bool rates = true;
        std::string detail;
        const RngStream root(kSeed, 7);
        std::uint64_t tag = 0;
        for (const LemmaMatrix& b : {LemmaMatrix::identity(), LemmaMatrix::all_equal(1.0),
                                     LemmaMatrix::random_iid(1.0)}) {
            for (LemmaPair pair : {LemmaPair::kXBxConj, LemmaPair::kXBy}) {
                DecaySeries s = lemma1_decay_sweep(b, pair, kDecayMGrid, 500,
                                                   root.split(++tag), workers());
                const double ratio = s.summary[1].median / s.summary[2].median;
                if (b.kind == LemmaMatrix::Kind::kIdentity) {
                    rates = rates && ratio >= 2.5 && ratio <= 6.5;
                    detail += s.statistic + fmt(" ratio %.2f in [2.5, 6.5]; ", ratio);
                } else if (b.kind == LemmaMatrix::Kind::kAllEqual) {
                    rates = rates && ratio >= 1.5 && ratio <= 2.7;
                    detail += s.statistic + fmt(" ratio %.2f in [1.5, 2.7]; ", ratio);
                }
                all.push_back(std::move(s));
            }
        }
        const Outcome decay = check_decay(all);
        return Outcome{decay.pass && rates, detail + decay.detail};
    });

    report(8, "projected BS SI vanishes", [] {
        SystemParams p;
        const RngStream root(kSeed, 8);
        std::vector<DecaySeries> all;
        all.push_back(theorem1_sweep(p, SiComponent::kDirect, kDecayMGrid, 500, root.split(1),
                                     workers()));
        all.push_back(theorem1_sweep(p, SiComponent::kReflected, kDecayMGrid, 500,
                                     root.split(2), workers()));
        return check_decay(all);
    });

    report(9, "decoding error vanishes, both links and schemes", [] {
        const RngStream root(kSeed, 9);
        std::vector<DecaySeries> all;
        std::uint64_t tag = 0;
        for (PropositionKind k : {PropositionKind::kUplink, PropositionKind::kDownlink}) {
            for (Scheme s : {Scheme::kZf, Scheme::kMrtMrc}) {
                SystemParams p;
                p.scheme = s;
                all.push_back(proposition_convergence(k, p, kDecayMGrid, 500,
                                                      root.split(++tag), workers()));
            }
        }
        return check_decay(all);
    });

    report(10, "fig2-uplink output independent of worker count", [] {
        const fs::path base = fs::temp_directory_path() / "fdmimo_acceptance_det";
        fs::remove_all(base);
        const std::string common = "--preset fig2-uplink --seed 4242 --trials 40 --m-list 64,128,256";
        const int rc1 = run_sim(common + " --workers 1 --out " + (base / "w1").string());
        const int rc3 = run_sim(common + " --workers 3 --out " + (base / "w3").string());
        if (rc1 != 0 || rc3 != 0) {
            return Outcome{false, "fdmimo_sim exit codes " + std::to_string(rc1) + ", " +
                                      std::to_string(rc3)};
        }
        int compared = 0, differing = 0;
        for (const auto& e : fs::directory_iterator(base / "w1")) {
            if (e.path().extension() != ".csv") continue;
            ++compared;
            const fs::path other = base / "w3" / e.path().filename();
            if (!fs::exists(other) || slurp(e.path()) != slurp(other)) ++differing;
        }
        fs::remove_all(base);
        return Outcome{compared >= 3 && differing == 0,
                       std::to_string(compared) + " CSV files compared, " +
                           std::to_string(differing) + " differ"};
    });

    std::printf("%s: %d failure(s)\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
