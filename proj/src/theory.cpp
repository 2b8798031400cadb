#include "choicepa/theory.hpp"

#include <cmath>
#include <string>

#include "choicepa/errors.hpp"

namespace choicepa::theory {

double rho(std::uint32_t k, double t) {
    if (k < 2) throw DomainError("rho: k must be >= 2 (got " + std::to_string(k) + ")");
    if (!(t > 0.0)) throw DomainError("rho: t must be positive");
    const double km1 = static_cast<double>(k - 1);
    const double x = km1 * static_cast<double>(k) * t * t;
    // sqrt(4 + x) - 2 == x / (sqrt(4 + x) + 2) without cancellation for small x.
    return x / (std::sqrt(4.0 + x) + 2.0) / km1;
}

double rho_m(double m) {
    if (!(m >= 16.0)) throw DomainError("rho_m: m must be >= 16");
    return std::ceil(std::cbrt(std::log(std::log(m))));
}

std::vector<double> alpha_seq(std::uint32_t count) {
    if (count < 1) throw DomainError("alpha_seq: need at least one term");
    std::vector<double> alpha(count);
    alpha[0] = 2.0;
    // The sequence leaves double range near k = 16; once a term underflows to
    // zero every later term is zero as well.
    for (std::uint32_t k = 2; k <= count; ++k) {
        alpha[k - 1] = alpha[k - 2] > 0.0 ? rho(k, alpha[k - 2]) : 0.0;
    }
    return alpha;
}

std::vector<double> log_f_seq(std::uint32_t last_k) {
    if (last_k < kBurnInLevel) throw DomainError("f_seq: K must be >= 10");
    std::vector<double> out;
    out.reserve(last_k - kBurnInLevel + 1);
    out.push_back(-std::log(100.0));
    for (std::uint32_t k = kBurnInLevel; k < last_k; ++k) {
        out.push_back(2.0 * out.back() + std::log(static_cast<double>(k + 1)));
    }
    return out;
}

TailConstants derive_c1_c2(std::uint32_t horizon) {
    double h = std::log(100.0);
    TailConstants tc{h, h, true};
    double scale = 1.0;
    for (std::uint32_t j = 0; j < horizon; ++j) {
        scale *= 0.5;
        const double next = h - std::log(static_cast<double>(kBurnInLevel + j + 1)) * scale;
        if (next > h) tc.decreasing = false;
        h = next;
        tc.c1 = std::max(tc.c1, h);
        tc.c2 = std::min(tc.c2, h);
    }
    return tc;
}

std::uint64_t choose_C(double c1) {
    const double bound = std::max(c1, std::log(4.0) + c1 * std::ldexp(1.0, -static_cast<int>(kBurnInLevel)));
    auto C = static_cast<std::uint64_t>(std::floor(std::exp(bound)));
    if (C < 1) C = 1;
    while (!(std::log(static_cast<double>(C)) > bound)) ++C;
    return C;
}

int k_star(double m, std::uint64_t C) {
    if (!(m >= 2.0)) throw DomainError("k_star: m must be >= 2");
    if (C < 2) throw DomainError("k_star: C must be >= 2");
    const double target = 0.5 * std::log(m);
    const double logC = std::log(static_cast<double>(C));
    int k = 1;
    while (std::ldexp(logC, k + 1) < target) ++k;
    return k;
}

double phi_log(double m, int k, std::uint64_t C) {
    if (!(m >= 16.0)) throw DomainError("phi_log: m must be >= 16");
    if (k < 0) throw DomainError("phi_log: k must be >= 0");
    return std::log(rho_m(m)) + std::ldexp(std::log(static_cast<double>(C)), k + 1);
}

double reference_curve(double m) {
    if (!(m >= 16.0)) throw DomainError("reference_curve: m must be >= 16");
    return std::log(std::log(m)) / std::log(2.0);
}

RecurrenceTable make_table(double m, std::uint32_t kmax, std::uint32_t horizon) {
    RecurrenceTable t;
    t.alpha = alpha_seq(kmax);
    t.log_f = log_f_seq(std::max(kmax, kBurnInLevel + 10));
    t.constants = derive_c1_c2(horizon);
    t.C = choose_C(t.constants.c1);
    t.m = m;
    t.k_star = k_star(m, t.C);
    t.reference = reference_curve(m);
    t.phi_log_at_k_star = phi_log(m, t.k_star, t.C);
    t.band_constant = kEmpiricalBand;
    return t;
}

nlohmann::json to_json(const RecurrenceTable& t) {
    nlohmann::json log_f = nlohmann::json::array();
    for (std::size_t i = 0; i < t.log_f.size(); ++i) {
        log_f.push_back({{"k", kBurnInLevel + i}, {"ln_f", t.log_f[i]}});
    }
    return {
        {"alpha", t.alpha},
        {"f", log_f},
        {"c1", t.constants.c1},
        {"c2", t.constants.c2},
        {"c_ratio_decreasing", t.constants.decreasing},
        {"C", t.C},
        {"m", t.m},
        {"rho_m", rho_m(t.m)},
        {"k_star", t.k_star},
        {"phi_log_at_k_star", t.phi_log_at_k_star},
        {"reference_curve", t.reference},
        {"band_constant", t.band_constant},
    };
}

} // namespace choicepa::theory
