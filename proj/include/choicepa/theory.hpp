#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace choicepa::theory {

inline constexpr std::uint32_t kBurnInLevel = 10; // k0

/// (sqrt(4 + (k-1) k t^2) - 2) / (k-1). Throws DomainError for k < 2 or t <= 0.
double rho(std::uint32_t k, double t);

/// ceil((ln ln m)^(1/3)); the slowly growing prefactor of phi(m, k).
/// Throws DomainError for m < 16.
double rho_m(double m);

/// alpha_1 = 2, alpha_k = rho(k, alpha_{k-1}); returns alpha_1..alpha_K.
std::vector<double> alpha_seq(std::uint32_t count);

/// ln f(k) for k = k0..K, with f(k0) = 1/100 and f(k+1) = f(k)^2 (k+1).
/// Kept in log space; f underflows a double by k = 20.
std::vector<double> log_f_seq(std::uint32_t last_k);

struct TailConstants {
    double c1;
    double c2;
    // g(j)/2^j never increases over 0..J, so c1 is attained at j = 0. Past
    // j ~ 50 the decrements fall below one ulp and the computed values plateau.
    bool decreasing;
};

/// With g(j) = -ln f(k0 + j), c1 = max and c2 = min of g(j)/2^j over 0..J.
/// g(j)/2^j is advanced directly as h(j+1) = h(j) - ln(k0+j+1)/2^(j+1) so no
/// precision is lost to the 2^j growth.
TailConstants derive_c1_c2(std::uint32_t horizon);

/// Smallest integer C with ln C > max(c1, ln 4 + c1 2^-k0).
std::uint64_t choose_C(double c1);

/// Smallest k >= 1 with 2^(k+1) ln C >= (ln m)/2. m is a double so that
/// astronomically large m can be queried. Throws DomainError for m < 2.
int k_star(double m, std::uint64_t C);

/// ln phi(m, k) = ln rho_m(m) + 2^(k+1) ln C. Throws DomainError for m < 16.
double phi_log(double m, int k, std::uint64_t C);

/// ln ln m / ln 2. Throws DomainError for m < 16.
double reference_curve(double m);

struct RecurrenceTable {
    std::vector<double> alpha;     // alpha_1..alpha_K
    std::vector<double> log_f;     // ln f(k0)..ln f(K')
    TailConstants constants{};
    std::uint64_t C = 0;
    double m = 0;                  // query point for the per-m fields below
    int k_star = 0;
    double reference = 0;
    double phi_log_at_k_star = 0;
    int band_constant = 0;         // empirical stand-in for the additive r
};

// Additive upper margin used by the max-degree band check.
inline constexpr int kEmpiricalBand = 8;

RecurrenceTable make_table(double m, std::uint32_t kmax, std::uint32_t horizon = 60);

nlohmann::json to_json(const RecurrenceTable& table);

} // namespace choicepa::theory
