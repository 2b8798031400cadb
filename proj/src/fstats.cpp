#include "choicepa/fstats.hpp"

#include <cmath>
#include <string>

#include "choicepa/errors.hpp"

namespace choicepa {

namespace {

// x^n by repeated multiplication; monotone in x for x >= 0.
double int_power(double x, std::uint32_t n) {
    double r = 1.0;
    for (std::uint32_t i = 0; i < n; ++i) r *= x;
    return r;
}

} // namespace

ThresholdVector::ThresholdVector(std::uint32_t kmax, bool strict) : values_(kmax, 0), strict_(strict) {
    if (kmax < 2) throw PreconditionError("threshold vector: kmax must be at least 2");
}

ThresholdVector ThresholdVector::initial(std::uint32_t kmax, bool strict) {
    ThresholdVector f(kmax, strict);
    f.values_[0] = 2;
    f.edges_ = 1;
    return f;
}

std::uint32_t ThresholdVector::top_level() const {
    for (auto k = kmax(); k >= 1; --k) {
        if (values_[k - 1] > 0) return k;
    }
    return 0;
}

ThresholdVector compute_from_degrees(std::span<const std::uint32_t> degrees, std::uint32_t kmax,
                                     bool strict) {
    ThresholdVector f(kmax, strict);
    std::uint64_t total = 0;
    for (const auto deg : degrees) {
        total += deg;
        if (strict && deg >= kmax) {
            throw KmaxExceeded("degree " + std::to_string(deg) + " reached kmax " + std::to_string(kmax));
        }
        const auto top = deg < kmax ? deg : kmax;
        for (std::uint32_t k = 1; k <= top; ++k) f.values_[k - 1] += deg;
    }
    f.edges_ = total / 2;
    return f;
}

void update_on_attach(ThresholdVector& f, std::uint32_t chosen_degree) {
    const auto d = chosen_degree;
    const auto kmax = f.kmax();
    if (d < 1) throw PreconditionError("update_on_attach: chosen degree must be >= 1");
    if (d <= kmax && f.values_[d - 1] < d) {
        throw PreconditionError("update_on_attach: no vertex of degree >= " + std::to_string(d) +
                                " (F(" + std::to_string(d) + ") = " + std::to_string(f.values_[d - 1]) + ")");
    }
    if (f.strict_ && d + 1 >= kmax) {
        throw KmaxExceeded("degree " + std::to_string(d + 1) + " reached kmax " + std::to_string(kmax));
    }
    f.values_[0] += 2;
    const auto top = d < kmax ? d : kmax;
    for (std::uint32_t k = 2; k <= top; ++k) f.values_[k - 1] += 1;
    if (d + 1 <= kmax) f.values_[d] += d + 1;
    ++f.edges_;
}

std::uint32_t vector_chain_step(ThresholdVector& f, double u, std::uint32_t choices) {
    const double denom = 2.0 * static_cast<double>(f.edges());
    std::uint32_t d = 1;
    while (d < f.kmax()) {
        const double share = static_cast<double>(f.at(d + 1)) / denom;
        if (!(u < int_power(share, choices))) break;
        ++d;
    }
    update_on_attach(f, d);
    return d;
}

std::vector<double> empirical_alpha(const ThresholdVector& f) {
    if (f.edges() < 1) throw PreconditionError("empirical_alpha: edge count must be >= 1");
    std::vector<double> out(f.kmax());
    const double j = static_cast<double>(f.edges());
    for (std::uint32_t k = 1; k <= f.kmax(); ++k) out[k - 1] = static_cast<double>(f.at(k)) / j;
    return out;
}

double decay_trace(std::span<const DecayPoint> history) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& p : history) {
        if (p.edges == 0 || p.weight == 0) continue;
        const double x = std::log(static_cast<double>(p.edges));
        const double y = std::log(static_cast<double>(p.weight) / (2.0 * static_cast<double>(p.edges)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 3) throw PreconditionError("decay_trace: need at least 3 points with F > 0");
    const double nn = static_cast<double>(n);
    const double var = sxx - sx * sx / nn;
    if (var <= 0.0) throw PreconditionError("decay_trace: all points share the same j");
    return (sxy - sx * sy / nn) / var;
}

} // namespace choicepa
