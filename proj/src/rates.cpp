#include "qloss/rates.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qloss {

namespace {

std::string shortest(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

void require_nonnegative_time(double t) {
    if (!(t >= 0.0)) {
        std::ostringstream msg;
        msg << "rate evaluated at negative time t=" << t;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

RateFunction RateFunction::constant(double amplitude) {
    RateFunction r;
    r.kind_ = Kind::constant;
    r.amplitude_ = amplitude;
    return r;
}

RateFunction RateFunction::sinusoid(double amplitude, double frequency) {
    RateFunction r;
    r.kind_ = Kind::sinusoid;
    r.amplitude_ = amplitude;
    r.frequency_ = frequency;
    return r;
}

RateFunction RateFunction::damped_cosine(double amplitude, double damping, double frequency) {
    RateFunction r;
    r.kind_ = Kind::damped_cosine;
    r.amplitude_ = amplitude;
    r.damping_ = damping;
    r.frequency_ = frequency;
    return r;
}

RateFunction RateFunction::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2) throw std::invalid_argument("tabulated rate needs at least two samples");
    if (samples.front().first != 0.0) throw std::invalid_argument("tabulated rate must start at t=0");
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].first > samples[i - 1].first))
            throw std::invalid_argument("tabulated rate sample times must increase strictly");
    }
    for (const auto& [t, g] : samples)
        if (!std::isfinite(g)) throw std::invalid_argument("tabulated rate has a non-finite value");
    RateFunction r;
    r.kind_ = Kind::tabulated;
    r.table_ = std::make_shared<const std::vector<std::pair<double, double>>>(std::move(samples));
    r.source_ = "inline";
    return r;
}

double RateFunction::operator()(double t) const {
    require_nonnegative_time(t);
    switch (kind_) {
    case Kind::constant:
        return amplitude_;
    case Kind::sinusoid:
        return amplitude_ * std::sin(frequency_ * t);
    case Kind::damped_cosine:
        return amplitude_ * std::exp(-damping_ * t) * std::cos(frequency_ * t);
    case Kind::tabulated: {
        const auto& tab = *table_;
        if (t > tab.back().first) {
            std::ostringstream msg;
            msg << "t=" << t << " is past the end of the rate table (" << tab.back().first << ")";
            throw std::invalid_argument(msg.str());
        }
        auto hi = std::upper_bound(tab.begin(), tab.end(), t,
                                   [](double v, const auto& sample) { return v < sample.first; });
        if (hi == tab.end()) return tab.back().second;
        auto lo = hi - 1;
        const double w = (t - lo->first) / (hi->first - lo->first);
        return lo->second + w * (hi->second - lo->second);
    }
    }
    return 0.0;
}

double RateFunction::max_abs() const {
    switch (kind_) {
    case Kind::constant:
    case Kind::sinusoid:
        return std::abs(amplitude_);
    case Kind::damped_cosine:
        // |a| at t=0; exp(-bt) only grows for b < 0, which has no finite bound.
        return damping_ < 0.0 ? std::numeric_limits<double>::infinity() : std::abs(amplitude_);
    case Kind::tabulated: {
        double m = 0.0;
        for (const auto& [t, g] : *table_) m = std::max(m, std::abs(g));
        return m;
    }
    }
    return 0.0;
}

double RateFunction::horizon() const {
    return kind_ == Kind::tabulated ? table_->back().first : std::numeric_limits<double>::infinity();
}

std::string RateFunction::describe() const {
    switch (kind_) {
    case Kind::constant:
        return "const:" + shortest(amplitude_);
    case Kind::sinusoid:
        return "sin:" + shortest(amplitude_) + "," + shortest(frequency_);
    case Kind::damped_cosine:
        return "dcos:" + shortest(amplitude_) + "," + shortest(damping_) + "," + shortest(frequency_);
    case Kind::tabulated:
        return "table:" + source_;
    }
    return {};
}

double gamma_integral(const RateFunction& rate, double t) {
    require_nonnegative_time(t);
    const double a = rate.amplitude_;
    switch (rate.kind_) {
    case RateFunction::Kind::constant:
        return a * t;
    case RateFunction::Kind::sinusoid: {
        const double w = rate.frequency_;
        if (w == 0.0) return 0.0;
        return a * (1.0 - std::cos(w * t)) / w;
    }
    case RateFunction::Kind::damped_cosine: {
        const double b = rate.damping_;
        const double w = rate.frequency_;
        const double denom = b * b + w * w;
        if (denom == 0.0) return a * t;
        return a * (b - std::exp(-b * t) * (b * std::cos(w * t) - w * std::sin(w * t))) / denom;
    }
    case RateFunction::Kind::tabulated: {
        const auto& tab = *rate.table_;
        if (t > tab.back().first) {
            std::ostringstream msg;
            msg << "t=" << t << " is past the end of the rate table (" << tab.back().first << ")";
            throw std::invalid_argument(msg.str());
        }
        // Simpson on each segment of the interpolant; exact for linear pieces.
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < tab.size() && tab[i].first < t; ++i) {
            const double lo = tab[i].first;
            const double hi = std::min(tab[i + 1].first, t);
            const double mid = 0.5 * (lo + hi);
            total += (hi - lo) / 6.0 * (rate(lo) + 4.0 * rate(mid) + rate(hi));
        }
        return total;
    }
    }
    return 0.0;
}

}  // namespace qloss
