#include "fourfold/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fourfold {

void validate(const FieldTrace& trace) {
    if (!(trace.dt > 0.0)) {
        throw std::invalid_argument("FieldTrace: dt must be positive, got " + std::to_string(trace.dt));
    }
    if (trace.carrier < 0.0) {
        throw std::invalid_argument("FieldTrace: carrier must be >= 0");
    }
    for (const cdouble& v : trace.samples) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("FieldTrace: non-finite sample");
        }
    }
}

double CoherenceModel::envelope(double tau) const {
    switch (shape) {
        case CoherenceShape::gaussian:
            return std::exp(-tau * tau / (2.0 * tc * tc));
        case CoherenceShape::lorentzian:
            return std::exp(-std::abs(tau) / tc);
    }
    return 0.0;
}

cdouble CoherenceModel::full(double tau) const {
    return std::polar(envelope(tau), -omega * tau);
}

cdouble CoherenceModel::full_quantized(double tau, double dt) const {
    const double tau_env = dt > 0.0 ? std::round(tau / dt) * dt : tau;
    return std::polar(envelope(tau_env), -omega * tau);
}

void validate(const CoherenceModel& model) {
    if (!(model.tc > 0.0)) {
        throw std::invalid_argument("CoherenceModel: tc must be positive, got " + std::to_string(model.tc));
    }
    if (model.omega < 0.0) {
        throw std::invalid_argument("CoherenceModel: omega must be >= 0");
    }
}

void validate(const SourceSpec& spec) {
    if (!(spec.intensity > 0.0)) {
        throw std::invalid_argument("SourceSpec: intensity must be positive, got " +
                                    std::to_string(spec.intensity));
    }
    if (!std::isfinite(spec.alpha_phase)) {
        throw std::invalid_argument("SourceSpec: alpha_phase must be finite");
    }
}

} // namespace fourfold
