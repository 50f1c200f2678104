#include "stirling/media.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stirling {

namespace {

void require_finite(const MediumParams& params) {
    if (!std::isfinite(params.lambda) || !std::isfinite(params.j))
        throw std::invalid_argument("medium parameters must be finite");
}

}  // namespace

WorkingMedium WorkingMedium::single_spin() {
    return WorkingMedium(MediumKind::SingleSpin);
}

WorkingMedium WorkingMedium::coupled_spins() {
    return WorkingMedium(MediumKind::CoupledSpins);
}

WorkingMedium WorkingMedium::custom(SpectrumFn fn) {
    if (!fn) throw std::invalid_argument("custom medium requires a spectrum function");
    return WorkingMedium(MediumKind::Custom, std::move(fn));
}

Spectrum WorkingMedium::spectrum(const MediumParams& params) const {
    require_finite(params);
    Spectrum levels;
    switch (kind_) {
        case MediumKind::SingleSpin:
            levels = {-0.5 * params.lambda, 0.5 * params.lambda};
            break;
        case MediumKind::CoupledSpins:
            levels = {-params.lambda, -params.j, params.j, params.lambda};
            break;
        case MediumKind::Custom:
            levels = custom_(params);
            if (levels.empty())
                throw std::invalid_argument("custom spectrum must be non-empty");
            for (double e : levels)
                if (!std::isfinite(e))
                    throw std::invalid_argument("custom spectrum must be finite");
            break;
    }
    std::sort(levels.begin(), levels.end());
    return levels;
}

std::string_view to_string(MediumKind kind) {
    switch (kind) {
        case MediumKind::SingleSpin: return "single";
        case MediumKind::CoupledSpins: return "coupled";
        case MediumKind::Custom: return "custom";
    }
    return "unknown";
}

}  // namespace stirling
