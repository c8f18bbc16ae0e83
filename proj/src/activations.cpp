#include "posit/activations.hpp"

#include <cmath>

#include "posit/encode.hpp"

namespace posit {

PositBits fast_sigmoid(const PositBits& p) {
    if (p.config.es != 0) {
        throw std::domain_error("fast_sigmoid requires es=0, got " +
                                to_string(p.config));
    }
    return PositBits{((p.bits ^ p.config.nar_pattern()) & p.config.pattern_mask()) >> 2,
                     p.config};
}

PositBits exact_sigmoid(const PositBits& p) {
    if (p.is_nar()) return p;
    const double x = to_binary64(p);
    return from_binary64(1.0 / (1.0 + std::exp(-x)), p.config);
}

PositBits relu(const PositBits& p) {
    if (p.is_nar()) return p;
    return as_signed(p) > 0 ? p : PositBits{0, p.config};
}

}  // namespace posit
