#include "otg/random.hpp"

#include <stdexcept>

namespace otg {

double RandomSource::uniform(double a, double b) {
    if (a > b) throw std::invalid_argument("uniform: empty interval (a > b)");
    // 53-bit mantissa mapping, u in [0, 1)
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
}

} // namespace otg
