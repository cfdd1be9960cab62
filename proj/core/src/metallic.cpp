#include "helixforge/metallic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace helixforge {

MetallicParams make_params(long long P) {
    if (P < 1)
        throw std::domain_error("make_params: P must be a positive integer, got " +
                                std::to_string(P));
    if (P > kMaxParam)
        throw std::domain_error("make_params: P^2 + 4 overflows for P = " +
                                std::to_string(P));
    MetallicParams out;
    out.P = P;
    out.D = P * P + 4;
    out.lambda1 = (static_cast<double>(P) + std::sqrt(static_cast<double>(out.D))) / 2.0;
    out.lambda2 = -1.0 / out.lambda1;
    return out;
}

double evaluation_horizon(const MetallicParams& params) {
    const double limit = std::log(std::numeric_limits<double>::max()) - 2.0;
    return limit / std::log(params.lambda1);
}

}  // namespace helixforge
