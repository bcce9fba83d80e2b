#include "fpl/coupling.hpp"

#include <cmath>
#include <string>

#include "fpl/errors.hpp"

namespace fpl {

double coeff_eta(int l, int m, int mu) {
    if (mu < -1 || mu > 1) throw DomainError("eta: mu must be -1, 0 or 1");
    const double dl = l;
    const double dm = m;
    const double up = (mu == 1) ? 1.0 : 0.0;
    const double down = (mu == -1) ? 1.0 : 0.0;
    const double num = (dl + (2.0 * up - 1.0) * dm + up) * (dl - (2.0 * down - 1.0) * dm + down);
    if (num == 0.0) return 0.0;
    const double den = std::ldexp((2.0 * dl - 1.0) * (2.0 * dl + 1.0), mu == 0 ? 0 : 1);
    const double radicand = num / den;
    if (radicand < 0.0)
        throw DomainError("eta: negative radicand for l=" + std::to_string(l) + ", m=" + std::to_string(m) +
                          ", mu=" + std::to_string(mu));
    return std::sqrt(radicand);
}

}  // namespace fpl
