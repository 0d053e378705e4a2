#include "fermibasis/series.hpp"

namespace fermibasis::exactmath {

TruncatedSeries<GaussianRational> z_of_u(int cap) {
    // z = (1 - zeta^2)/(1 + zeta^2) = -u/(2 + u) = sum_{k>=1} (-1)^k (u/2)^k
    TruncatedSeries<GaussianRational> s(SeriesVar::u, cap);
    GaussianRational c(1);
    GaussianRational minus_half(-1, 2);
    for (int k = 1; k <= cap; ++k) {
        c *= minus_half;
        s[k] = c;
    }
    return s;
}

TruncatedSeries<GaussianRational> u_of_z(int cap) {
    // u = -2z/(1 + z) = sum_{k>=1} (-1)^k 2 z^k
    TruncatedSeries<GaussianRational> s(SeriesVar::z, cap);
    GaussianRational c(2);
    for (int k = 1; k <= cap; ++k) {
        c = -c;
        s[k] = c;
    }
    return s;
}

}  // namespace fermibasis::exactmath
