#pragma once

#include <cmath>

namespace apery {

template <class Term>
Real alternating_sum(Term term, int digits) {
    // n terms give relative error about 5.83^-n
    int n = static_cast<int>(std::ceil(1.31 * (digits + 5))) + 2;
    Real d = pow(Real(3) + sqrt(Real(8)), static_cast<long>(n));
    d = (d + Real(1) / d) / 2;
    Real b(-1);
    Real c = -d;
    Real s(0);
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * term(k);
        b = b * static_cast<long>(k + n) * static_cast<long>(k - n);
        b /= static_cast<long>(k + 1);
        b /= static_cast<long>(2 * k + 1);
        b *= 2;
    }
    return s / d;
}

}  // namespace apery
