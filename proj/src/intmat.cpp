#include "fillings/intmat.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace fl {

std::int64_t det_bareiss(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_bareiss: matrix not square");

    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 v = (__int128)m[i][j] * m[k][k] - (__int128)m[i][k] * m[k][j];
                v /= prev;  // exact by Sylvester's identity
                if (v > std::numeric_limits<std::int64_t>::max() ||
                    v < std::numeric_limits<std::int64_t>::min())
                    throw std::overflow_error("det_bareiss: overflow");
                m[i][j] = (std::int64_t)v;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace fl
