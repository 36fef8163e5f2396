#pragma once

#include "fuzzysphere/linalg.hpp"

#include <array>

namespace testsupport {

using fsph::Complex;
using fsph::Matrix;

inline const std::array<Matrix, 3>& paulis() {
    static const std::array<Matrix, 3> s = [] {
        std::array<Matrix, 3> p;
        p[0] = Matrix{{0, 1}, {1, 0}};
        p[1] = Matrix{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
        p[2] = Matrix{{1, 0}, {0, -1}};
        return p;
    }();
    return s;
}

inline int epsilon(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return (j - i + 3) % 3 == 1 ? 1 : -1;
}

}  // namespace testsupport
