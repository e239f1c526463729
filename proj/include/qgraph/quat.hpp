#ifndef QGRAPH_QUAT_HPP
#define QGRAPH_QUAT_HPP

#include <array>

namespace qgraph {

// Quaternion with exact integer coefficients over the basis (1, i, j, k),
// Hamilton conventions: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
struct Quat {
    long long a = 0, b = 0, c = 0, d = 0; // a*1 + b*i + c*j + d*k

    static Quat one() { return {1, 0, 0, 0}; }

    std::array<long long, 4> coeffs() const { return {a, b, c, d}; }

    bool operator==(const Quat&) const = default;

    Quat operator+(const Quat& q) const { return {a + q.a, b + q.b, c + q.c, d + q.d}; }
    Quat operator-() const { return {-a, -b, -c, -d}; }

    long long norm2() const { return a * a + b * b + c * c + d * d; }
};

inline Quat quat_mul(const Quat& p, const Quat& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

} // namespace qgraph

#endif
