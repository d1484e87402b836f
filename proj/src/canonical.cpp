#include "tonal/canonical.hpp"

#include <stdexcept>
#include <string>

namespace tonal {

namespace {

void check_size(const CanonicalSize& s) {
    if (s.r < 2 || s.r > s.n - 1)
        throw std::invalid_argument("canonical size needs 2 <= r <= n-1");
    if (s.x != 2 * s.r - 1 || s.y != 2 * s.n - 1)
        throw std::invalid_argument("canonical size has inconsistent Pell variables");
    if (s.y * s.y - 2 * s.x * s.x != -1)
        throw std::invalid_argument("canonical size does not solve y^2 - 2x^2 = -1");
    if (s.r * (s.r - 1) * 2 != s.n * (s.n - 1))
        throw std::invalid_argument("canonical size does not balance the colour classes");
}

}  // namespace

std::vector<CanonicalSize> canonical_sizes(long long limit) {
    std::vector<CanonicalSize> out;
    // Fundamental solution after the degenerate (y,x) = (1,1).
    long long y = 7, x = 5;
    while ((y + 1) / 2 <= limit) {
        CanonicalSize s{(y + 1) / 2, (x + 1) / 2, x, y};
        check_size(s);
        out.push_back(s);
        long long ny = 3 * y + 4 * x;
        long long nx = 2 * y + 3 * x;
        y = ny;
        x = nx;
    }
    return out;
}

std::optional<CanonicalSize> canonical_size_for(long long n) {
    for (const CanonicalSize& s : canonical_sizes(n))
        if (s.n == n) return s;
    return std::nullopt;
}

ColouredHost canonical_colouring(const CanonicalSize& size) {
    check_size(size);
    std::vector<Edge> red;
    red.reserve(std::size_t(size.r) * (size.r - 1) / 2);
    for (int u = 0; u < size.r; ++u)
        for (int v = u + 1; v < size.r; ++v) red.push_back({u, v});
    return ColouredHost(int(size.n), red);
}

ObstructionReport verify_obstructions(const ColouredHost& host) {
    const int n = host.order();
    bool p4 = false, k3 = false;

#pragma omp parallel for schedule(dynamic) reduction(|| : p4, k3)
    for (int i = 0; i < n; ++i) {
        Bitset64 scratch(n);
        for (int j = i + 1; j < n; ++j) {
            // Triangles {i,j,k} with exactly two red edges: if ij is red,
            // exactly one of ik, jk must be red; if ij is blue, both must be.
            if (host.is_red(i, j))
                scratch.assign_xor(host.red_row(i), host.red_row(j));
            else
                scratch.assign_and(host.red_row(i), host.red_row(j));
            scratch.reset(i);
            scratch.reset(j);
            if (scratch.any()) k3 = true;

            // Paths a-i-j-d with ai red, ij blue, jd red, all four distinct.
            if (!host.is_red(i, j)) {
                Bitset64 ra = host.red_row(i);
                ra.reset(j);
                Bitset64 rd = host.red_row(j);
                rd.reset(i);
                if (ra.any() && rd.any() && !(ra == rd && ra.count() == 1)) p4 = true;
            }
        }
    }
    return {p4, k3};
}

}  // namespace tonal
