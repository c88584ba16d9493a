#include "ftq/kernel.hpp"

#include <cassert>

namespace ftq::kernel {

namespace {

struct SiteStrides {
    std::size_t outer;   // number of blocks above the site digit
    std::size_t stride;  // 5^(digits below the site)
};

SiteStrides strides_for(int n, int site) {
    SiteStrides s;
    s.stride = pow5(n - 1 - site);
    s.outer = pow5(site);
    return s;
}

}  // namespace

void apply_qubit_gate(std::span<cplx> buf, int n, int site, const cplx u[2][2]) {
    const auto [outer, stride] = strides_for(n, site);
    const std::size_t block = stride * kLevels;
    for (std::size_t o = 0; o < outer; ++o) {
        cplx* base = buf.data() + o * block;
        cplx* p0 = base;           // level q0 plane
        cplx* p1 = base + stride;  // level q1 plane
        for (std::size_t i = 0; i < stride; ++i) {
            const cplx a0 = p0[i];
            const cplx a1 = p1[i];
            p0[i] = u[0][0] * a0 + u[0][1] * a1;
            p1[i] = u[1][0] * a0 + u[1][1] * a1;
        }
    }
}

void apply_level_diag(std::span<cplx> buf, int n, int site, const cplx d[kLevels]) {
    const auto [outer, stride] = strides_for(n, site);
    const std::size_t block = stride * kLevels;
    for (std::size_t o = 0; o < outer; ++o) {
        cplx* base = buf.data() + o * block;
        for (int lv = 0; lv < kLevels; ++lv) {
            if (d[lv] == cplx(1.0, 0.0)) continue;
            cplx* plane = base + static_cast<std::size_t>(lv) * stride;
            for (std::size_t i = 0; i < stride; ++i) plane[i] *= d[lv];
        }
    }
}

void apply_czz_phase(std::span<cplx> buf, int n, int site_a, int site_b) {
    if (site_a > site_b) std::swap(site_a, site_b);
    const std::size_t stride_a = pow5(n - 1 - site_a);
    const std::size_t stride_b = pow5(n - 1 - site_b);
    const std::size_t outer_a = pow5(site_a);
    const std::size_t mid = stride_a / (stride_b * kLevels);  // blocks between a and b digits
    for (std::size_t oa = 0; oa < outer_a; ++oa) {
        cplx* base_a = buf.data() + oa * stride_a * kLevels + stride_a;  // a at q1
        for (std::size_t m = 0; m < mid; ++m) {
            cplx* base_b = base_a + m * stride_b * kLevels + stride_b;  // b at q1
            for (std::size_t i = 0; i < stride_b; ++i) base_b[i] = -base_b[i];
        }
    }
}

void accumulate_jump(std::span<cplx> dst, std::span<const cplx> src, int n, int site,
                     int to_level, int from_level, cplx coeff) {
    assert(dst.data() != src.data());
    const auto [outer, stride] = strides_for(n, site);
    const std::size_t block = stride * kLevels;
    for (std::size_t o = 0; o < outer; ++o) {
        const cplx* from = src.data() + o * block + static_cast<std::size_t>(from_level) * stride;
        cplx* to = dst.data() + o * block + static_cast<std::size_t>(to_level) * stride;
        for (std::size_t i = 0; i < stride; ++i) to[i] += coeff * from[i];
    }
}

void apply_relabel(std::span<cplx> buf, int n, std::span<const int> perm) {
    // Fast path: a transposition swaps amplitudes pairwise in place.
    {
        int a = -1, b = -1;
        bool transposition = true;
        for (int s = 0; s < n; ++s) {
            if (perm[static_cast<std::size_t>(s)] == s) continue;
            if (a < 0) {
                a = s;
            } else if (b < 0) {
                b = s;
            } else {
                transposition = false;
                break;
            }
        }
        if (a < 0) return;  // identity
        if (transposition && b >= 0 && perm[static_cast<std::size_t>(a)] == b && perm[static_cast<std::size_t>(b)] == a) {
            const std::size_t stride_a = pow5(n - 1 - a);
            const std::size_t stride_b = pow5(n - 1 - b);
            const std::size_t dim = pow5(n);
            for (std::size_t idx = 0; idx < dim; ++idx) {
                const int da = static_cast<int>((idx / stride_a) % kLevels);
                const int db = static_cast<int>((idx / stride_b) % kLevels);
                if (da < db) {
                    const std::size_t partner = idx + static_cast<std::size_t>(db - da) * stride_a - static_cast<std::size_t>(db - da) * stride_b;
                    std::swap(buf[idx], buf[partner]);
                }
            }
            return;
        }
    }

    const std::size_t dim = pow5(n);
    std::vector<cplx> scratch(buf.begin(), buf.end());
    std::vector<std::size_t> strides(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) strides[static_cast<std::size_t>(s)] = pow5(n - 1 - s);
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t rem = idx;
        for (int s = 0; s < n; ++s) {
            digits[static_cast<std::size_t>(s)] = static_cast<int>(rem / strides[static_cast<std::size_t>(s)]);
            rem %= strides[static_cast<std::size_t>(s)];
        }
        // New site i carries the former content of site perm[i], so the
        // source configuration places digit i at site perm[i].
        std::size_t src = 0;
        for (int s = 0; s < n; ++s) {
            src += static_cast<std::size_t>(digits[static_cast<std::size_t>(s)]) * strides[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
        }
        buf[idx] = scratch[src];
    }
}

double level_population(std::span<const cplx> buf, int n, int site, int level) {
    const auto [outer, stride] = strides_for(n, site);
    const std::size_t block = stride * kLevels;
    double total = 0.0;
    for (std::size_t o = 0; o < outer; ++o) {
        const cplx* plane = buf.data() + o * block + static_cast<std::size_t>(level) * stride;
        for (std::size_t i = 0; i < stride; ++i) total += std::norm(plane[i]);
    }
    return total;
}

}  // namespace ftq::kernel
