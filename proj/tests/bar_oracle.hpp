#pragma once

// Self-contained bar-resolution oracle for ordinary group cohomology
// H^n(H; M) of a finite group H acting on M = F^d through per-element
// matrices. Deliberately built on nothing but multiplication tables and
// exact_linalg, so it can serve as an independent cross-check for the
// main pipeline's classical-reduction cases.

#include <cstddef>
#include <vector>

#include "twocoh/exact_linalg.hpp"

namespace bar_oracle {

// Index of (h_1, ..., h_n) in the codec with h_1 least significant.
inline std::size_t tuple_index(const std::vector<int>& hs, std::size_t order) {
    std::size_t idx = 0;
    for (std::size_t k = hs.size(); k-- > 0;) idx = idx * order + static_cast<std::size_t>(hs[k]);
    return idx;
}

inline std::vector<int> tuple_at(std::size_t idx, std::size_t n, std::size_t order) {
    std::vector<int> hs(n);
    for (std::size_t k = 0; k < n; ++k) {
        hs[k] = static_cast<int>(idx % order);
        idx /= order;
    }
    return hs;
}

// The homogeneous cochain differential C^n -> C^{n+1}:
//   (dw)(h_1,...,h_{n+1}) = h_1 . w(h_2,...,h_{n+1})
//                           + sum_k (-1)^k w(..., h_k h_{k+1}, ...)
//                           + (-1)^{n+1} w(h_1,...,h_n),
// returned as a matrix in the codec basis (one d-block per tuple).
inline twocoh::Matrix bar_differential(const std::vector<std::vector<int>>& mul,
                                       const std::vector<twocoh::Matrix>& action,
                                       std::size_t n) {
    const std::size_t order = mul.size();
    const twocoh::Field f = action.at(0).field();
    const std::size_t d = action.at(0).rows();
    std::size_t dom = 1, codom = 1;
    for (std::size_t k = 0; k < n; ++k) dom *= order;
    codom = dom * order;
    twocoh::Matrix m(f, codom * d, dom * d);
    const twocoh::Matrix id = twocoh::Matrix::identity(f, d);
    for (std::size_t out = 0; out < codom; ++out) {
        const std::vector<int> hs = tuple_at(out, n + 1, order);
        const auto add = [&](const std::vector<int>& src, const twocoh::Matrix& coeff, bool plus) {
            const std::size_t j = tuple_index(src, order);
            m.add_block(out * d, j * d, plus ? coeff : -coeff);
        };
        add({hs.begin() + 1, hs.end()}, action[static_cast<std::size_t>(hs[0])], true);
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<int> src;
            for (std::size_t t = 0; t < n + 1; ++t) {
                if (t == k) {
                    src.back() = mul[static_cast<std::size_t>(src.back())]
                                    [static_cast<std::size_t>(hs[t])];
                } else {
                    src.push_back(hs[t]);
                }
            }
            add(src, id, k % 2 == 0);
        }
        add({hs.begin(), hs.end() - 1}, id, (n + 1) % 2 == 0);
    }
    return m;
}

// The chain-level boundary F[H^n] -> F[H^{n-1}] with trivial coefficients:
//   b(h_1,...,h_n) = (h_2,...,h_n) + sum_k (-1)^k (...,h_k h_{k+1},...)
//                    + (-1)^n (h_1,...,h_{n-1}).
inline twocoh::Matrix bar_boundary(const std::vector<std::vector<int>>& mul,
                                   const twocoh::Field& f, std::size_t n) {
    const std::size_t order = mul.size();
    std::size_t dom = 1;
    for (std::size_t k = 0; k < n; ++k) dom *= order;
    const std::size_t codom = dom / order;
    twocoh::Matrix m(f, codom, dom);
    const twocoh::Scalar one = twocoh::Scalar::one(f);
    for (std::size_t in = 0; in < dom; ++in) {
        const std::vector<int> hs = tuple_at(in, n, order);
        const auto add = [&](const std::vector<int>& dst, bool plus) {
            const std::size_t i = tuple_index(dst, order);
            m.at(i, in) += plus ? one : -one;
        };
        add({hs.begin() + 1, hs.end()}, true);
        for (std::size_t k = 1; k + 1 <= n; ++k) {
            std::vector<int> dst;
            for (std::size_t t = 0; t < n; ++t) {
                if (t == k) {
                    dst.back() = mul[static_cast<std::size_t>(dst.back())]
                                    [static_cast<std::size_t>(hs[t])];
                } else {
                    dst.push_back(hs[t]);
                }
            }
            add(dst, k % 2 == 0);
        }
        add({hs.begin(), hs.end() - 1}, n % 2 == 0);
    }
    return m;
}

inline std::size_t bar_cohomology_dim(const std::vector<std::vector<int>>& mul,
                                      const std::vector<twocoh::Matrix>& action,
                                      std::size_t n) {
    const twocoh::Matrix dn = bar_differential(mul, action, n);
    std::vector<twocoh::Vec> image;
    if (n > 0) {
        const twocoh::Matrix dprev = bar_differential(mul, action, n - 1);
        for (std::size_t j = 0; j < dprev.cols(); ++j) image.push_back(dprev.col(j));
    }
    return twocoh::quotient_dim(twocoh::kernel_basis(dn), image);
}

}  // namespace bar_oracle
