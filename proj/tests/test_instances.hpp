#pragma once

// Small crossed modules and 2-representations shared by the unit tests.

#include <cassert>
#include <map>
#include <numeric>
#include <vector>

#include "twocoh/group_core.hpp"
#include "twocoh/rep_core.hpp"

namespace test_instances {

using twocoh::CrossedModule;
using twocoh::Field;
using twocoh::FiniteGroup;
using twocoh::Matrix;
using twocoh::TwoRepresentation;
using twocoh::TwoVectorSpace;

/// G = H = k, i = id, action by conjugation g^h = h^{-1} g h. Always a valid
/// crossed module; for abelian k the action is trivial.
inline CrossedModule conjugation_module(const FiniteGroup& k) {
    const long n = k.order();
    std::vector<long> i_map(static_cast<std::size_t>(n));
    std::vector<std::vector<long>> action(static_cast<std::size_t>(n),
                                          std::vector<long>(static_cast<std::size_t>(n)));
    for (long g = 0; g < n; ++g) {
        i_map[g] = g;
        for (long h = 0; h < n; ++h) action[g][h] = k.mul(k.mul(k.inv(h), g), h);
    }
    return CrossedModule(k, k, std::move(i_map), std::move(action));
}

/// G = H = k, i = id, trivial action. Violates the Peiffer identity exactly
/// when k is nonabelian.
inline CrossedModule trivial_action_module(const FiniteGroup& k) {
    const long n = k.order();
    std::vector<long> i_map(static_cast<std::size_t>(n));
    std::vector<std::vector<long>> action(static_cast<std::size_t>(n),
                                          std::vector<long>(static_cast<std::size_t>(n)));
    for (long g = 0; g < n; ++g) {
        i_map[g] = g;
        for (long h = 0; h < n; ++h) action[g][h] = g;
    }
    return CrossedModule(k, k, std::move(i_map), std::move(action));
}

/// G = Z/2 -> H = Z/4 doubling, trivial action. Valid; i is injective but not
/// surjective.
inline CrossedModule z2_into_z4_module() {
    FiniteGroup g2 = FiniteGroup::cyclic(2), h4 = FiniteGroup::cyclic(4);
    std::vector<long> i_map{0, 2};
    std::vector<std::vector<long>> action{{0, 0, 0, 0}, {1, 1, 1, 1}};
    return CrossedModule(std::move(g2), std::move(h4), std::move(i_map), std::move(action));
}

/// G = Z/n -> H = 1. Valid since Z/n is abelian.
inline CrossedModule zn_to_trivial_module(long n) {
    FiniteGroup g = FiniteGroup::cyclic(n), h = FiniteGroup::trivial();
    std::vector<long> i_map(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<long>> action(static_cast<std::size_t>(n), std::vector<long>(1));
    for (long x = 0; x < n; ++x) action[x][0] = x;
    return CrossedModule(std::move(g), std::move(h), std::move(i_map), std::move(action));
}

/// G = 1 -> H = k: a plain group in crossed-module clothing.
inline CrossedModule group_only_module(const FiniteGroup& k) {
    std::vector<long> i_map{0};
    std::vector<std::vector<long>> action{std::vector<long>(static_cast<std::size_t>(k.order()), 0)};
    return CrossedModule(FiniteGroup::trivial(), k, std::move(i_map), std::move(action));
}

/// rho1 = 0, rho00 = rho01 = I on the given 2-vector space.
inline TwoRepresentation trivial_rep(const CrossedModule& xm, TwoVectorSpace vs) {
    const auto nh = static_cast<std::size_t>(xm.H().order());
    const auto ng = static_cast<std::size_t>(xm.G().order());
    std::vector<Matrix> r00(nh, Matrix::identity(vs.field(), static_cast<std::size_t>(vs.dim_v())));
    std::vector<Matrix> r01(nh, Matrix::identity(vs.field(), static_cast<std::size_t>(vs.dim_w())));
    std::vector<Matrix> r1(
        ng, Matrix(vs.field(), static_cast<std::size_t>(vs.dim_w()),
                   static_cast<std::size_t>(vs.dim_v())));
    return TwoRepresentation(xm, std::move(vs), std::move(r00), std::move(r01), std::move(r1));
}

/// For a group k with an ordinary representation R: the 2-representation of
/// the conjugation module of k on (V -> V, phi = id) with rho00 = rho01 = R,
/// rho1(g) = R(g) - I.
inline TwoRepresentation conjugation_action_rep(const FiniteGroup& k, std::vector<Matrix> R) {
    const std::size_t dim = R.at(0).rows();
    const Field f = R.at(0).field();
    TwoVectorSpace vs{Matrix::identity(f, dim)};
    std::vector<Matrix> r1;
    for (const Matrix& m : R) r1.push_back(m - Matrix::identity(f, dim));
    return TwoRepresentation(conjugation_module(k), std::move(vs), R, R, std::move(r1));
}

/// The 2-dimensional representation of S3 on the sum-zero subspace of the
/// permutation module, in the element order of FiniteGroup::symmetric(3).
/// Rebuilds the permutation closure independently and asserts it matches the
/// group's multiplication table.
inline std::vector<Matrix> s3_standard_matrices(const Field& f) {
    auto compose = [](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> c(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[static_cast<std::size_t>(a[x])];
        return c;
    };
    std::vector<long> id{0, 1, 2}, transposition{1, 0, 2}, cycle{1, 2, 0};
    std::vector<std::vector<long>> elems{id};
    std::map<std::vector<long>, long> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (const auto& gen : {transposition, cycle}) {
            auto next = compose(elems[head], gen);
            if (index.emplace(next, static_cast<long>(elems.size())).second)
                elems.push_back(std::move(next));
        }
    assert(elems.size() == 6);
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (long a = 0; a < 6; ++a)
        for (long b = 0; b < 6; ++b)
            assert(s3.mul(a, b) == index.at(compose(elems[a], elems[b])));

    // Basis w1 = e0 - e2, w2 = e1 - e2 of the sum-zero subspace; the matrix of
    // e_j -> e_{sigma^{-1}(j)} restricted to it (so that R is a homomorphism
    // for the apply-left-then-right composition convention).
    std::vector<Matrix> out;
    for (const auto& sigma : elems) {
        std::vector<long> sigma_inv(3);
        for (long x = 0; x < 3; ++x) sigma_inv[static_cast<std::size_t>(sigma[x])] = x;
        Matrix m(f, 2, 2);
        const long basis[2][3] = {{1, 0, -1}, {0, 1, -1}};
        for (std::size_t col = 0; col < 2; ++col) {
            long image[3];
            for (long j = 0; j < 3; ++j)
                image[sigma_inv[static_cast<std::size_t>(j)]] = basis[col][j];
            m.at(0, col) = twocoh::Scalar::of(f, image[0]);
            m.at(1, col) = twocoh::Scalar::of(f, image[1]);
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// Conjugation module of S3 acting on the standard representation over Q.
inline TwoRepresentation s3_standard_rep() {
    return conjugation_action_rep(FiniteGroup::symmetric(3),
                                  s3_standard_matrices(Field::rationals()));
}

/// Conjugation module of Z/2 with the sign representation over Q:
/// phi = id on Q^1, rho00(1) = rho01(1) = (-1), rho1(1) = (-2).
inline TwoRepresentation z2_sign_rep_q() {
    const Field f = Field::rationals();
    std::vector<Matrix> R{Matrix::identity(f, 1), Matrix::from_rows(f, {{-1}})};
    return conjugation_action_rep(FiniteGroup::cyclic(2), std::move(R));
}

/// Same shape over F_3: rho00(1) = rho01(1) = (2) = (-1), rho1(1) = (1).
inline TwoRepresentation z2_sign_rep_f3() {
    const Field f = Field::prime(3);
    std::vector<Matrix> R{Matrix::identity(f, 1), Matrix::from_rows(f, {{2}})};
    return conjugation_action_rep(FiniteGroup::cyclic(2), std::move(R));
}

/// Conjugation module of Z/2 over F_3 on phi = [[1],[0]] : W = F_3 -> V = F_3^2
/// with rho00(1) = [[2,1],[0,1]], rho01(1) = (2), rho1(1) = [1,1]. The two
/// object representations are genuinely different matrices and phi is neither
/// zero nor an isomorphism, which makes this the least degenerate tiny
/// instance for grid checks.
inline TwoRepresentation z2_mixed_rep_f3() {
    const Field f = Field::prime(3);
    CrossedModule xm = conjugation_module(FiniteGroup::cyclic(2));
    TwoVectorSpace vs{Matrix::from_rows(f, {{1}, {0}})};
    std::vector<Matrix> r00{Matrix::identity(f, 2), Matrix::from_rows(f, {{2, 1}, {0, 1}})};
    std::vector<Matrix> r01{Matrix::identity(f, 1), Matrix::from_rows(f, {{2}})};
    std::vector<Matrix> r1{Matrix(f, 1, 2), Matrix::from_rows(f, {{1, 1}})};
    return TwoRepresentation(std::move(xm), std::move(vs), std::move(r00), std::move(r01),
                             std::move(r1));
}

/// W = 0, V carrying an ordinary representation of H, G = 1.
inline TwoRepresentation w0_rep(const FiniteGroup& h, std::vector<Matrix> R) {
    CrossedModule xm = group_only_module(h);
    const Field f = R.at(0).field();
    const auto d = R.at(0).rows();
    TwoVectorSpace vs{Matrix(f, d, 0)};
    std::vector<Matrix> r01(static_cast<std::size_t>(h.order()), Matrix::identity(f, 0));
    std::vector<Matrix> r1{Matrix(f, 0, d)};
    return TwoRepresentation(std::move(xm), std::move(vs), std::move(R), std::move(r01),
                             std::move(r1));
}

/// W = 0, V = 1-dimensional sign representation of H = Z/2, G = 1.
inline TwoRepresentation w0_sign_rep(const Field& f) {
    return w0_rep(FiniteGroup::cyclic(2),
                  {Matrix::identity(f, 1), Matrix::from_rows(f, {{-1}})});
}

}  // namespace test_instances
