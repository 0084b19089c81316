// generators.hpp
// The ten infinitesimal generators of sp(2,2) as quaternionic block
// matrices, and the K_{alpha beta} labelling
//   K_{4k} = X_k,  K_{04} = X_0,  K_{ki} = eps_{kij} Y_j,  K_{0k} = Z_k.

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ds4/gamma.hpp"

namespace ds4 {

enum class Generator { X1, X2, X3, X0, Y1, Y2, Y3, Z1, Z2, Z3 };

inline constexpr std::array<Generator, 10> kAllGenerators = {
    Generator::X1, Generator::X2, Generator::X3, Generator::X0, Generator::Y1,
    Generator::Y2, Generator::Y3, Generator::Z1, Generator::Z2, Generator::Z3};

inline std::string_view name(Generator g) {
    constexpr std::array<std::string_view, 10> names = {"X1", "X2", "X3", "X0", "Y1",
                                                        "Y2", "Y3", "Z1", "Z2", "Z3"};
    return names[static_cast<std::size_t>(g)];
}

inline Generator parse_generator(std::string_view s) {
    for (Generator g : kAllGenerators)
        if (name(g) == s) return g;
    throw std::invalid_argument("unknown generator label: " + std::string(s));
}

/// Levi-Civita symbol on {1,2,3}.
constexpr int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1)) ? 1 : -1;
}

/// X_k = 1/2 diag(e_k, -e_k), X_0 = 1/2 offdiag(1, 1),
/// Y_k = 1/2 diag(e_k, e_k),  Z_k = 1/2 offdiag(e_k, -e_k).
inline QMat2 generator_matrix(Generator g) {
    const auto idx = static_cast<int>(g);
    if (g == Generator::X0) return 0.5 * QMat2::offdiag(Quaternion::one(), Quaternion::one());
    if (idx <= 2) {
        const Quaternion e = Quaternion::basis(idx + 1);
        return 0.5 * QMat2::diag(e, -e);
    }
    if (idx <= 6) {
        const Quaternion e = Quaternion::basis(idx - 3);
        return 0.5 * QMat2::diag(e, e);
    }
    const Quaternion e = Quaternion::basis(idx - 6);
    return 0.5 * QMat2::offdiag(e, -e);
}

inline Generator x_generator(int k) { return static_cast<Generator>(k - 1); }
inline Generator y_generator(int k) { return static_cast<Generator>(k + 3); }
inline Generator z_generator(int k) { return static_cast<Generator>(k + 6); }

/// K_{alpha beta} in the quaternionic representation; antisymmetric in the
/// indices. Throws on alpha == beta or an index outside 0..4.
inline QMat2 k_generator_matrix(int alpha, int beta) {
    check_index(alpha);
    check_index(beta);
    if (alpha == beta) throw std::invalid_argument("K_{alpha beta} needs distinct indices");
    if (alpha > beta) return -k_generator_matrix(beta, alpha);
    if (alpha == 0 && beta == 4) return generator_matrix(Generator::X0);
    if (alpha == 0) return generator_matrix(z_generator(beta));
    if (beta == 4) return -generator_matrix(x_generator(alpha));  // K_{k4} = -K_{4k}
    const int j = 6 - alpha - beta;
    return static_cast<double>(levi_civita(alpha, beta, j)) * generator_matrix(y_generator(j));
}

/// The ten index pairs alpha < beta, in lexicographic order.
inline std::array<std::array<int, 2>, 10> index_pairs() {
    std::array<std::array<int, 2>, 10> out{};
    std::size_t n = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) out[n++] = {a, b};
    return out;
}

/// -(eta_{ar} K_{bd} + eta_{bd} K_{ar} - eta_{ad} K_{br} - eta_{br} K_{ad}),
/// the structure-constant right-hand side for any representation K.
template <class KFn>
auto bracket_rhs(KFn&& k, int a, int b, int r, int d) {
    using M = decltype(k(0, 1));
    auto term = [&](int coeff, int i, int j) { return coeff == 0 || i == j ? M{} : coeff * k(i, j); };
    return -(term(eta(a, r), b, d) + term(eta(b, d), a, r) - term(eta(a, d), b, r) - term(eta(b, r), a, d));
}

}  // namespace ds4
