// SPDX-License-Identifier: MIT
// Reference constructions built from 2x2 matrices, independent of the library's bit tricks.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace oracle {

using M = Eigen::MatrixXcd;
using C = std::complex<double>;

inline M letter(char c) {
    M m(2, 2);
    switch (c) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m << 1, 0, 0, 1; break;
    }
    return m;
}

inline M kron(const M& a, const M& b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// letters[q] acts on qubit q, which is bit q of the basis index.
inline M pauli(const std::string& letters) {
    M m = M::Identity(1, 1);
    for (char c : letters) m = kron(letter(c), m);
    return m;
}

// Jordan-Wigner annihilator on mode q of n: Z on lower modes, (X + iY)/2 on q.
inline M annihilator(int n, int q) {
    M lower(2, 2);
    lower << 0, 1, 0, 0;
    M m = M::Identity(1, 1);
    for (int k = 0; k < n; ++k) m = kron(k < q ? letter('Z') : (k == q ? lower : letter('I')), m);
    return m;
}

}  // namespace oracle
