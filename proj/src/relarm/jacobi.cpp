//
// Copyright (C) 2026 The relarm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "relarm/jacobi.hpp"

#include <cmath>

namespace relarm {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.cols(); ++q)
            s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data())
        s += v * v;
    return std::sqrt(s);
}

// Zeroes a(p,q) with the rotation J(p,p)=J(q,q)=c, J(p,q)=s, J(q,p)=-s:
// A <- J^T A J, V <- V J.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150)
        t = 0.5 / theta;
    else
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

} // namespace

SymmetricEigen jacobi_eigen(const Matrix& symmetric, const JacobiOptions& options) {
    require(symmetric.rows() == symmetric.cols(), "jacobi_eigen: matrix must be square");
    const std::size_t n = symmetric.rows();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            require(symmetric(p, q) == symmetric(q, p), "jacobi_eigen: matrix must be symmetric");

    Matrix a = symmetric;
    SymmetricEigen out;
    out.vectors = Matrix::identity(n);
    const double limit = options.tolerance * frobenius_norm(a);

    for (;;) {
        if (off_diagonal_norm(a) <= limit)
            break;
        if (out.sweeps == options.max_sweeps)
            fail(ErrorKind::Numerical, "Jacobi eigensolver did not converge within " +
                                           std::to_string(options.max_sweeps) + " sweeps");
        ++out.sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0)
                    rotate(a, out.vectors, p, q);
    }
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        out.values[k] = a(k, k);
    return out;
}

} // namespace relarm
