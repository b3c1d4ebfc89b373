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

#pragma once

#include <vector>

#include "relarm/matrix.hpp"

namespace relarm {

/// Eigenpairs of a real symmetric matrix in the order the solver leaves them
/// on the diagonal (unsorted). Column k of `vectors` has unit l2 norm.
struct SymmetricEigen {
    std::vector<double> values;
    Matrix vectors;
    int sweeps = 0;
};

struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm is at most tolerance * ||A||_F.
    double tolerance = 1e-12;
    int max_sweeps = 100;
};

/// Cyclic Jacobi rotations. Throws Error(Numerical) if the sweep cap is hit.
SymmetricEigen jacobi_eigen(const Matrix& symmetric, const JacobiOptions& options = {});

} // namespace relarm
