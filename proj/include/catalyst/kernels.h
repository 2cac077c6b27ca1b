// Copyright 2026 The Catalyst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CATALYST_KERNELS_H
#define CATALYST_KERNELS_H

#include <cstddef>
#include <vector>

#include "catalyst/basis.h"

namespace catalyst {

/// Dense complex matrix of one-particle overlaps, entry (i, j) = <bra_i|ket_j>.
/// Stored row-major. Shape is not forced square so that kernels can reject
/// bad input with a DimensionError instead of at construction.
class GramMatrix {
   public:
    GramMatrix() = default;
    GramMatrix(size_t rows, size_t cols);
    static GramMatrix square(size_t n) {
        return GramMatrix(n, n);
    }
    static GramMatrix from_rows(const std::vector<std::vector<Amplitude>> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    Amplitude &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Amplitude &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Amplitude> data_;
};

/// Sizes at or below this use the direct permutation sum.
inline constexpr size_t kNaiveKernelCutoff = 5;

/// Sum over permutations of prod_k m[k, P_k]. Dispatches on kNaiveKernelCutoff.
Amplitude permanent(const GramMatrix &m);
/// Signed permutation sum. Dispatches on kNaiveKernelCutoff.
Amplitude determinant(const GramMatrix &m);

// Individual routes, exposed for testing and benchmarking.
Amplitude permanent_naive(const GramMatrix &m);
/// Ryser inclusion-exclusion walked in Gray-code order, O(2^n n).
Amplitude permanent_ryser(const GramMatrix &m);
Amplitude determinant_naive(const GramMatrix &m);
/// Gaussian elimination with partial pivoting.
Amplitude determinant_lu(const GramMatrix &m);

/// permanent for eta = +1, determinant for eta = -1.
Amplitude exchange_sum(const GramMatrix &m, Statistics stats);

}  // namespace catalyst

#endif
