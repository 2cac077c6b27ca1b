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

#include "catalyst/kernels.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "catalyst/errors.h"

namespace catalyst {

namespace {

void require_square(const GramMatrix &m, const char *kernel) {
    if (!m.is_square()) {
        throw DimensionError(std::string(kernel) + " needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
    if (m.rows() == 0) {
        throw DimensionError(std::string(kernel) + " needs dimension >= 1");
    }
}

// Expands along rows; `used` marks claimed columns, `sign` tracks inversions
// introduced so far (only meaningful when `signed_sum`).
Amplitude permutation_sum(const GramMatrix &m, size_t row, uint32_t used, bool signed_sum) {
    size_t n = m.rows();
    if (row == n) {
        return 1.0;
    }
    Amplitude total = 0.0;
    int inversions = 0;
    for (size_t c = 0; c < n; c++) {
        if (used & (1u << c)) {
            continue;
        }
        // Picking the (inversions)-th unused column contributes that many
        // inversions relative to the remaining columns.
        Amplitude term = m(row, c) * permutation_sum(m, row + 1, used | (1u << c), signed_sum);
        if (signed_sum && (inversions & 1)) {
            term = -term;
        }
        total += term;
        inversions++;
    }
    return total;
}

}  // namespace

GramMatrix::GramMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Amplitude{0.0}) {
}

GramMatrix GramMatrix::from_rows(const std::vector<std::vector<Amplitude>> &rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    GramMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw DimensionError("ragged rows in GramMatrix::from_rows");
        }
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Amplitude permanent_naive(const GramMatrix &m) {
    require_square(m, "permanent");
    if (m.rows() > 12) {
        throw DimensionError("naive permanent limited to n <= 12");
    }
    return permutation_sum(m, 0, 0, false);
}

Amplitude determinant_naive(const GramMatrix &m) {
    require_square(m, "determinant");
    if (m.rows() > 12) {
        throw DimensionError("naive determinant limited to n <= 12");
    }
    return permutation_sum(m, 0, 0, true);
}

Amplitude permanent_ryser(const GramMatrix &m) {
    require_square(m, "permanent");
    size_t n = m.rows();
    if (n >= 63) {
        throw DimensionError("Ryser permanent limited to n < 63");
    }
    std::vector<Amplitude> row_sums(n, Amplitude{0.0});
    Amplitude total = 0.0;
    uint64_t gray = 0;
    uint64_t subsets = uint64_t{1} << n;
    for (uint64_t k = 1; k < subsets; k++) {
        size_t col = static_cast<size_t>(std::countr_zero(k));
        uint64_t next = k ^ (k >> 1);
        bool added = (next >> col) & 1;
        gray = next;
        for (size_t r = 0; r < n; r++) {
            if (added) {
                row_sums[r] += m(r, col);
            } else {
                row_sums[r] -= m(r, col);
            }
        }
        Amplitude prod = 1.0;
        for (size_t r = 0; r < n; r++) {
            prod *= row_sums[r];
        }
        if (std::popcount(gray) % 2) {
            total -= prod;
        } else {
            total += prod;
        }
    }
    return (n % 2) ? -total : total;
}

Amplitude determinant_lu(const GramMatrix &m) {
    require_square(m, "determinant");
    size_t n = m.rows();
    GramMatrix a = m;
    Amplitude det = 1.0;
    for (size_t k = 0; k < n; k++) {
        size_t pivot = k;
        double best = std::abs(a(k, k));
        for (size_t r = k + 1; r < n; r++) {
            if (std::abs(a(r, k)) > best) {
                best = std::abs(a(r, k));
                pivot = r;
            }
        }
        if (best == 0.0) {
            return 0.0;
        }
        if (pivot != k) {
            for (size_t c = 0; c < n; c++) {
                std::swap(a(k, c), a(pivot, c));
            }
            det = -det;
        }
        det *= a(k, k);
        for (size_t r = k + 1; r < n; r++) {
            Amplitude factor = a(r, k) / a(k, k);
            for (size_t c = k + 1; c < n; c++) {
                a(r, c) -= factor * a(k, c);
            }
        }
    }
    return det;
}

Amplitude permanent(const GramMatrix &m) {
    require_square(m, "permanent");
    return m.rows() <= kNaiveKernelCutoff ? permanent_naive(m) : permanent_ryser(m);
}

namespace {

// Two identical fermion slots produce bitwise-identical Gram rows (and
// columns). The determinant is then exactly zero, but floating-point
// elimination leaves ~1e-16 residue that survives a square root.
bool has_repeated_line(const GramMatrix &m) {
    size_t n = m.rows();
    auto rows_equal = [&](size_t a, size_t b) {
        for (size_t k = 0; k < n; k++) {
            if (m(a, k) != m(b, k)) {
                return false;
            }
        }
        return true;
    };
    auto cols_equal = [&](size_t a, size_t b) {
        for (size_t k = 0; k < n; k++) {
            if (m(k, a) != m(k, b)) {
                return false;
            }
        }
        return true;
    };
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (rows_equal(a, b) || cols_equal(a, b)) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

Amplitude determinant(const GramMatrix &m) {
    require_square(m, "determinant");
    if (has_repeated_line(m)) {
        return 0.0;
    }
    return m.rows() <= kNaiveKernelCutoff ? determinant_naive(m) : determinant_lu(m);
}

Amplitude exchange_sum(const GramMatrix &m, Statistics stats) {
    return stats == Statistics::boson ? permanent(m) : determinant(m);
}

}  // namespace catalyst
