#pragma once

#include "besse/rational.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace besse {

// Dense matrix of arbitrary-precision integers, row-major. Sized for desk
// scale inputs (dimensions up to a few dozen); no sparsity tricks.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Int> operator*(std::span<const Int> v) const;
    IntMatrix transposed() const;

    bool is_zero() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

// U*A*V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    // Diagonal of d, length min(rows, cols).
    std::vector<Int> diagonal() const;
};

// Deterministic Smith normal form: the pivot is always the smallest nonzero
// absolute value in the working submatrix, ties broken in row-major order.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Some integer solution x of A x = v, or nullopt when none exists. Throws
// std::invalid_argument on dimension mismatch.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, std::span<const Int> v);

// Rank of A over the two-element field.
int rank_mod2(const IntMatrix& a);

}  // namespace besse
