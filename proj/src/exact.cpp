#include "besse/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace besse {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::operator*(std::span<const Int> v) const {
    if (cols_ != static_cast<int>(v.size())) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    std::vector<Int> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> diag;
    int n = std::min(d.rows(), d.cols());
    diag.reserve(n);
    for (int i = 0; i < n; ++i) diag.push_back(d.at(i, i));
    return diag;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row(IntMatrix& m, int dst, int src, const Int& factor) {
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += factor * m.at(src, j);
}

void add_col(IntMatrix& m, int dst, int src, const Int& factor) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += factor * m.at(i, src);
}

void negate_row(IntMatrix& m, int i) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// Smallest nonzero |entry| of d in the submatrix starting at (s, s),
// row-major tie-break. Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, int s, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int i = s; i < d.rows(); ++i)
        for (int j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition s;
    s.u = IntMatrix::identity(a.rows());
    s.v = IntMatrix::identity(a.cols());
    s.d = a;
    IntMatrix& d = s.d;

    int n = std::min(a.rows(), a.cols());
    for (int step = 0; step < n; ++step) {
        int pr = step, pc = step;
        if (!find_pivot(d, step, pr, pc)) break;
        swap_rows(d, step, pr);
        swap_rows(s.u, step, pr);
        swap_cols(d, step, pc);
        swap_cols(s.v, step, pc);

        for (;;) {
            // Clear the pivot column, then the pivot row.
            bool reduced = true;
            for (int i = step + 1; i < d.rows(); ++i) {
                if (d.at(i, step) == 0) continue;
                Int q = floor_div(d.at(i, step), d.at(step, step));
                add_row(d, i, step, -q);
                add_row(s.u, i, step, -q);
                if (d.at(i, step) != 0) reduced = false;
            }
            for (int j = step + 1; j < d.cols(); ++j) {
                if (d.at(step, j) == 0) continue;
                Int q = floor_div(d.at(step, j), d.at(step, step));
                add_col(d, j, step, -q);
                add_col(s.v, j, step, -q);
                if (d.at(step, j) != 0) reduced = false;
            }
            if (!reduced) {
                // Residues remain; pull the smallest back onto the pivot.
                int rr = step, rc = step;
                find_pivot(d, step, rr, rc);
                swap_rows(d, step, rr);
                swap_rows(s.u, step, rr);
                swap_cols(d, step, rc);
                swap_cols(s.v, step, rc);
                continue;
            }
            // Pivot divides the rest of the submatrix, or a row mix is needed.
            bool divides = true;
            for (int i = step + 1; i < d.rows() && divides; ++i)
                for (int j = step + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % d.at(step, step) != 0) {
                        add_row(d, step, i, 1);
                        add_row(s.u, step, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d.at(step, step) < 0) {
            negate_row(d, step);
            negate_row(s.u, step);
        }
    }
    return s;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, std::span<const Int> v) {
    if (a.rows() != static_cast<int>(v.size())) throw std::invalid_argument("dimension mismatch in solve_integer");
    SmithDecomposition s = smith_normal_form(a);
    std::vector<Int> c = s.u * v;
    std::vector<Int> y(a.cols());
    int n = std::min(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        const Int d = i < n ? s.d.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    return s.v * std::span<const Int>(y);
}

int rank_mod2(const IntMatrix& a) {
    std::vector<std::vector<bool>> m(a.rows(), std::vector<bool>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m[i][j] = (a.at(i, j) % 2) != 0;
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < a.rows(); ++i)
            if (m[i][col]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = 0; i < a.rows(); ++i)
            if (i != rank && m[i][col])
                for (int j = col; j < a.cols(); ++j) m[i][j] = m[i][j] != m[rank][j];
        ++rank;
    }
    return rank;
}

}  // namespace besse
