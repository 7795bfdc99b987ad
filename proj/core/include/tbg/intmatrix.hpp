#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tbg/bigint.hpp"

namespace tbg {

/// Dense integer matrix, row-major. Small and exact; this is bookkeeping for
/// (4g+2)-dimensional lattice automorphisms, not numerical linear algebra.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Int> apply(std::span<const Int> v) const;
    IntMatrix transposed() const;

    bool operator==(const IntMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const;

    /// Canonical serialization, usable as a hash key in search state sets.
    std::string key() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

}  // namespace tbg
