#include "tbg/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace tbg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::logic_error("matrix shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    Int acc;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (sign(aik) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                acc = aik * rhs.at(k, j);
                out.at(i, j) += acc;
            }
        }
    }
    return out;
}

std::vector<Int> IntMatrix::apply(std::span<const Int> v) const {
    if (v.size() != cols_) throw std::logic_error("matrix/vector shape mismatch");
    std::vector<Int> out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Int& aij = at(i, j);
            if (sign(aij) != 0) acc += aij * v[j];
        }
        out[i] = acc;
    }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;

    // Bareiss fraction-free elimination; every division below is exact.
    IntMatrix w(*this);
    Int denom = 1;
    int sgn_acc = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sign(w.at(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sign(w.at(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sgn_acc = -sgn_acc;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = exact_div(num, denom);
            }
            w.at(i, k) = 0;
        }
        denom = w.at(k, k);
    }
    Int det = w.at(n - 1, n - 1);
    return sgn_acc > 0 ? det : Int(-det);
}

std::string IntMatrix::key() const {
    std::string s;
    s.reserve(data_.size() * 3);
    for (const Int& x : data_) {
        s += x.get_str();
        s += ';';
    }
    return s;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).get_str();
        }
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

}  // namespace tbg
