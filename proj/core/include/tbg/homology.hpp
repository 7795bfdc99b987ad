#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tbg/bigint.hpp"
#include "tbg/errors.hpp"
#include "tbg/intmatrix.hpp"

namespace tbg {

/// Base genus g >= 1 of the surface factor of M = Sigma_g x T^2.
struct GenusContext {
    int g;

    explicit GenusContext(int genus) : g(genus) {
        if (genus < 1) throw DomainError("base genus must be a positive integer");
    }

    bool operator==(const GenusContext&) const = default;
};

/// One handle block (a_i, b_i, c_i, d_i) of a class, 1-based index i.
struct HandleComponent {
    int index;
    Int a, b, c, d;

    /// Self-pairing of the block under the hyperbolic form: 2(ab + cd).
    Int self_pairing() const { return 2 * (a * b + c * d); }
};

/// A second homology class of Sigma_g x T^2 in the fixed basis
///
///   T_{x_1 y}, T_{z_1 t}, T_{x_1 t}, (-T_{z_1 y}), ..., S, (-F),
///
/// stored as the coordinate vector (a_1, b_1, c_1, d_1, ..., a_g, b_g, c_g,
/// d_g, e, f) in Z^{4g+2}. Note that f is the coefficient of (-F), not of F.
/// Values are immutable after construction.
class ClassH2 {
public:
    ClassH2(GenusContext ctx, std::vector<Int> coords);

    static ClassH2 zero(const GenusContext& ctx);

    const GenusContext& context() const { return ctx_; }
    int genus() const { return ctx_.g; }
    std::size_t dim() const { return coords_.size(); }  // 4g+2

    /// Handle coordinates, 1-based handle index i in 1..g.
    const Int& a(int i) const { return coords_[slot(i, 0)]; }
    const Int& b(int i) const { return coords_[slot(i, 1)]; }
    const Int& c(int i) const { return coords_[slot(i, 2)]; }
    const Int& d(int i) const { return coords_[slot(i, 3)]; }
    const Int& e() const { return coords_[coords_.size() - 2]; }
    const Int& f() const { return coords_[coords_.size() - 1]; }

    const Int& operator[](std::size_t k) const { return coords_[k]; }
    const std::vector<Int>& coords() const { return coords_; }
    std::span<const Int> handle_coords() const {
        return std::span<const Int>(coords_.data(), coords_.size() - 2);
    }

    HandleComponent handle(int i) const;

    bool is_zero() const;

    ClassH2 operator+(const ClassH2& rhs) const;
    ClassH2 operator-(const ClassH2& rhs) const;
    ClassH2 operator-() const;
    friend ClassH2 operator*(const Int& k, const ClassH2& sigma);

    bool operator==(const ClassH2& rhs) const {
        return ctx_ == rhs.ctx_ && coords_ == rhs.coords_;
    }

    /// Compact display form "(a1,b1,c1,d1 | ... | e,f)".
    std::string str() const;

private:
    static std::size_t slot(int i, int offset) {
        return static_cast<std::size_t>(4 * (i - 1) + offset);
    }

    GenusContext ctx_;
    std::vector<Int> coords_;
};

/// Intersection pairing sigma . tau under Q = H^{(2g+1)}:
/// sum_i (a_i b~_i + b_i a~_i + c_i d~_i + d_i c~_i) + e f~ + f e~.
Int intersect(const ClassH2& sigma, const ClassH2& tau);

/// sigma . sigma = 2 sum_i (a_i b_i + c_i d_i) + 2ef. Always even.
Int self_intersection(const ClassH2& sigma);

/// sigma . F where F = -(-F) is the fiber class, i.e. -e.
/// Only |sigma . F| = |e| is ever consumed by the genus formulas; the sign is
/// a convention of the chosen orientation.
Int pair_with_F(const ClassH2& sigma);

/// gcd of all 4g+2 coordinates; 0 exactly for the zero class. Invariant under
/// every lattice automorphism.
Int divisibility(const ClassH2& sigma);

enum class BasisKind { Txy, Tzt, Txt, MinusTzy, S, MinusF };

/// Unit coordinate vector in the stated basis slot; i is the 1-based handle
/// index for the four tensor kinds and is ignored for S and MinusF.
ClassH2 basis_class(BasisKind kind, int i, const GenusContext& ctx);
ClassH2 basis_class(BasisKind kind, const GenusContext& ctx);

/// The (4g+2)x(4g+2) block matrix H^{(2g+1)} of the intersection form.
IntMatrix intersection_matrix(const GenusContext& ctx);

}  // namespace tbg
