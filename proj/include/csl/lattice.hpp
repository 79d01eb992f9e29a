#pragma once

#include "csl/matrix.hpp"

#include <optional>

namespace csl {

/// Full-rank lattice in Q^d, held as its canonical rational Hermite basis
/// (columns). Two lattices are equal iff their bases are equal.
class RationalLattice {
public:
    RationalLattice() = default;
    /// Lattice generated by the columns; needs rank d. Throws DomainError.
    explicit RationalLattice(const RationalMatrix& generators);

    static RationalLattice integer(std::size_t dim);

    std::size_t dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }

    /// Volume of a fundamental cell (|det| of the basis).
    Rational covolume() const;

    std::optional<IntVector> coordinates(const RationalVector& v) const;
    bool contains(const RationalVector& v) const { return coordinates(v).has_value(); }
    bool contains(const RationalLattice& sub) const;

    /// Canonical representative of v + L: coordinate i lies in [0, H(i,i)).
    RationalVector reduce(const RationalVector& v) const;

    RationalLattice dual() const;
    RationalLattice transformed(const RationalMatrix& m) const;
    RationalLattice scaled(const Rational& s) const;

    friend bool operator==(const RationalLattice& a, const RationalLattice& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const RationalLattice& a, const RationalLattice& b) { return !(a == b); }

private:
    RationalMatrix basis_;
};

RationalLattice lattice_sum(const RationalLattice& a, const RationalLattice& b);
RationalLattice lattice_intersect(const RationalLattice& a, const RationalLattice& b);

/// [super : sub]; throws DomainError unless sub is a sublattice of super.
Rational sublattice_index(const RationalLattice& super, const RationalLattice& sub);

/// Coset representative + sublattice, with the representative reduced.
class CosetLattice {
public:
    CosetLattice() = default;
    CosetLattice(RationalVector representative, RationalLattice sublattice);

    const RationalVector& representative() const { return representative_; }
    const RationalLattice& sublattice() const { return sublattice_; }
    bool contains(const RationalVector& v) const;

    friend bool operator==(const CosetLattice& a, const CosetLattice& b)
    {
        return a.sublattice_ == b.sublattice_ && a.representative_ == b.representative_;
    }
    friend bool operator!=(const CosetLattice& a, const CosetLattice& b) { return !(a == b); }
    friend bool operator<(const CosetLattice& a, const CosetLattice& b);

private:
    RationalVector representative_;
    RationalLattice sublattice_;
};

/// Integer vectors a, b with v = A a + B b (columns of A and B), if any.
struct SumDecomposition {
    IntVector first, second;
};
std::optional<SumDecomposition> decompose_in_sum(const RationalMatrix& a, const RationalMatrix& b,
                                                 const RationalVector& v);

}  // namespace csl
