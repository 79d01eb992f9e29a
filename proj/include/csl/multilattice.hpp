#pragma once

#include "csl/lattice.hpp"

#include <utility>
#include <vector>

namespace csl {

/// x + L with x reduced modulo L.
class ShiftedLattice {
public:
    ShiftedLattice(RationalLattice lattice, const RationalVector& shift);

    const RationalLattice& lattice() const { return lattice_; }
    const RationalVector& shift() const { return shift_; }

private:
    RationalLattice lattice_;
    RationalVector shift_;
};

/// Union of x_k + L for k < m, with x_0 = 0 and the x_k distinct modulo L.
class Multilattice {
public:
    Multilattice(RationalLattice lattice, std::vector<RationalVector> shifts);

    const RationalLattice& lattice() const { return lattice_; }
    const std::vector<RationalVector>& shifts() const { return shifts_; }
    std::size_t size() const { return shifts_.size(); }
    bool contains(const RationalVector& v) const;

private:
    RationalLattice lattice_;
    std::vector<RationalVector> shifts_;
};

/// x -> v + R x with R exactly orthogonal.
class AffineIsometry {
public:
    explicit AffineIsometry(RationalMatrix linear);
    AffineIsometry(RationalMatrix linear, RationalVector translation);

    const RationalMatrix& linear() const { return linear_; }
    const RationalVector& translation() const { return translation_; }

    RationalVector apply(const RationalVector& x) const;
    AffineIsometry inverse() const;
    /// (*this) after `other`.
    AffineIsometry after(const AffineIsometry& other) const;

private:
    RationalMatrix linear_;
    RationalVector translation_;
};

/// L ∩ R L; cosets are disjoint and sorted, `pairs` lists the (j, k) with
/// (x_k + L) ∩ R (x_j + L) nonempty, and index = m * [L : L ∩ R L] / |pairs|.
struct CsmlDescription {
    std::vector<CosetLattice> cosets;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    Rational index;
};

/// Coincidence site lattice L ∩ R L. Every rational orthogonal R is a
/// coincidence isometry of a rational lattice.
RationalLattice csl(const RationalLattice& l, const RationalMatrix& r);
/// L + R L, the dual of the CSL of the dual lattice.
RationalLattice dsc(const RationalLattice& l, const RationalMatrix& r);
Rational coincidence_index(const RationalLattice& l, const RationalMatrix& r);

bool is_affine_coincidence(const RationalLattice& l, const AffineIsometry& iso);
/// L ∩ (v, R) L as a coset of L ∩ R L; throws DomainError for non-coincidences.
CosetLattice acsl(const RationalLattice& l, const AffineIsometry& iso);

/// (x + L) ∩ R (x + L), or nothing when R is not a coincidence of x + L.
std::optional<CosetLattice> shifted_coincidence(const ShiftedLattice& s, const RationalMatrix& r);

CsmlDescription multilattice_coincidence(const Multilattice& ml, const RationalMatrix& r);

/// Throws DomainError unless r is square and exactly orthogonal.
void require_orthogonal(const RationalMatrix& r);

}  // namespace csl
