#pragma once

#include "csl/multilattice.hpp"
#include "csl/normal_form.hpp"

#include <optional>
#include <vector>

// Brute-force checks that share no solving code with the engine: coset
// intersections go through the Smith form, indices through invariant factors,
// and densities through explicit point enumeration.
namespace csl::oracle {

IntMatrix hnf(const IntMatrix& generators);
RationalMatrix hnf(const RationalMatrix& generators);
SmithDecomposition snf(const IntMatrix& a);

/// [super : sub] as the product of the invariant factors of sub written in
/// coordinates of super. Throws DomainError unless sub ⊆ super.
Integer index_by_snf(const RationalLattice& super, const RationalLattice& sub);

/// (x1 + L1) ∩ (x2 + L2) by solving x1 + B1 a = x2 + B2 b over the integers.
std::optional<CosetLattice> coset_intersect(const CosetLattice& a, const CosetLattice& b);

/// Half-open box [lower, upper).
struct Box {
    RationalVector lower, upper;

    static Box cube(std::size_t dim, const Rational& lower, const Rational& upper);
    bool contains(const RationalVector& v) const;
    friend bool operator==(const Box& a, const Box& b) { return a.lower == b.lower && a.upper == b.upper; }
};

struct PointSet {
    std::vector<RationalVector> points;  // sorted, distinct
    Box window;

    std::size_t size() const { return points.size(); }
    bool contains(const RationalVector& v) const;
};

PointSet enumerate_points(const CosetLattice& coset, const Box& window);
PointSet enumerate_points(const ShiftedLattice& s, const Box& window);
PointSet enumerate_points(const Multilattice& ml, const Box& window);
PointSet intersect(const PointSet& a, const PointSet& b);

/// |a| / |a ∩ b| over a shared window.
Rational empirical_index(const PointSet& a, const PointSet& b);
/// Same ratio for L and iso(L), testing membership of iso^{-1}(p) in L.
Rational empirical_index(const Multilattice& ml, const AffineIsometry& iso, const Box& window);

/// The multilattice R L, with R applied to the lattice and every shift.
Multilattice transformed(const Multilattice& ml, const RationalMatrix& r);

}  // namespace csl::oracle
