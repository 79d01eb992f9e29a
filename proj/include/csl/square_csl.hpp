#pragma once

#include "csl/gaussian.hpp"
#include "csl/lattice.hpp"

#include <string>
#include <vector>

namespace csl {

/// Coincidence isometry of Z[i]: multiplication by unit * z / conj(z),
/// preceded by complex conjugation when `reflection` is set. The numerator
/// is coprime to its conjugate and has odd, positive real part.
struct PlanarCoincidence {
    GaussianInt numerator{1};
    Unit unit;
    bool reflection = false;

    friend bool operator==(const PlanarCoincidence& a, const PlanarCoincidence& b)
    {
        return a.numerator == b.numerator && a.unit == b.unit && a.reflection == b.reflection;
    }
    friend bool operator!=(const PlanarCoincidence& a, const PlanarCoincidence& b) { return !(a == b); }
};

/// z coprime to conj(z) (equivalently: coprime parts of different parity,
/// or z a unit).
bool is_numerator(const GaussianInt& z);

/// The associate of z with odd, positive real part.
GaussianInt canonical_numerator(const GaussianInt& z);

/// Builds the coincidence for any valid numerator, moving the associate
/// factor into the unit. Throws DomainError when z is not a numerator.
PlanarCoincidence make_coincidence(const GaussianInt& z, Unit unit, bool reflection = false);

/// Recovers the coincidence from its multiplier c (|c| = 1, c in Q(i)).
PlanarCoincidence from_multiplier(const GaussianRational& c, bool reflection);

/// unit * z / conj(z).
GaussianRational multiplier(const PlanarCoincidence& c);
RationalMatrix isometry_matrix(const PlanarCoincidence& c);
Integer coincidence_index(const PlanarCoincidence& c);

/// z Z[i].
RationalLattice csl_basis(const PlanarCoincidence& c);
/// (1 / conj(z)) Z[i] = Z[i] + R Z[i].
RationalLattice dsc_basis(const PlanarCoincidence& c);

GaussianRational apply(const PlanarCoincidence& c, const GaussianRational& x);
/// a after b.
PlanarCoincidence compose(const PlanarCoincidence& a, const PlanarCoincidence& b);
PlanarCoincidence inverse(const PlanarCoincidence& c);

/// Canonical numerators with norm at most max_norm, sorted by norm, then real
/// part, then imaginary part descending.
std::vector<GaussianInt> enumerate_numerators(std::uint32_t max_norm);

/// Every coincidence isometry with index at most max_index: per numerator,
/// the rotations for units 1, i, -1, -i, then (optionally) the reflections.
std::vector<PlanarCoincidence> enumerate_coincidences(std::uint32_t max_index, bool with_reflections);

std::string to_string(const PlanarCoincidence& c);

/// Points of Z[i] as column vectors of Q^2.
RationalVector to_vector(const GaussianRational& x);
GaussianRational from_vector(const RationalVector& v);

}  // namespace csl
