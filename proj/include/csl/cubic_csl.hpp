#pragma once

#include "csl/lattice.hpp"
#include "csl/quat.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace csl {

enum class CubicKind { Primitive, BodyCentered, FaceCentered };

/// Z^3; Z^3 together with (1/2,1/2,1/2) + Z^3 (the imaginary Hurwitz
/// quaternions); and the even-sum sublattice of Z^3, dual to the latter.
RationalLattice cubic_lattice(CubicKind kind);
CubicKind parse_cubic_kind(std::string_view text);
std::string to_string(CubicKind kind);

/// r0 = Im q, r1 = (q0, q3, -q2), r2 = (-q3, q0, q1), r3 = (q2, -q1, q0).
std::array<IntVector, 4> spanset_vectors(const Quaternion& q);

/// CSL of the body-centred lattice for R_q, spanned by the r-vectors with
/// halvings depending on |q|^2 mod 4. q must be primitive.
RationalLattice csl_bcc_basis(const Quaternion& q);

/// L ∩ R_q L and L + R_q L for the chosen cubic lattice.
RationalLattice csl_cubic(CubicKind kind, const Quaternion& q);
RationalLattice dsc_cubic(CubicKind kind, const Quaternion& q);

/// Number of distinct CSLs of Z^3 per index m <= max_m (entry 0 unused),
/// counted by enumerating primitive quaternions.
std::vector<std::uint64_t> cubic_csl_counts(std::uint32_t max_m);
/// Number of coincidence rotations of Z^3 per index.
std::vector<std::uint64_t> cubic_rotation_counts(std::uint32_t max_m);

}  // namespace csl
