#pragma once

#include "csl/multilattice.hpp"
#include "csl/quat.hpp"

#include <string>
#include <vector>

namespace csl {

/// The f.c.c. lattice spanned by (1,1,0), (0,1,1), (1,0,1).
RationalLattice diamond_fcc();
/// (1/2, 1/2, 1/2).
RationalVector diamond_shift();
/// fcc ∪ (shift + fcc).
Multilattice diamond_packing();

struct DiamondIsometry {
    Quaternion q;
    bool improper = false;
};

/// R_q, or -R_q for a rotoreflection.
RationalMatrix diamond_matrix(const DiamondIsometry& iso);

enum class NormClass { Odd, TwoMod4, ZeroMod4 };
NormClass norm_class(const Quaternion& q);
std::string to_string(NormClass c);

/// Membership in OC(x + fcc) by the |q|^2 mod 4 rule.
bool shifted_fcc_member(const DiamondIsometry& iso);
/// The same decision through the generic shifted-lattice engine.
bool shifted_fcc_member_engine(const DiamondIsometry& iso);

struct DiamondResult {
    NormClass norm_class = NormClass::Odd;
    /// Index and coset count from the mod-4 case table.
    Rational index;
    std::size_t coset_count = 0;
    /// Coincidence site multilattice computed by the engine.
    CsmlDescription csml;
};

/// q must be primitive.
DiamondResult diamond_coincidence(const DiamondIsometry& iso);

/// Multiplicative closed form for the number of CSMLs of index m.
std::uint64_t f_diamond(std::uint64_t m);

/// Distinct CSMLs per index m <= max_m (entry 0 unused), by enumerating
/// rotations and rotoreflections.
std::vector<std::uint64_t> diamond_csml_counts(std::uint32_t max_m);

/// Distinct CSL cosets of the shifted f.c.c. lattice per index, and the
/// number of rotations resp. all isometries in OC(x + fcc) per index.
struct ShiftedFccCounts {
    std::vector<std::uint64_t> csls, rotations, isometries;
};
ShiftedFccCounts shifted_fcc_counts(std::uint32_t max_m);

}  // namespace csl
