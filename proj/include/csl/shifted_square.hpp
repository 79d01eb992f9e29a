#pragma once

#include "csl/square_csl.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace csl {

// Shift classes x = a + b i of the square lattice. Irrational components are
// kept symbolic: each of a, b is an affine form over independent irrationals.

struct RationalShift {
    GaussianRational x;
};
/// a irrational, b rational.
struct IrrationalRe {
    Rational b;
};
/// a rational, b irrational.
struct IrrationalIm {
    Rational a;
};
/// 1, a, b rationally independent.
struct Independent {};
/// a and b irrational with a = p1/q1 + (p2/q2) b.
struct Dependent {
    Dependent(Integer p1, Integer q1, Integer p2, Integer q2);
    Integer p1, q1, p2, q2;
};

using ShiftClass = std::variant<RationalShift, IrrationalRe, IrrationalIm, Independent, Dependent>;

/// Parses "(2+1i)/5" style Gaussian rationals, or "independent",
/// "re-irrational:b=1/2", "im-irrational:a=1/2", "dependent:p1/q1,p2/q2".
ShiftClass parse_shift_class(std::string_view text);
std::string to_string(const ShiftClass& s);

/// unit * w - conj(w), evaluated via its closed form per unit.
GaussianInt unit_twist(Unit unit, const GaussianInt& w);
GaussianRational unit_twist(Unit unit, const GaussianRational& w);

bool is_member(const PlanarCoincidence& c, const ShiftClass& x);
bool is_member(const PlanarCoincidence& c, const GaussianRational& x);

enum class OcKind { Trivial, SingleReflection, FullCharacterization };

struct ShiftedOcDescription {
    OcKind kind = OcKind::Trivial;
    std::string branch;
    /// Generator exactly as tabulated for irrational shifts.
    std::optional<std::pair<GaussianInt, Unit>> literal_generator;
    /// The same reflection with its numerator in canonical form.
    std::optional<PlanarCoincidence> generator;
    /// nullopt when group structure is not decided by a closed-form rule.
    std::optional<bool> is_group;
};

/// Closed-form answer for the four irrational shift classes.
ShiftedOcDescription classify_irrational(const ShiftClass& x);
/// classify_irrational for irrational shifts; a full-characterization record
/// for rational ones.
ShiftedOcDescription describe(const ShiftClass& x);

/// First unit in the order 1, -1, i, -i whose reflection symmetry T_{1,unit}
/// fixes x + Z[i].
std::optional<Unit> reflection_symmetry_generator(const GaussianRational& x);

/// Rotation membership in SOC(1/q + Z[i]) by divisibility: q | unit z - conj(z).
bool soc_membership_rational(const PlanarCoincidence& c, const GaussianInt& q);
/// Same decision for odd rational q > 1 via the Euclidean remainder of z by q.
bool soc_membership_euclid(const PlanarCoincidence& c, const Integer& q);

/// (x + Z[i]) ∩ c(x + Z[i]) = representative + z Z[i], or nothing.
std::optional<GaussianRational> shifted_csl_representative(const PlanarCoincidence& c, const GaussianRational& x);

struct ShiftedMember {
    PlanarCoincidence coincidence;
    GaussianRational representative;
};

/// Members of OC(x + Z[i]) with index at most max_index, in the order of
/// enumerate_coincidences.
std::vector<ShiftedMember> enumerate_shifted(const GaussianRational& x, std::uint32_t max_index);

/// Distinct CSLs among the members: equal numerator and equal representative.
std::vector<ShiftedMember> distinct_csls(const std::vector<ShiftedMember>& members);

struct ClosureResult {
    bool closed = true;
    std::optional<std::pair<PlanarCoincidence, PlanarCoincidence>> counterexample;  // (first, second)
};

/// Composes all member pairs up to the bound; reports the first pair whose
/// product (second after first) is not a member. Closed means closed up to
/// the bound only.
ClosureResult group_closure_check(const GaussianRational& x, std::uint32_t max_index, bool rotations_only = false);

/// Counts per index m <= max_index over z in V' (odd visible points) with
/// N(z) = m and z congruent mod q to r or (1+i) r, 0 < r < q/2, gcd(r, q) = 1.
std::vector<std::uint64_t> visible_grid_counts(std::uint32_t q, std::uint32_t max_index);

}  // namespace csl
