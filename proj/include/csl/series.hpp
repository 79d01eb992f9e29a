#pragma once

#include "csl/shifted_square.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csl {

enum class CountingId { SquareCSL, SquareRotations, CubicCSL, CubicRotations, DiamondCSML, ShiftedSquare, ShiftedFcc };

struct CountingFunction {
    CountingId id = CountingId::SquareCSL;
    /// Set for ShiftedSquare only.
    std::optional<ShiftClass> shift;
};

/// "z2", "z2-rot", "z3", "z3-rot", "d3p", "fcc-shift", or "shift:<shift>"
/// with any shift accepted by parse_shift_class.
CountingFunction parse_counting_function(std::string_view text);
std::string to_string(const CountingFunction& f);

/// SquareCSL, CubicCSL and DiamondCSML.
bool is_multiplicative(CountingId id);
/// Prime-power rule of a multiplicative id at p^r.
std::uint64_t prime_power_value(CountingId id, std::uint64_t p, unsigned r);
/// Closed-form value of a multiplicative id at m.
std::uint64_t closed_form(CountingId id, std::uint64_t m);

/// f(m) for 1 <= m <= max_m; entry 0 is zero. Multiplicative ids use their
/// prime-power rules, shifted ids enumerate coincidences and deduplicate CSLs.
std::vector<std::uint64_t> coefficients(const CountingFunction& f, std::uint32_t max_m);

/// Number of coincidence rotations per index. Defined for SquareCSL,
/// CubicCSL, ShiftedSquare and ShiftedFcc.
std::vector<std::uint64_t> rotation_counts(const CountingFunction& f, std::uint32_t max_m);

int chi_minus3(std::int64_t m);
int chi_12(std::int64_t m);

/// Closed forms of three worked shifts of the square lattice: CSL counts for
/// 1/5 and (2+i)/5, and the rotation count for 1/3 + i/6.
std::uint64_t fifth_shift_coefficient(std::uint64_t m);
std::uint64_t nongroup_shift_coefficient(std::uint64_t m);
std::uint64_t sixth_shift_rotation_count(std::uint64_t m);

/// coefficient * N^n_power / pi^pi_power.
struct Growth {
    Rational coefficient;
    unsigned n_power = 1;
    unsigned pi_power = 1;
};

/// pi to 50 decimal places, as an exact rational.
const Rational& pi_approximation();

/// Sum of table[1..N].
Integer summatory(const std::vector<std::uint64_t>& table, std::uint64_t n);
/// summatory(coefficients(f, N)) divided by the predicted growth at N.
Rational summatory_ratio(const CountingFunction& f, std::uint32_t n, const Growth& g);

}  // namespace csl
