#include "csl/series.hpp"

#include "csl/cubic_csl.hpp"
#include "csl/diamond.hpp"

namespace csl {

CountingFunction parse_counting_function(std::string_view text)
{
    if (text == "z2")
        return {CountingId::SquareCSL, std::nullopt};
    if (text == "z2-rot")
        return {CountingId::SquareRotations, std::nullopt};
    if (text == "z3")
        return {CountingId::CubicCSL, std::nullopt};
    if (text == "z3-rot")
        return {CountingId::CubicRotations, std::nullopt};
    if (text == "d3p")
        return {CountingId::DiamondCSML, std::nullopt};
    if (text == "fcc-shift")
        return {CountingId::ShiftedFcc, std::nullopt};
    if (text.substr(0, 6) == "shift:") {
        std::string_view rest = text.substr(6);
        if (rest.size() >= 2 && rest.front() == '"' && rest.back() == '"')
            rest = rest.substr(1, rest.size() - 2);
        try {
            return {CountingId::ShiftedSquare, parse_shift_class(rest)};
        } catch (const ParseError& e) {
            throw ParseError("malformed shift", 6 + e.position());
        }
    }
    throw ParseError("unknown counting function '" + std::string(text) + "'", 0);
}

std::string to_string(const CountingFunction& f)
{
    switch (f.id) {
    case CountingId::SquareCSL: return "z2";
    case CountingId::SquareRotations: return "z2-rot";
    case CountingId::CubicCSL: return "z3";
    case CountingId::CubicRotations: return "z3-rot";
    case CountingId::DiamondCSML: return "d3p";
    case CountingId::ShiftedFcc: return "fcc-shift";
    case CountingId::ShiftedSquare: return "shift:" + (f.shift ? to_string(*f.shift) : std::string("?"));
    }
    return "?";
}

bool is_multiplicative(CountingId id)
{
    return id == CountingId::SquareCSL || id == CountingId::CubicCSL || id == CountingId::DiamondCSML;
}

std::uint64_t prime_power_value(CountingId id, std::uint64_t p, unsigned r)
{
    if (r == 0)
        return 1;
    std::uint64_t below = 1;
    for (unsigned k = 1; k < r; ++k)
        below *= p;
    switch (id) {
    case CountingId::SquareCSL:
        return p % 4 == 1 ? 2 : 0;
    case CountingId::CubicCSL:
        return p == 2 ? 0 : (p + 1) * below;
    case CountingId::DiamondCSML:
        if (p == 2)
            return r == 1 ? 1 : 0;
        return (p + 1) * below;
    default:
        throw DomainError("not a multiplicative counting function");
    }
}

std::uint64_t closed_form(CountingId id, std::uint64_t m)
{
    if (m == 0)
        throw DomainError("index must be positive");
    std::uint64_t f = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        unsigned r = 0;
        for (; m % p == 0; m /= p)
            ++r;
        if (r)
            f *= prime_power_value(id, p, r);
    }
    if (m > 1)
        f *= prime_power_value(id, m, 1);
    return f;
}

namespace {

std::vector<std::uint64_t> multiplicative_table(CountingId id, std::uint32_t max_m)
{
    std::vector<std::uint64_t> f(static_cast<std::size_t>(max_m) + 1, 0);
    if (max_m == 0)
        return f;
    auto spf = smallest_prime_factors(max_m);
    f[1] = 1;
    for (std::uint32_t m = 2; m <= max_m; ++m) {
        std::uint32_t p = spf[m], rest = m;
        unsigned r = 0;
        for (; rest % p == 0; rest /= p)
            ++r;
        f[m] = f[rest] * prime_power_value(id, p, r);
    }
    return f;
}

struct ShiftTables {
    std::vector<std::uint64_t> csls, rotations;
};

ShiftTables shifted_square_tables(const ShiftClass& x, std::uint32_t max_m)
{
    std::size_t size = static_cast<std::size_t>(max_m) + 1;
    ShiftTables t{std::vector<std::uint64_t>(size, 0), std::vector<std::uint64_t>(size, 0)};
    if (max_m == 0)
        return t;
    if (auto r = std::get_if<RationalShift>(&x)) {
        auto members = enumerate_shifted(r->x, max_m);
        for (const auto& m : members)
            if (!m.coincidence.reflection)
                ++t.rotations[m.coincidence.numerator.norm().get_ui()];
        for (const auto& m : distinct_csls(members))
            ++t.csls[m.coincidence.numerator.norm().get_ui()];
        return t;
    }
    t.csls[1] = 1;
    t.rotations[1] = 1;
    ShiftedOcDescription d = classify_irrational(x);
    if (d.generator) {
        Integer n = d.generator->numerator.norm();
        if (n > 1 && n <= max_m)
            ++t.csls[n.get_ui()];
    }
    return t;
}

std::vector<std::uint64_t> scaled(std::vector<std::uint64_t> v, std::uint64_t k)
{
    for (auto& x : v)
        x *= k;
    return v;
}

const ShiftClass& require_shift(const CountingFunction& f)
{
    if (!f.shift)
        throw DomainError("shifted counting function without a shift");
    return *f.shift;
}

}  // namespace

std::vector<std::uint64_t> coefficients(const CountingFunction& f, std::uint32_t max_m)
{
    switch (f.id) {
    case CountingId::SquareCSL:
    case CountingId::CubicCSL:
    case CountingId::DiamondCSML:
        return multiplicative_table(f.id, max_m);
    case CountingId::SquareRotations:
        return scaled(multiplicative_table(CountingId::SquareCSL, max_m), 4);
    case CountingId::CubicRotations:
        return scaled(multiplicative_table(CountingId::CubicCSL, max_m), 24);
    case CountingId::ShiftedSquare:
        return shifted_square_tables(require_shift(f), max_m).csls;
    case CountingId::ShiftedFcc:
        return shifted_fcc_counts(max_m).csls;
    }
    throw DomainError("unknown counting function");
}

std::vector<std::uint64_t> rotation_counts(const CountingFunction& f, std::uint32_t max_m)
{
    switch (f.id) {
    case CountingId::SquareCSL:
        return coefficients({CountingId::SquareRotations, std::nullopt}, max_m);
    case CountingId::CubicCSL:
        return coefficients({CountingId::CubicRotations, std::nullopt}, max_m);
    case CountingId::ShiftedSquare:
        return shifted_square_tables(require_shift(f), max_m).rotations;
    case CountingId::ShiftedFcc:
        return shifted_fcc_counts(max_m).rotations;
    default:
        throw DomainError("no rotation count for " + to_string(f));
    }
}

int chi_minus3(std::int64_t m)
{
    static constexpr int table[3] = {0, 1, -1};
    return table[((m % 3) + 3) % 3];
}

int chi_12(std::int64_t m)
{
    static constexpr int table[12] = {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1};
    return table[((m % 12) + 12) % 12];
}

std::uint64_t fifth_shift_coefficient(std::uint64_t m)
{
    return m % 5 == 0 ? 0 : closed_form(CountingId::SquareCSL, m);
}

std::uint64_t nongroup_shift_coefficient(std::uint64_t m)
{
    std::uint64_t f = 1;
    for (; m % 5 == 0; m /= 5)
        f = 4;
    return f * closed_form(CountingId::SquareCSL, m);
}

std::uint64_t sixth_shift_rotation_count(std::uint64_t m)
{
    std::uint64_t f = closed_form(CountingId::SquareCSL, m);
    return static_cast<std::uint64_t>(1 + chi_minus3(static_cast<std::int64_t>(m))) * f / 2;
}

const Rational& pi_approximation()
{
    static const Rational pi = make_rational(Integer("314159265358979323846264338327950288419716939937510"),
                                             Integer("100000000000000000000000000000000000000000000000000"));
    return pi;
}

Integer summatory(const std::vector<std::uint64_t>& table, std::uint64_t n)
{
    if (n >= table.size())
        throw DomainError("table too short for the requested bound");
    Integer s = 0;
    for (std::uint64_t m = 1; m <= n; ++m)
        s += Integer(static_cast<unsigned long>(table[m]));
    return s;
}

Rational summatory_ratio(const CountingFunction& f, std::uint32_t n, const Growth& g)
{
    if (n == 0)
        throw DomainError("bound must be positive");
    Rational sum(summatory(coefficients(f, n), n));
    Rational predicted = g.coefficient;
    for (unsigned k = 0; k < g.n_power; ++k)
        predicted *= n;
    for (unsigned k = 0; k < g.pi_power; ++k)
        predicted /= pi_approximation();
    return sum / predicted;
}

}  // namespace csl
