#include "csl/multilattice.hpp"

#include <algorithm>

namespace csl {

void require_orthogonal(const RationalMatrix& r)
{
    if (!is_orthogonal(r))
        throw DomainError("matrix is not orthogonal");
}

ShiftedLattice::ShiftedLattice(RationalLattice lattice, const RationalVector& shift)
    : lattice_(std::move(lattice)), shift_(lattice_.reduce(shift))
{
}

Multilattice::Multilattice(RationalLattice lattice, std::vector<RationalVector> shifts)
    : lattice_(std::move(lattice))
{
    if (shifts.empty())
        shifts.push_back(RationalVector(lattice_.dim(), Rational(0)));
    for (auto& x : shifts)
        x = lattice_.reduce(x);
    if (shifts.front() != RationalVector(lattice_.dim(), Rational(0)))
        throw DomainError("first multilattice shift must lie in the lattice");
    for (std::size_t j = 0; j < shifts.size(); ++j)
        for (std::size_t k = j + 1; k < shifts.size(); ++k)
            if (shifts[j] == shifts[k])
                throw DomainError("multilattice shifts coincide modulo the lattice");
    shifts_ = std::move(shifts);
}

bool Multilattice::contains(const RationalVector& v) const
{
    for (const auto& x : shifts_)
        if (lattice_.contains(subtract(v, x)))
            return true;
    return false;
}

AffineIsometry::AffineIsometry(RationalMatrix linear)
    : AffineIsometry(linear, RationalVector(linear.rows(), Rational(0)))
{
}

AffineIsometry::AffineIsometry(RationalMatrix linear, RationalVector translation)
    : linear_(std::move(linear)), translation_(std::move(translation))
{
    require_orthogonal(linear_);
    if (translation_.size() != linear_.rows())
        throw DomainError("translation dimension mismatch");
}

RationalVector AffineIsometry::apply(const RationalVector& x) const
{
    return add(translation_, linear_ * x);
}

AffineIsometry AffineIsometry::inverse() const
{
    RationalMatrix t = linear_.transposed();
    return {t, scale(Rational(-1), t * translation_)};
}

AffineIsometry AffineIsometry::after(const AffineIsometry& other) const
{
    return {linear_ * other.linear_, apply(other.translation_)};
}

RationalLattice csl(const RationalLattice& l, const RationalMatrix& r)
{
    require_orthogonal(r);
    return lattice_intersect(l, l.transformed(r));
}

RationalLattice dsc(const RationalLattice& l, const RationalMatrix& r)
{
    require_orthogonal(r);
    return lattice_sum(l, l.transformed(r));
}

Rational coincidence_index(const RationalLattice& l, const RationalMatrix& r)
{
    return sublattice_index(l, csl(l, r));
}

bool is_affine_coincidence(const RationalLattice& l, const AffineIsometry& iso)
{
    return dsc(l, iso.linear()).contains(iso.translation());
}

namespace {

// ℓ in L with v in ℓ + R L, if one exists.
std::optional<RationalVector> solve_ell(const RationalLattice& l, const RationalMatrix& r, const RationalVector& v)
{
    const RationalMatrix& b = l.basis();
    auto parts = decompose_in_sum(b, r * b, v);
    if (!parts)
        return std::nullopt;
    return b * to_rational(parts->first);
}

}  // namespace

CosetLattice acsl(const RationalLattice& l, const AffineIsometry& iso)
{
    auto ell = solve_ell(l, iso.linear(), iso.translation());
    if (!ell)
        throw DomainError("not an affine coincidence isometry");
    return {*ell, csl(l, iso.linear())};
}

std::optional<CosetLattice> shifted_coincidence(const ShiftedLattice& s, const RationalMatrix& r)
{
    require_orthogonal(r);
    const RationalVector& x = s.shift();
    auto ell = solve_ell(s.lattice(), r, subtract(r * x, x));
    if (!ell)
        return std::nullopt;
    return CosetLattice(add(x, *ell), csl(s.lattice(), r));
}

CsmlDescription multilattice_coincidence(const Multilattice& ml, const RationalMatrix& r)
{
    require_orthogonal(r);
    const RationalLattice& l = ml.lattice();
    RationalLattice common = csl(l, r);
    CsmlDescription out;
    for (std::size_t j = 0; j < ml.size(); ++j)
        for (std::size_t k = 0; k < ml.size(); ++k) {
            const RationalVector& xj = ml.shifts()[j];
            const RationalVector& xk = ml.shifts()[k];
            auto ell = solve_ell(l, r, subtract(r * xj, xk));
            if (!ell)
                continue;
            out.pairs.emplace_back(j, k);
            out.cosets.emplace_back(add(xk, *ell), common);
        }
    std::sort(out.cosets.begin(), out.cosets.end());
    out.index = Rational(static_cast<long>(ml.size())) * sublattice_index(l, common) /
                Rational(static_cast<long>(out.pairs.size()));
    return out;
}

}  // namespace csl
