#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latvis/primes.hpp"
#include "latvis/rational.hpp"
#include "latvis/types.hpp"

namespace latvis {

/// Degree-k gcd: the largest d >= 1 with d | m and d^k | n. Both arguments
/// must be nonzero; the result is invariant under the signs of m and n.
///
/// Computed from the factorization of gcd(|m|, |n|) as the product of
/// p^min(v_p(m), floor(v_p(n) / k)).
std::uint64_t gcd_k(std::int64_t m, std::int64_t n, CurveExponent k, const Factorizer& factorizer);
std::uint64_t gcd_k(std::int64_t m, std::int64_t n, CurveExponent k);

/// r with target.v - base.v = r (target.u - base.u)^k, in lowest terms.
Rational curve_coefficient(LatticePoint base, LatticePoint target, CurveExponent k);

/// Number of lattice points strictly between base and target on the curve
/// y - v = r (x - u)^k. Walks every integer abscissa between the endpoints and
/// tests integrality of the ordinate with exact rational arithmetic; does not
/// use gcd_k. Intended as a geometric ground truth for small configurations.
std::uint64_t interior_point_count_oracle(LatticePoint base, LatticePoint target, CurveExponent k);

/// gcd_k(target - base) <= level. Both coordinate differences must be nonzero.
bool is_level_visible(LatticePoint base, LatticePoint target, CurveExponent k, VisibilityLevel level);

/// A non-empty set of distinct, pairwise k-visible lattice points whose
/// pairwise coordinate differences are all nonzero.
class ValidatedBaseSet {
public:
    const std::vector<LatticePoint>& points() const noexcept { return points_; }
    CurveExponent k() const noexcept { return k_; }
    std::size_t size() const noexcept { return points_.size(); }

private:
    ValidatedBaseSet(std::vector<LatticePoint> points, CurveExponent k) : points_(std::move(points)), k_(k) {}
    friend ValidatedBaseSet validate_base_set(std::span<const LatticePoint>, CurveExponent);

    std::vector<LatticePoint> points_;
    CurveExponent k_;
};

struct BaseSetViolation {
    enum class Kind { duplicate, degenerate_pair, not_visible };

    Kind kind;
    LatticePoint first;
    LatticePoint second;
    std::uint64_t gcd = 0;  // gcd_k of the differences, for not_visible

    std::string describe() const;
};

/// Raised by validate_base_set; carries every offending pair.
class BaseSetError : public DomainError {
public:
    explicit BaseSetError(std::vector<BaseSetViolation> violations);
    const std::vector<BaseSetViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<BaseSetViolation> violations_;
};

ValidatedBaseSet validate_base_set(std::span<const LatticePoint> points, CurveExponent k);

/// Largest cardinality a pairwise k-visible set can have: 2^(k+1).
u128 max_base_set_size(CurveExponent k);

}  // namespace latvis
