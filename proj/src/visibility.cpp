#include "latvis/visibility.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace latvis {

namespace {

int valuation(std::uint64_t n, std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

}  // namespace

std::uint64_t gcd_k(std::int64_t m, std::int64_t n, CurveExponent k, const Factorizer& factorizer) {
    if (m == 0 || n == 0) throw DomainError("gcd_k requires nonzero arguments");
    const std::uint64_t am = abs_u64(m);
    const std::uint64_t an = abs_u64(n);
    const int kk = k.value();

    std::uint64_t d = 1;
    factorizer.for_each_prime_factor(std::gcd(am, an), [&](std::uint64_t p, int) {
        const int e = std::min(valuation(am, p), valuation(an, p) / kk);
        for (int i = 0; i < e; ++i) d *= p;  // d | m, so no overflow
    });
    return d;
}

std::uint64_t gcd_k(std::int64_t m, std::int64_t n, CurveExponent k) {
    return gcd_k(m, n, k, default_factorizer());
}

Rational curve_coefficient(LatticePoint base, LatticePoint target, CurveExponent k) {
    const std::int64_t du = checked_difference(target.u, base.u);
    const std::int64_t dv = checked_difference(target.v, base.v);
    if (du == 0) throw DomainError("vertical configuration: no curve y - v = r (x - u)^k joins the points");
    Rational r(dv);
    for (int i = 0; i < k.value(); ++i) r = r * Rational(1, du);
    return r;
}

std::uint64_t interior_point_count_oracle(LatticePoint base, LatticePoint target, CurveExponent k) {
    const Rational r = curve_coefficient(base, target, k);
    const std::int64_t du = target.u - base.u;
    const std::int64_t step = du > 0 ? 1 : -1;

    std::uint64_t count = 0;
    for (std::int64_t t = step; t != du; t += step) {
        Rational power(1);
        for (int i = 0; i < k.value(); ++i) power = power * Rational(t);
        // y0 = v + r t^k; v is an integer, so only r t^k matters.
        if ((r * power).is_integer()) ++count;
    }
    return count;
}

bool is_level_visible(LatticePoint base, LatticePoint target, CurveExponent k, VisibilityLevel level) {
    const std::int64_t du = checked_difference(target.u, base.u);
    const std::int64_t dv = checked_difference(target.v, base.v);
    if (du == 0 || dv == 0) throw DomainError("points share a coordinate; visibility is not defined for them");
    return gcd_k(du, dv, k) <= level.value();
}

std::string BaseSetViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::duplicate:
            os << "duplicate point " << first;
            break;
        case Kind::degenerate_pair:
            os << "degenerate pair " << first << "-" << second << ": points share a coordinate";
            break;
        case Kind::not_visible:
            os << "pair " << first << "-" << second << " is not k-visible: gcd_k = " << gcd;
            break;
    }
    return os.str();
}

namespace {

std::string join_violations(const std::vector<BaseSetViolation>& violations) {
    std::string out = "invalid base set";
    for (const auto& v : violations) out += "; " + v.describe();
    return out;
}

}  // namespace

BaseSetError::BaseSetError(std::vector<BaseSetViolation> violations)
    : DomainError(join_violations(violations)), violations_(std::move(violations)) {}

u128 max_base_set_size(CurveExponent k) { return u128(1) << (k.value() + 1); }

ValidatedBaseSet validate_base_set(std::span<const LatticePoint> points, CurveExponent k) {
    if (points.empty()) throw DomainError("base set must be non-empty");

    std::vector<BaseSetViolation> violations;
    std::set<LatticePoint> seen;
    for (const auto& p : points)
        if (!seen.insert(p).second) violations.push_back({BaseSetViolation::Kind::duplicate, p, p});

    if (violations.empty()) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                const std::int64_t du = checked_difference(points[j].u, points[i].u);
                const std::int64_t dv = checked_difference(points[j].v, points[i].v);
                if (du == 0 || dv == 0) {
                    violations.push_back({BaseSetViolation::Kind::degenerate_pair, points[i], points[j]});
                    continue;
                }
                const std::uint64_t g = gcd_k(du, dv, k);
                if (g != 1) violations.push_back({BaseSetViolation::Kind::not_visible, points[i], points[j], g});
            }
        }
    }
    if (!violations.empty()) throw BaseSetError(std::move(violations));

    // Pairwise visibility forces distinct classes (u mod 2, v mod 2^k).
    if (points.size() > max_base_set_size(k))
        throw DomainError("internal error: pairwise k-visible set larger than 2^(k+1)");
    return ValidatedBaseSet({points.begin(), points.end()}, k);
}

}  // namespace latvis
