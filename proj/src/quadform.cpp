#include "rotdil/quadform.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "rotdil/errors.hpp"
#include "rotdil/similarity.hpp"

namespace rotdil {

QuadraticForm invariant_form(const IntMatrix2& m) {
    require_rotational(m, "invariant_form");
    const Decomposition dec = decompose(m);
    const Mat2 w = dec.q_inv * dec.q_inv;
    return {w.a11, 0.5 * (w.a12 + w.a21), w.a22};
}

QuadraticForm dual_form(const IntMatrix2& m) {
    require_rotational(m, "dual_form");
    const Decomposition dec = decompose(m);
    const Mat2 g = dec.q * dec.q;
    return {g.a11, 0.5 * (g.a12 + g.a21), g.a22};
}

double check_invariance(const IntMatrix2& m, const QuadraticForm& w) {
    const Mat2 a = {static_cast<double>(m.a), static_cast<double>(m.b),
                    static_cast<double>(m.c), static_cast<double>(m.d)};
    const Mat2 lhs = a.transposed() * w.mat() * a;
    const Mat2 rhs = static_cast<double>(m.det()) * w.mat();
    return (lhs - rhs).inf_norm() / w.mat().inf_norm();
}

std::optional<Rational> approx_rational(double x, long long max_den, double tol) {
    if (max_den < 1 || !std::isfinite(x)) return std::nullopt;
    long long h_prev = 1, k_prev = 0;  // convergent numerators/denominators
    long long h_prev2 = 0, k_prev2 = 1;
    double y = x;
    for (int it = 0; it < 64; ++it) {
        const double fa = std::floor(y);
        if (std::abs(fa) > 9.0e18) break;
        const long long a = static_cast<long long>(fa);
        const long long h = a * h_prev + h_prev2;
        const long long k = a * k_prev + k_prev2;
        if (k > max_den) break;
        if (k >= 1 && std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
            return Rational(h, k);
        }
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        const double frac = y - fa;
        if (frac < 1e-15) break;
        y = 1.0 / frac;
    }
    return std::nullopt;
}

std::optional<IntQuadraticForm> rationalize_form(const QuadraticForm& w, long long max_den) {
    if (max_den < 1) throw InputError("rationalize_form: max_den must be >= 1");
    if (!(w.m11 > 0.0) || !(w.m11 * w.m22 - w.m12 * w.m12 > 0.0)) {
        throw InputError("rationalize_form: form must be positive definite");
    }
    constexpr double kTol = 1e-9;
    const auto r12 = approx_rational(w.m12 / w.m11, max_den, kTol);
    const auto r22 = approx_rational(w.m22 / w.m11, max_den, kTol);
    if (!r12 || !r22) return std::nullopt;
    const long long l = std::lcm(r12->den, r22->den);
    long long v11 = l;
    long long v12 = r12->num * (l / r12->den);
    long long v22 = r22->num * (l / r22->den);
    const long long g = std::gcd(std::gcd(v11, std::abs(v12)), v22);
    return IntQuadraticForm{v11 / g, v12 / g, v22 / g};
}

EllipseGeometry ellipse_geometry(const QuadraticForm& w, double level) {
    if (!(level > 0.0)) throw InputError("ellipse_geometry: level must be positive");
    EllipseGeometry out;
    out.level = level;
    const double mid = 0.5 * (w.m11 + w.m22);
    const double disc = std::hypot(0.5 * (w.m11 - w.m22), w.m12);
    const double lam_min = mid - disc;
    const double lam_max = mid + disc;
    out.semi_major = std::sqrt(level / lam_min);
    out.semi_minor = std::sqrt(level / lam_max);
    if (disc == 0.0) {
        out.orientation = 0.0;  // circle; fixed convention
        return out;
    }
    // Eigenvector of the smaller eigenvalue = major-axis direction.
    Vec2 v = {w.m12, lam_min - w.m11};
    const Vec2 alt = {lam_min - w.m22, w.m12};
    if (norm2(alt) > norm2(v)) v = alt;
    double angle = std::atan2(v.y, v.x);
    if (angle < 0.0) angle += std::numbers::pi;
    if (angle >= std::numbers::pi) angle -= std::numbers::pi;
    out.orientation = angle;
    return out;
}

LatticeTransform lattice_transform(const IntMatrix2& m) {
    require_rotational(m, "lattice_transform");
    const Decomposition dec = decompose(m);
    const Mat2 w = dec.q_inv * dec.q_inv;
    LatticeTransform out;
    out.basis = dec.q;
    out.circle_residual = (dec.q.transposed() * w * dec.q - Mat2::identity()).inf_norm();
    return out;
}

}  // namespace rotdil
