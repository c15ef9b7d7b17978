#pragma once

#include <optional>

#include "rotdil/mat2.hpp"
#include "rotdil/matrix2.hpp"

namespace rotdil {

// Positive definite quadratic form W(x) = x^T [[m11, m12], [m12, m22]] x.
struct QuadraticForm {
    double m11 = 1.0, m12 = 0.0, m22 = 1.0;

    Mat2 mat() const { return {m11, m12, m12, m22}; }
    double eval(Vec2 v) const { return m11 * v.x * v.x + 2.0 * m12 * v.x * v.y + m22 * v.y * v.y; }
};

// Integer symmetric form, smallest positive representative.
struct IntQuadraticForm {
    long long m11 = 0, m12 = 0, m22 = 0;
    bool operator==(const IntQuadraticForm&) const = default;
};

struct EllipseGeometry {
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double orientation = 0.0;  // major-axis angle in [0, pi); 0 for circles
    double level = 1.0;
};

struct LatticeTransform {
    Mat2 basis;                    // Q: basis of the lattice Q Z^2
    double circle_residual = 0.0;  // ||Q^T (Q^{-2}) Q - I||_inf
};

// W = Q^{-2} from the decomposition (det 1): A^T W A = det(A) W.
QuadraticForm invariant_form(const IntMatrix2& m);

// Q^2 (det 1): A Q^2 A^T = det(A) Q^2; its ellipse axes are orthogonal to
// those of the invariant form.
QuadraticForm dual_form(const IntMatrix2& m);

// ||A^T W A - det(A) W||_inf / ||W||_inf.
double check_invariance(const IntMatrix2& m, const QuadraticForm& w);

// Rescales W to m11 = 1, reconstructs the remaining entries as rationals with
// denominator <= max_den (continued fractions, tolerance 1e-9) and clears
// denominators. nullopt when reconstruction fails at that tolerance.
std::optional<IntQuadraticForm> rationalize_form(const QuadraticForm& w, long long max_den);

// Semi-axes sqrt(level/eigenvalue); major axis along the eigenvector of the
// smaller eigenvalue.
EllipseGeometry ellipse_geometry(const QuadraticForm& w, double level);

// Change of lattice Z^2 -> Q Z^2 turning the invariant ellipse into a circle;
// the residual certifies Q^T Q^{-2} Q = I.
LatticeTransform lattice_transform(const IntMatrix2& m);

// Best rational p/q with q <= max_den and |x - p/q| <= tol, via continued
// fraction convergents. nullopt when no convergent within bound reaches tol.
std::optional<Rational> approx_rational(double x, long long max_den, double tol);

}  // namespace rotdil
