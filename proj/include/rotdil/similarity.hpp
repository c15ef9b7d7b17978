#pragma once

#include <array>
#include <complex>

#include "rotdil/mat2.hpp"
#include "rotdil/matrix2.hpp"

namespace rotdil {

using Complex = std::complex<double>;

// Principal eigenpair of the normalized matrix A/sqrt(det A): the eigenvalue
// with positive imaginary part, and a unit eigenvector.
struct ComplexEigenpair {
    Complex lambda;
    std::array<Complex, 2> x;
};

// A = sqrt(det A) * Q * R * Q^{-1} with Q symmetric positive definite
// (normalized to det Q = 1) and R a rotation.
struct Decomposition {
    Mat2 q;
    Mat2 q_inv;
    Mat2 r;
    double theta_signed = 0.0;            // atan2(R21, R11), in (-pi, pi]
    double residual_similarity = 0.0;     // ||A - sqrt(det A) Q R Q^{-1}||_inf
    double residual_orthogonality = 0.0;  // ||R R^T - I||_inf
};

// Closed-form eigenpair: lambda = (tau + i sqrt(4 det - tau^2))/(2 sqrt(det)),
// x = (b, sqrt(det) lambda - a) when b != 0, else (sqrt(det) lambda - d, c).
// Both components cannot vanish under the rotational gate.
ComplexEigenpair eigenpair(const IntMatrix2& m);

// Q^2 = T T^* for T = [x | conj(x)]: 2 [[|x1|^2, Re(x1 conj(x2))],
//                                       [Re(x1 conj(x2)), |x2|^2]].
// Real symmetric positive definite.
Mat2 gram_q2(const ComplexEigenpair& pair);

// Square root of a symmetric positive definite 2x2 matrix via the closed form
// S = (M + sqrt(det M) I)/sqrt(tr M + 2 sqrt(det M)).
Mat2 sqrt_spd(const Mat2& m);

Decomposition decompose(const IntMatrix2& m);

// Signed rotation angle realized by R, read off R itself.
inline double signed_angle(const Decomposition& d) { return std::atan2(d.r.a21, d.r.a11); }

}  // namespace rotdil
