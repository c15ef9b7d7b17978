#include "rotdil/similarity.hpp"

#include <cmath>
#include <string>

#include "rotdil/errors.hpp"

namespace rotdil {

ComplexEigenpair eigenpair(const IntMatrix2& m) {
    require_rotational(m, "eigenpair");
    const double tau = static_cast<double>(m.trace());
    const double delta = static_cast<double>(m.det());
    const double sqrt_delta = std::sqrt(delta);
    // Eigenvalue of A itself; dividing by sqrt(det) normalizes it to the unit circle.
    const Complex lambda_a(tau / 2.0, std::sqrt(4.0 * delta - tau * tau) / 2.0);

    ComplexEigenpair pair;
    pair.lambda = lambda_a / sqrt_delta;
    if (m.b != 0) {
        pair.x = {Complex(static_cast<double>(m.b), 0.0), lambda_a - static_cast<double>(m.a)};
    } else {
        pair.x = {lambda_a - static_cast<double>(m.d), Complex(static_cast<double>(m.c), 0.0)};
    }
    const double n = std::sqrt(std::norm(pair.x[0]) + std::norm(pair.x[1]));
    pair.x[0] /= n;
    pair.x[1] /= n;
    return pair;
}

Mat2 gram_q2(const ComplexEigenpair& pair) {
    const double g11 = 2.0 * std::norm(pair.x[0]);
    const double g22 = 2.0 * std::norm(pair.x[1]);
    const double g12 = 2.0 * (pair.x[0] * std::conj(pair.x[1])).real();
    return {g11, g12, g12, g22};
}

Mat2 sqrt_spd(const Mat2& m) {
    if (m.a12 != m.a21) {
        throw GateError("sqrt_spd: matrix is not symmetric (a12 != a21)");
    }
    if (!(m.a11 > 0.0)) {
        throw GateError("sqrt_spd: not positive definite: a11 = " + std::to_string(m.a11) +
                        " must be positive");
    }
    const double d = m.det();
    if (!(d > 0.0)) {
        throw GateError("sqrt_spd: not positive definite: det = " + std::to_string(d) +
                        " must be positive");
    }
    const double s = std::sqrt(d);
    const double t = std::sqrt(m.trace() + 2.0 * s);
    return {(m.a11 + s) / t, m.a12 / t, m.a21 / t, (m.a22 + s) / t};
}

Decomposition decompose(const IntMatrix2& m) {
    require_rotational(m, "decompose");
    const double delta = static_cast<double>(m.det());
    const double sqrt_delta = std::sqrt(delta);

    Mat2 gram = gram_q2(eigenpair(m));
    gram = gram * (1.0 / std::sqrt(gram.det()));
    Mat2 q = sqrt_spd(gram);
    q = q * (1.0 / std::sqrt(q.det()));  // polish det Q = 1

    Decomposition dec;
    dec.q = q;
    dec.q_inv = q.inverse();
    const Mat2 normalized = {static_cast<double>(m.a) / sqrt_delta,
                             static_cast<double>(m.b) / sqrt_delta,
                             static_cast<double>(m.c) / sqrt_delta,
                             static_cast<double>(m.d) / sqrt_delta};
    dec.r = dec.q_inv * normalized * q;
    dec.theta_signed = std::atan2(dec.r.a21, dec.r.a11);

    const Mat2 rebuilt = sqrt_delta * (q * dec.r * dec.q_inv);
    const Mat2 original = {static_cast<double>(m.a), static_cast<double>(m.b),
                           static_cast<double>(m.c), static_cast<double>(m.d)};
    dec.residual_similarity = (original - rebuilt).inf_norm();
    dec.residual_orthogonality = (dec.r * dec.r.transposed() - Mat2::identity()).inf_norm();
    if (dec.residual_similarity > 1e-8 || dec.residual_orthogonality > 1e-8) {
        throw ConsistencyError("decompose: residual gate tripped for " + matrix_text(m) +
                               ": similarity " + std::to_string(dec.residual_similarity) +
                               ", orthogonality " + std::to_string(dec.residual_orthogonality));
    }
    return dec;
}

}  // namespace rotdil
