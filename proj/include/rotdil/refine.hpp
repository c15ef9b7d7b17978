#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rotdil/mat2.hpp"
#include "rotdil/matrix2.hpp"

namespace rotdil {

struct MaskCoeff {
    int k1 = 0, k2 = 0;  // lattice index k
    double h = 0.0;
};

// Finitely supported refinement coefficients h_k on Z^2 for a dilation with
// determinant delta.
//
// Convention: m0(xi) = delta^{-1/2} sum_k h_k e^{-i k.xi}. Together with the
// normalization sum_k h_k = sqrt(delta) this gives m0(0) = 1, so the infinite
// product for the Fourier transform of the scaling function is well defined
// with phi_hat(0) = 1.
class Mask {
  public:
    Mask(std::vector<MaskCoeff> coeffs, long long delta);

    const std::vector<MaskCoeff>& coeffs() const { return coeffs_; }
    long long delta() const { return delta_; }

    // h_(0,0) = h_(1,0) = sqrt(2)/2 with delta 2: the Haar-type mask for
    // determinant-2 (quincunx) dilations.
    static Mask quincunx_haar();

  private:
    std::vector<MaskCoeff> coeffs_;
    long long delta_ = 0;
};

// Mask file: {"delta": int, "coeffs": [{"k": [k1, k2], "h": real}, ...]}.
// Throws MaskError carrying the JSON path of the offending field.
Mask load_mask(const std::string& path);

// m0(xi) = delta^{-1/2} sum_k h_k e^{-i k.xi}; 2pi-periodic per coordinate.
std::complex<double> mask_eval(const Mask& mask, Vec2 xi);

struct PhiHat {
    std::complex<double> value;  // prod_{j=1..J} m0((A^T)^{-j} xi)
    double tail = 0.0;           // |m0((A^T)^{-J} xi) - 1|, truncation indicator
};

// Truncated infinite product for the Fourier transform of the scaling
// function. Requires a rotational matrix (isotropic contraction by
// delta^{-1/2} per factor, so the product converges geometrically).
PhiHat phi_hat(const Mask& mask, const IntMatrix2& m, Vec2 xi, int depth);

struct Orbit {
    double theta = 0.0;
    std::vector<double> angles;  // j*theta mod 2pi, j = 1..N, each in [0, 2pi)
};

// Deterministic reduction of {j*theta mod 2pi}; values within 1e-9 of a full
// turn collapse to exactly 0 so rational-period orbits close.
Orbit orbit_angles(double theta, int count);

// ||(A^T)^{-j'} - det(A)^{-j'/2} Q^{-1} R^{j'} Q||_inf: the operator identity
// behind the two-angle relation, checked via two independent routes.
double power_identity_residual(const IntMatrix2& m, int j_prime);

struct TwoAngleCheck {
    double max_residual = 0.0;
    int j_prime = 0;
    double vartheta = 0.0;  // rotation angle used on the LHS: -j' * theta_signed
};

// Samples xi uniformly from [-2pi, 2pi]^2 (seeded, reproducible) and compares
//   phi_hat(Q^{-1} R_vartheta Q xi)   with   vartheta = -j' * theta_signed
// against
//   prod_{j=1..j'} m0(delta^{-j/2} Q^{-1} R^{j-j'} Q xi) * phi_hat(delta^{-j'/2} xi).
// Both sides carry exactly `depth` mask factors (the RHS product runs at
// depth - j'), so the identity is exact and the residual measures only the
// two independent evaluation routes. Requires depth > j'.
TwoAngleCheck verify_two_angle(const Mask& mask, const IntMatrix2& m, int j_prime, int samples,
                               std::uint64_t seed, int depth);

enum class GridTarget { FrequencyMagnitude, SpatialReconstruction };

struct GridSpec {
    int n = 64;           // samples per axis; power of two, >= 8
    double extent = 0.0;  // grid covers [-extent, extent]^2
    GridTarget target = GridTarget::FrequencyMagnitude;
};

struct Grid {
    int n = 0;
    std::vector<double> values;  // row-major; values[iy*n + ix], coordinate ascending with index

    double at(int ix, int iy) const { return values[static_cast<size_t>(iy) * n + ix]; }
};

// FrequencyMagnitude: |phi_hat| sampled on the grid. SpatialReconstruction:
// centered real part of the inverse DFT of the sampled phi_hat grid.
Grid render_grid(const Mask& mask, const IntMatrix2& m, const GridSpec& grid, int depth);

}  // namespace rotdil
