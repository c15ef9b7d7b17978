#include "rotdil/refine.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <utility>

#include "json.hpp"
#include "rotdil/errors.hpp"
#include "rotdil/similarity.hpp"

namespace rotdil {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Mat2 transpose_inverse(const IntMatrix2& m) {
    const double delta = static_cast<double>(m.det());
    return {static_cast<double>(m.d) / delta, -static_cast<double>(m.c) / delta,
            -static_cast<double>(m.b) / delta, static_cast<double>(m.a) / delta};
}

// Uniform double in [0, 1) from the top 53 bits; bit-reproducible across
// platforms, unlike std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Mask::Mask(std::vector<MaskCoeff> coeffs, long long delta)
    : coeffs_(std::move(coeffs)), delta_(delta) {
    if (delta_ <= 0) {
        throw MaskError("mask delta must be a positive integer, got " + std::to_string(delta_));
    }
    bool any_nonzero = false;
    double sum = 0.0;
    std::set<std::pair<int, int>> seen;
    for (const MaskCoeff& c : coeffs_) {
        if (!seen.insert({c.k1, c.k2}).second) {
            throw MaskError("duplicate mask index k = [" + std::to_string(c.k1) + ", " +
                            std::to_string(c.k2) + "]");
        }
        if (c.h != 0.0) any_nonzero = true;
        sum += c.h;
    }
    if (!any_nonzero) throw MaskError("mask needs at least one nonzero coefficient");
    const double expected = std::sqrt(static_cast<double>(delta_));
    if (std::abs(sum - expected) > 1e-9) {
        throw MaskError("mask coefficients sum to " + std::to_string(sum) +
                        ", expected sqrt(delta) = " + std::to_string(expected));
    }
}

Mask Mask::quincunx_haar() {
    const double h = std::sqrt(2.0) / 2.0;
    return Mask({{0, 0, h}, {1, 0, h}}, 2);
}

Mask load_mask(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MaskError("cannot open mask file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw MaskError("mask file " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw MaskError(path + ": root must be an object");
    if (!doc.contains("delta") || !doc["delta"].is_number_integer()) {
        throw MaskError(path + ": /delta must be an integer");
    }
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array() || doc["coeffs"].empty()) {
        throw MaskError(path + ": /coeffs must be a non-empty array");
    }
    std::vector<MaskCoeff> coeffs;
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < doc["coeffs"].size(); ++i) {
        const auto& entry = doc["coeffs"][i];
        const std::string at = path + ": /coeffs/" + std::to_string(i);
        if (!entry.is_object()) throw MaskError(at + " must be an object");
        if (!entry.contains("k") || !entry["k"].is_array() || entry["k"].size() != 2 ||
            !entry["k"][0].is_number_integer() || !entry["k"][1].is_number_integer()) {
            throw MaskError(at + "/k must be an array of two integers");
        }
        if (!entry.contains("h") || !entry["h"].is_number()) {
            throw MaskError(at + "/h must be a number");
        }
        MaskCoeff c;
        c.k1 = entry["k"][0].get<int>();
        c.k2 = entry["k"][1].get<int>();
        c.h = entry["h"].get<double>();
        if (!seen.insert({c.k1, c.k2}).second) {
            throw MaskError(at + "/k: duplicate index [" + std::to_string(c.k1) + ", " +
                            std::to_string(c.k2) + "]");
        }
        coeffs.push_back(c);
    }
    try {
        return Mask(std::move(coeffs), doc["delta"].get<long long>());
    } catch (const MaskError& e) {
        throw MaskError(path + ": " + e.what());
    }
}

std::complex<double> mask_eval(const Mask& mask, Vec2 xi) {
    std::complex<double> sum = 0.0;
    for (const MaskCoeff& c : mask.coeffs()) {
        const double phase = -(c.k1 * xi.x + c.k2 * xi.y);
        sum += c.h * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return sum / std::sqrt(static_cast<double>(mask.delta()));
}

PhiHat phi_hat(const Mask& mask, const IntMatrix2& m, Vec2 xi, int depth) {
    require_rotational(m, "phi_hat");
    if (depth < 1) throw InputError("phi_hat: depth must be >= 1");
    if (mask.delta() != m.det()) {
        throw MaskError("/delta: mask delta " + std::to_string(mask.delta()) +
                        " does not match det " + std::to_string(m.det()) + " of " +
                        matrix_text(m));
    }
    const Mat2 contract = transpose_inverse(m);
    Vec2 eta = xi;
    std::complex<double> value = 1.0;
    std::complex<double> last = 1.0;
    for (int j = 0; j < depth; ++j) {
        eta = contract * eta;
        last = mask_eval(mask, eta);
        value *= last;
    }
    return {value, std::abs(last - 1.0)};
}

Orbit orbit_angles(double theta, int count) {
    if (count < 1) throw InputError("orbit_angles: count must be >= 1");
    Orbit orbit;
    orbit.theta = theta;
    orbit.angles.reserve(static_cast<size_t>(count));
    for (int j = 1; j <= count; ++j) {
        double a = std::fmod(static_cast<double>(j) * theta, kTwoPi);
        if (a < 0.0) a += kTwoPi;
        if (a < 1e-9 || kTwoPi - a < 1e-9) a = 0.0;
        orbit.angles.push_back(a);
    }
    return orbit;
}

double power_identity_residual(const IntMatrix2& m, int j_prime) {
    require_rotational(m, "power_identity_residual");
    if (j_prime < 1) throw InputError("power_identity_residual: j' must be >= 1");
    const Decomposition dec = decompose(m);
    const Mat2 direct = mat_pow(transpose_inverse(m), j_prime);
    const double scale = std::pow(static_cast<double>(m.det()), -0.5 * j_prime);
    const Mat2 via_rotation = scale * (dec.q_inv * mat_pow(dec.r, j_prime) * dec.q);
    return (direct - via_rotation).inf_norm();
}

TwoAngleCheck verify_two_angle(const Mask& mask, const IntMatrix2& m, int j_prime, int samples,
                               std::uint64_t seed, int depth) {
    require_rotational(m, "verify_two_angle");
    if (j_prime < 1) throw InputError("verify_two_angle: j' must be >= 1");
    if (samples < 1) throw InputError("verify_two_angle: samples must be >= 1");
    if (depth <= j_prime) {
        throw InputError("verify_two_angle: depth must exceed j' so both sides carry " +
                         std::to_string(depth) + " mask factors");
    }
    const Decomposition dec = decompose(m);
    const double delta = static_cast<double>(m.det());
    const double theta = dec.theta_signed;

    TwoAngleCheck check;
    check.j_prime = j_prime;
    check.vartheta = -static_cast<double>(j_prime) * theta;

    const Mat2 lhs_op = dec.q_inv * Mat2::rotation(check.vartheta) * dec.q;
    std::vector<Mat2> factor_ops;  // delta^{-j/2} Q^{-1} R^{j-j'} Q, j = 1..j'
    factor_ops.reserve(static_cast<size_t>(j_prime));
    for (int j = 1; j <= j_prime; ++j) {
        const double scale = std::pow(delta, -0.5 * j);
        factor_ops.push_back(scale *
                             (dec.q_inv * Mat2::rotation((j - j_prime) * theta) * dec.q));
    }
    const double rhs_scale = std::pow(delta, -0.5 * j_prime);

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const double u1 = next_unit(rng);
        const double u2 = next_unit(rng);
        const Vec2 xi = {-kTwoPi + 2.0 * kTwoPi * u1, -kTwoPi + 2.0 * kTwoPi * u2};

        const std::complex<double> lhs = phi_hat(mask, m, lhs_op * xi, depth).value;
        std::complex<double> prefactor = 1.0;
        for (const Mat2& op : factor_ops) prefactor *= mask_eval(mask, op * xi);
        const std::complex<double> rhs =
            prefactor * phi_hat(mask, m, rhs_scale * xi, depth - j_prime).value;

        check.max_residual = std::max(check.max_residual, std::abs(lhs - rhs));
    }
    return check;
}

namespace {

// In-place iterative radix-2 transform; sign +1 gives the inverse DFT kernel
// (no 1/n normalization).
void fft_pow2(std::vector<std::complex<double>>& v, int sign) {
    const size_t n = v.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        for (size_t i = 0; i < n; i += len) {
            for (size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> w =
                    std::polar(1.0, ang * static_cast<double>(k));
                const std::complex<double> u = v[i + k];
                const std::complex<double> t = w * v[i + k + len / 2];
                v[i + k] = u + t;
                v[i + k + len / 2] = u - t;
            }
        }
    }
}

}  // namespace

Grid render_grid(const Mask& mask, const IntMatrix2& m, const GridSpec& grid, int depth) {
    require_rotational(m, "render_grid");
    const int n = grid.n;
    if (n < 8 || (n & (n - 1)) != 0) {
        throw InputError("render_grid: grid size must be a power of two >= 8, got " +
                         std::to_string(n));
    }
    if (!(grid.extent > 0.0)) throw InputError("render_grid: extent must be positive");
    if (depth < 1) throw InputError("render_grid: depth must be >= 1");

    const auto node = [&](int i) {
        return -grid.extent + 2.0 * grid.extent * static_cast<double>(i) / n;
    };

    Grid out;
    out.n = n;
    out.values.resize(static_cast<size_t>(n) * n);

    if (grid.target == GridTarget::FrequencyMagnitude) {
        for (int iy = 0; iy < n; ++iy) {
            for (int ix = 0; ix < n; ++ix) {
                out.values[static_cast<size_t>(iy) * n + ix] =
                    std::abs(phi_hat(mask, m, {node(ix), node(iy)}, depth).value);
            }
        }
        return out;
    }

    // Spatial reconstruction: inverse DFT of the sampled phi_hat grid. The
    // (-1)^(ix+iy) factors re-center frequency 0 (grid midpoint) and the
    // spatial origin; n is a multiple of 4, so the corner phase is 1.
    std::vector<std::complex<double>> freq(static_cast<size_t>(n) * n);
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const double sign = ((ix + iy) & 1) ? -1.0 : 1.0;
            freq[static_cast<size_t>(iy) * n + ix] =
                sign * phi_hat(mask, m, {node(ix), node(iy)}, depth).value;
        }
    }
    std::vector<std::complex<double>> row(static_cast<size_t>(n));
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) row[ix] = freq[static_cast<size_t>(iy) * n + ix];
        fft_pow2(row, +1);
        for (int ix = 0; ix < n; ++ix) freq[static_cast<size_t>(iy) * n + ix] = row[ix];
    }
    std::vector<std::complex<double>> col(static_cast<size_t>(n));
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) col[iy] = freq[static_cast<size_t>(iy) * n + ix];
        fft_pow2(col, +1);
        for (int iy = 0; iy < n; ++iy) freq[static_cast<size_t>(iy) * n + ix] = col[iy];
    }
    const double dxi = 2.0 * grid.extent / n;
    const double scale = (dxi / kTwoPi) * (dxi / kTwoPi);
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const double sign = ((ix + iy) & 1) ? -1.0 : 1.0;
            out.values[static_cast<size_t>(iy) * n + ix] =
                sign * scale * freq[static_cast<size_t>(iy) * n + ix].real();
        }
    }
    return out;
}

}  // namespace rotdil
