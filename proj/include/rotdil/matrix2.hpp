#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "rotdil/rational.hpp"

namespace rotdil {

// 2x2 integer matrix [[a, b], [c, d]]. Determinant and trace are exact.
struct IntMatrix2 {
    long long a = 0, b = 0, c = 0, d = 0;

    long long det() const { return a * d - b * c; }
    long long trace() const { return a + d; }
    bool operator==(const IntMatrix2&) const = default;
};

std::string matrix_text(const IntMatrix2& m);  // "[[a, b], [c, d]]"

struct TraceDet {
    long long trace = 0;
    long long det = 0;
};

inline TraceDet trace_det(const IntMatrix2& m) { return {m.trace(), m.det()}; }

// True iff det > 0 and trace^2 < 4 det: the normalized matrix A/sqrt(det A)
// is then similar to a rotation through a symmetric positive definite factor.
inline bool is_rotational(long long tau, long long delta) {
    return delta > 0 && tau * tau < 4 * delta;
}
inline bool is_rotational(const IntMatrix2& m) {
    return is_rotational(m.trace(), m.det());
}

// Throws GateError naming the failed inequality when m is not rotational.
void require_rotational(const IntMatrix2& m, const char* op);
void require_rotational(long long tau, long long delta, const char* op);

enum class AngleKind { SpecialPiFraction, Incommensurable, DegenerateRealSpectrum };

// theta = num*pi/den, magnitude in [0, pi].
struct PiFraction {
    int num = 0;
    int den = 1;

    std::string label() const;  // "pi/4", "2pi/3", "0", "pi"
    double radians() const;
    bool operator==(const PiFraction&) const = default;
};

// Exact classification of the rotation angle of A/sqrt(det A).
//
// cos(theta) = tau/(2 sqrt(delta)) is kept symbolically as the pair
// (tau, delta) plus a reduced radical string with square-free radicand, so
// table reproduction is exact rather than floating point. The sign of the
// angle is not decided here (the spectrum determines it up to absolute
// value); the signed angle comes from the similarity decomposition.
struct AngleClass {
    AngleKind kind = AngleKind::DegenerateRealSpectrum;
    std::optional<PiFraction> pi_fraction;  // set for the exact pi-fraction angles
    long long tau = 0;
    long long delta = 0;
    std::optional<Rational> cos_2theta;  // (tau^2 - 2 delta)/(2 delta); delta > 0 only
    double theta_abs = std::nan("");     // radians in [0, pi]; NaN when no angle exists
    std::string cos_theta_radical;       // e.g. "sqrt(2)/4"; empty when undefined
    std::string degenerate_reason;       // set iff kind == DegenerateRealSpectrum

    bool has_angle() const { return !std::isnan(theta_abs); }
};

AngleClass classify_angle(long long tau, long long delta);
AngleClass classify_angle(const IntMatrix2& m);

// Niven gate: theta commensurable to pi iff cos(2 theta) in {0, +-1/2, +-1}
// as an exact rational. Requires a rotational input.
bool is_commensurable(long long tau, long long delta);
bool is_commensurable(const IntMatrix2& m);

// cos(theta) = tau/(2 sqrt(delta)) reduced to "p*sqrt(r)/q" with r square-free
// and p/q in lowest terms. Requires delta > 0.
std::string cos_theta_radical(long long tau, long long delta);

struct AngleTableRow {
    long long det = 0;
    long long trace = 0;
    bool applicable = true;  // false iff trace^2 > 4 det (no angle at all)
    AngleClass angle;
};

// One row per (det, trace) with 1 <= det <= det_max, 0 <= trace <= trace_max,
// det-major order.
std::vector<AngleTableRow> angle_table(long long det_max, long long trace_max);

// All integer matrices with entries in [-bound, bound], the given determinant
// and trace, in lexicographic order on (a, b, c, d).
std::vector<IntMatrix2> enumerate_matrices(long long det, long long trace, long long bound);

}  // namespace rotdil
