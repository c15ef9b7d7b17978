#include "rotdil/matrix2.hpp"

#include <numbers>
#include <numeric>

#include "rotdil/errors.hpp"

namespace rotdil {

std::string matrix_text(const IntMatrix2& m) {
    return "[[" + std::to_string(m.a) + ", " + std::to_string(m.b) + "], [" +
           std::to_string(m.c) + ", " + std::to_string(m.d) + "]]";
}

void require_rotational(long long tau, long long delta, const char* op) {
    if (delta <= 0) {
        throw GateError(std::string(op) + ": not rotational: det = " +
                        std::to_string(delta) + " must be positive");
    }
    if (tau * tau >= 4 * delta) {
        throw GateError(std::string(op) + ": not rotational: trace^2 = " +
                        std::to_string(tau * tau) + " must be less than 4*det = " +
                        std::to_string(4 * delta));
    }
}

void require_rotational(const IntMatrix2& m, const char* op) {
    require_rotational(m.trace(), m.det(), op);
}

std::string PiFraction::label() const {
    if (num == 0) return "0";
    std::string head = num == 1 ? "pi" : std::to_string(num) + "pi";
    if (den == 1) return head;
    return head + "/" + std::to_string(den);
}

double PiFraction::radians() const {
    return static_cast<double>(num) * std::numbers::pi / static_cast<double>(den);
}

// n = s^2 * r with r square-free; n >= 1.
static void square_free_split(long long n, long long& s, long long& r) {
    s = 1;
    r = n;
    for (long long i = 2; i * i <= r; ++i) {
        while (r % (i * i) == 0) {
            r /= i * i;
            s *= i;
        }
    }
}

std::string cos_theta_radical(long long tau, long long delta) {
    if (delta <= 0) throw InputError("cos_theta_radical requires det > 0");
    if (tau == 0) return "0";
    long long s = 1, r = delta;
    square_free_split(delta, s, r);
    // tau/(2 sqrt(delta)) = (tau*s) * sqrt(r) / (2*delta)
    const Rational coeff(tau * s, 2 * delta);
    if (r == 1) return coeff.str();
    std::string head;
    if (coeff.num == -1) {
        head = "-";
    } else if (coeff.num != 1) {
        head = std::to_string(coeff.num) + "*";
    }
    head += "sqrt(" + std::to_string(r) + ")";
    if (coeff.den == 1) return head;
    return head + "/" + std::to_string(coeff.den);
}

AngleClass classify_angle(long long tau, long long delta) {
    AngleClass out;
    out.tau = tau;
    out.delta = delta;
    if (delta <= 0) {
        out.kind = AngleKind::DegenerateRealSpectrum;
        out.degenerate_reason = "det = " + std::to_string(delta) +
                                " is not positive; no isotropic normalization";
        return out;
    }
    out.cos_2theta = Rational(tau * tau - 2 * delta, 2 * delta);
    const long long t2 = tau * tau;
    if (t2 > 4 * delta) {
        out.kind = AngleKind::DegenerateRealSpectrum;
        out.degenerate_reason = "trace^2 = " + std::to_string(t2) + " exceeds 4*det = " +
                                std::to_string(4 * delta) + "; real distinct spectrum";
        return out;
    }
    out.cos_theta_radical = cos_theta_radical(tau, delta);
    if (t2 == 4 * delta) {
        // Repeated real eigenvalue +-sqrt(delta): "rotation" by 0 or pi.
        out.kind = AngleKind::DegenerateRealSpectrum;
        out.degenerate_reason = "trace^2 = 4*det; repeated real eigenvalue";
        out.pi_fraction = tau > 0 ? PiFraction{0, 1} : PiFraction{1, 1};
        out.theta_abs = out.pi_fraction->radians();
        return out;
    }
    if (t2 == 0) {
        out.pi_fraction = PiFraction{1, 2};
    } else if (t2 == delta) {
        out.pi_fraction = tau > 0 ? PiFraction{1, 3} : PiFraction{2, 3};
    } else if (t2 == 2 * delta) {
        out.pi_fraction = tau > 0 ? PiFraction{1, 4} : PiFraction{3, 4};
    } else if (t2 == 3 * delta) {
        out.pi_fraction = tau > 0 ? PiFraction{1, 6} : PiFraction{5, 6};
    }
    if (out.pi_fraction) {
        out.kind = AngleKind::SpecialPiFraction;
        out.theta_abs = out.pi_fraction->radians();
    } else {
        out.kind = AngleKind::Incommensurable;
        const double c = static_cast<double>(tau) / (2.0 * std::sqrt(static_cast<double>(delta)));
        out.theta_abs = std::acos(std::clamp(c, -1.0, 1.0));
    }
    return out;
}

AngleClass classify_angle(const IntMatrix2& m) {
    return classify_angle(m.trace(), m.det());
}

bool is_commensurable(long long tau, long long delta) {
    require_rotational(tau, delta, "is_commensurable");
    const Rational c2(tau * tau - 2 * delta, 2 * delta);
    return c2 == Rational(0, 1) || c2 == Rational(1, 2) || c2 == Rational(-1, 2) ||
           c2 == Rational(1, 1) || c2 == Rational(-1, 1);
}

bool is_commensurable(const IntMatrix2& m) {
    return is_commensurable(m.trace(), m.det());
}

std::vector<AngleTableRow> angle_table(long long det_max, long long trace_max) {
    std::vector<AngleTableRow> rows;
    for (long long det = 1; det <= det_max; ++det) {
        for (long long tau = 0; tau <= trace_max; ++tau) {
            AngleTableRow row;
            row.det = det;
            row.trace = tau;
            row.applicable = tau * tau <= 4 * det;
            row.angle = classify_angle(tau, det);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<IntMatrix2> enumerate_matrices(long long det, long long trace, long long bound) {
    std::vector<IntMatrix2> out;
    if (bound < 1) return out;
    for (long long a = -bound; a <= bound; ++a) {
        const long long d = trace - a;
        if (d < -bound || d > bound) continue;
        const long long target = a * d - det;  // b*c must equal this
        for (long long b = -bound; b <= bound; ++b) {
            if (b == 0) {
                if (target != 0) continue;
                for (long long c = -bound; c <= bound; ++c) out.push_back({a, 0, c, d});
            } else if (target % b == 0) {
                const long long c = target / b;
                if (c >= -bound && c <= bound) out.push_back({a, b, c, d});
            }
        }
    }
    return out;
}

}  // namespace rotdil
