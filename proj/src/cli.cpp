#include "rotdil/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rotdil/errors.hpp"
#include "rotdil/jsonio.hpp"
#include "rotdil/quadform.hpp"
#include "rotdil/similarity.hpp"

namespace rotdil::cli {

namespace {

std::string fmt10(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

long long parse_int_token(const std::string& raw) {
    const std::string tok = trim(raw);
    long long value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || tok.empty()) {
        throw InputError("invalid integer '" + raw + "' in matrix text");
    }
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

const char* kind_string(AngleKind kind) {
    switch (kind) {
        case AngleKind::SpecialPiFraction: return "special_pi_fraction";
        case AngleKind::Incommensurable: return "incommensurable";
        case AngleKind::DegenerateRealSpectrum: return "degenerate_real_spectrum";
    }
    return "?";
}

// Exact label for a classified angle: "pi/4", "0", "arccos(sqrt(2)/4)".
std::string exact_label(const AngleClass& cls) {
    if (cls.pi_fraction) return cls.pi_fraction->label();
    if (cls.kind == AngleKind::Incommensurable) {
        return "arccos(" + cls.cos_theta_radical + ")";
    }
    return "";
}

nlohmann::ordered_json mat_json(const Mat2& m) {
    return nlohmann::ordered_json::array(
        {nlohmann::ordered_json::array({m.a11, m.a12}),
         nlohmann::ordered_json::array({m.a21, m.a22})});
}

std::string mat_human(const Mat2& m) {
    return "[[" + fmt10(m.a11) + ", " + fmt10(m.a12) + "], [" + fmt10(m.a21) + ", " +
           fmt10(m.a22) + "]]";
}

}  // namespace

IntMatrix2 parse_matrix(const std::string& text) {
    const auto rows = split(text, ';');
    if (rows.size() != 2) {
        throw InputError("matrix text must be \"a,b;c,d\" (two rows), got \"" + text + "\"");
    }
    const auto top = split(rows[0], ',');
    const auto bottom = split(rows[1], ',');
    if (top.size() != 2 || bottom.size() != 2) {
        throw InputError("matrix text must be \"a,b;c,d\" (two entries per row), got \"" +
                         text + "\"");
    }
    return {parse_int_token(top[0]), parse_int_token(top[1]), parse_int_token(bottom[0]),
            parse_int_token(bottom[1])};
}

std::string analyze_output(const IntMatrix2& m, bool json) {
    const auto [tau, delta] = trace_det(m);
    const bool rotational = is_rotational(m);
    const AngleClass cls = classify_angle(m);

    Decomposition dec;
    QuadraticForm w;
    std::optional<IntQuadraticForm> integer_form;
    if (rotational) {
        dec = decompose(m);
        const Mat2 wm = dec.q_inv * dec.q_inv;
        w = {wm.a11, 0.5 * (wm.a12 + wm.a21), wm.a22};
        integer_form = rationalize_form(w, 64);
    }
    const bool commensurable_known = cls.has_angle();
    const bool commensurable =
        commensurable_known && (rotational ? is_commensurable(m) : true);

    if (json) {
        nlohmann::ordered_json j;
        j["matrix"] = {m.a, m.b, m.c, m.d};
        j["det"] = delta;
        j["trace"] = tau;
        j["rotational"] = rotational;
        nlohmann::ordered_json angle;
        angle["kind"] = kind_string(cls.kind);
        angle["pi_fraction"] =
            cls.pi_fraction ? nlohmann::ordered_json(cls.pi_fraction->label()) : nullptr;
        angle["theta_abs"] =
            cls.has_angle() ? nlohmann::ordered_json(cls.theta_abs) : nullptr;
        angle["theta_signed"] =
            rotational ? nlohmann::ordered_json(dec.theta_signed) : nullptr;
        angle["cos_theta_radical"] = cls.cos_theta_radical.empty()
                                         ? nlohmann::ordered_json(nullptr)
                                         : nlohmann::ordered_json(cls.cos_theta_radical);
        angle["cos_2theta"] =
            cls.cos_2theta ? nlohmann::ordered_json(cls.cos_2theta->str()) : nullptr;
        angle["commensurable"] =
            commensurable_known ? nlohmann::ordered_json(commensurable) : nullptr;
        j["angle"] = angle;
        j["Q"] = rotational ? mat_json(dec.q) : nlohmann::ordered_json(nullptr);
        j["R"] = rotational ? mat_json(dec.r) : nlohmann::ordered_json(nullptr);
        if (rotational) {
            nlohmann::ordered_json res;
            res["similarity"] = dec.residual_similarity;
            res["orthogonality"] = dec.residual_orthogonality;
            j["residuals"] = res;
        } else {
            j["residuals"] = nullptr;
        }
        j["invariant_form"] = rotational ? mat_json(w.mat()) : nlohmann::ordered_json(nullptr);
        j["integer_form"] = integer_form
                                ? nlohmann::ordered_json::array(
                                      {nlohmann::ordered_json::array(
                                           {integer_form->m11, integer_form->m12}),
                                       nlohmann::ordered_json::array(
                                           {integer_form->m12, integer_form->m22})})
                                : nlohmann::ordered_json(nullptr);
        return dump_canonical(j) + "\n";
    }

    std::ostringstream out;
    out << "matrix:          " << matrix_text(m) << "\n";
    out << "determinant:     " << delta << "\n";
    out << "trace:           " << tau << "\n";
    out << "rotational:      " << (rotational ? "yes" : "no") << "\n";
    out << "angle kind:      " << kind_string(cls.kind) << "\n";
    if (!cls.degenerate_reason.empty()) out << "reason:          " << cls.degenerate_reason << "\n";
    const std::string exact = exact_label(cls);
    if (!exact.empty()) out << "angle exact:     " << exact << "\n";
    if (!cls.cos_theta_radical.empty())
        out << "cos(theta):      " << cls.cos_theta_radical << "\n";
    if (cls.cos_2theta) out << "cos(2 theta):    " << cls.cos_2theta->str() << "\n";
    if (commensurable_known)
        out << "commensurable:   " << (commensurable ? "yes" : "no") << "\n";
    if (cls.has_angle()) {
        out << "|theta|:         " << fmt10(cls.theta_abs) << " rad ("
            << fmt10(cls.theta_abs * 180.0 / std::numbers::pi) << " deg)\n";
    }
    if (rotational) {
        out << "theta signed:    " << fmt10(dec.theta_signed) << " rad\n";
        out << "Q:               " << mat_human(dec.q) << "\n";
        out << "R:               " << mat_human(dec.r) << "\n";
        out << "residuals:       similarity " << fmt10(dec.residual_similarity)
            << ", orthogonality " << fmt10(dec.residual_orthogonality) << "\n";
        out << "invariant form:  " << mat_human(w.mat()) << "\n";
        if (integer_form) {
            out << "integer form:    [[" << integer_form->m11 << ", " << integer_form->m12
                << "], [" << integer_form->m12 << ", " << integer_form->m22 << "]]\n";
        } else {
            out << "integer form:    not found (denominator bound 64)\n";
        }
    }
    return out.str();
}

std::string table_output(long long det_max, long long trace_max, bool csv) {
    const auto rows = angle_table(det_max, trace_max);
    if (csv) {
        std::string out = "det,trace,angle_kind,angle_exact,angle_radians,commensurable\n";
        for (const auto& row : rows) {
            out += std::to_string(row.det) + "," + std::to_string(row.trace) + ",";
            if (!row.applicable) {
                out += "inapplicable,,,\n";
                continue;
            }
            out += std::string(kind_string(row.angle.kind)) + "," + exact_label(row.angle) +
                   "," + format_real(row.angle.theta_abs) + ",";
            const bool comm = is_rotational(row.trace, row.det)
                                  ? is_commensurable(row.trace, row.det)
                                  : true;  // trace^2 = 4 det: angle 0
            out += comm ? "true" : "false";
            out += "\n";
        }
        return out;
    }

    // Human-readable grid, one line per determinant.
    std::vector<std::string> cells;
    size_t width = 8;
    for (const auto& row : rows) {
        std::string cell = row.applicable ? exact_label(row.angle) : "-";
        if (row.applicable && row.angle.kind == AngleKind::Incommensurable)
            cell = "+-" + cell;
        else if (row.applicable && row.angle.kind == AngleKind::SpecialPiFraction)
            cell = "+-" + cell;
        width = std::max(width, cell.size() + 2);
        cells.push_back(std::move(cell));
    }
    std::ostringstream out;
    out << std::string(8, ' ');
    for (long long t = 0; t <= trace_max; ++t) {
        std::string head = "tr " + std::to_string(t);
        out << head << std::string(width - head.size(), ' ');
    }
    out << "\n";
    size_t idx = 0;
    for (long long det = 1; det <= det_max; ++det) {
        std::string head = "det " + std::to_string(det);
        out << head << std::string(8 - head.size(), ' ');
        for (long long t = 0; t <= trace_max; ++t, ++idx) {
            out << cells[idx] << std::string(width - cells[idx].size(), ' ');
        }
        out << "\n";
    }
    return out.str();
}

std::string enumerate_output(long long det, long long trace, long long bound, bool json) {
    const auto matrices = enumerate_matrices(det, trace, bound);
    if (json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& m : matrices) arr.push_back({m.a, m.b, m.c, m.d});
        return dump_canonical(arr) + "\n";
    }
    std::string out;
    for (const auto& m : matrices) {
        out += std::to_string(m.a) + "," + std::to_string(m.b) + ";" + std::to_string(m.c) +
               "," + std::to_string(m.d) + "\n";
    }
    return out;
}

std::string ellipse_output(const IntMatrix2& m, double level, bool json) {
    const QuadraticForm w = invariant_form(m);  // gate
    const EllipseGeometry geo = ellipse_geometry(w, level);
    const auto integer_form = rationalize_form(w, 64);
    if (json) {
        nlohmann::ordered_json j;
        j["matrix"] = {m.a, m.b, m.c, m.d};
        j["level"] = level;
        j["semi_major"] = geo.semi_major;
        j["semi_minor"] = geo.semi_minor;
        j["orientation"] = geo.orientation;
        j["invariant_form"] = mat_json(w.mat());
        j["integer_form"] =
            integer_form
                ? nlohmann::ordered_json::array(
                      {nlohmann::ordered_json::array({integer_form->m11, integer_form->m12}),
                       nlohmann::ordered_json::array({integer_form->m12, integer_form->m22})})
                : nlohmann::ordered_json(nullptr);
        return dump_canonical(j) + "\n";
    }
    std::ostringstream out;
    out << "matrix:          " << matrix_text(m) << "\n";
    out << "invariant form:  " << mat_human(w.mat()) << "  (det 1)\n";
    out << "level:           " << fmt10(level) << "\n";
    out << "semi-major:      " << fmt10(geo.semi_major) << "\n";
    out << "semi-minor:      " << fmt10(geo.semi_minor) << "\n";
    out << "orientation:     " << fmt10(geo.orientation) << " rad\n";
    if (integer_form) {
        out << "integer form:    [[" << integer_form->m11 << ", " << integer_form->m12
            << "], [" << integer_form->m12 << ", " << integer_form->m22 << "]]\n";
    } else {
        out << "integer form:    not found (denominator bound 64)\n";
    }
    return out.str();
}

std::string orbit_output(const IntMatrix2& m, int count, bool csv) {
    require_rotational(m, "orbit");
    const Decomposition dec = decompose(m);
    const Orbit orbit = orbit_angles(dec.theta_signed, count);
    std::string out;
    if (csv) {
        out = "j,angle_radians,angle_degrees\n";
        for (size_t i = 0; i < orbit.angles.size(); ++i) {
            out += std::to_string(i + 1) + "," + format_real(orbit.angles[i]) + "," +
                   format_real(orbit.angles[i] * 180.0 / std::numbers::pi) + "\n";
        }
        return out;
    }
    out = "theta_signed = " + fmt10(dec.theta_signed) + " rad\n";
    for (size_t i = 0; i < orbit.angles.size(); ++i) {
        out += "j=" + std::to_string(i + 1) + "  " + fmt10(orbit.angles[i]) + " rad  " +
               fmt10(orbit.angles[i] * 180.0 / std::numbers::pi) + " deg\n";
    }
    return out;
}

RenderArtifacts render_artifacts(const Mask& mask, const IntMatrix2& m, const GridSpec& spec,
                                 int depth) {
    const Grid grid = render_grid(mask, m, spec, depth);
    double lo = grid.values[0], hi = grid.values[0];
    for (double v : grid.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    RenderArtifacts art;
    std::string header = "P5\n" + std::to_string(grid.n) + " " + std::to_string(grid.n) +
                         "\n255\n";
    art.pgm.assign(header.begin(), header.end());
    const double span = hi - lo;
    for (int iy = grid.n - 1; iy >= 0; --iy) {  // image top = largest coordinate
        for (int ix = 0; ix < grid.n; ++ix) {
            const double v = grid.at(ix, iy);
            const long byte = span > 0.0 ? std::lround(255.0 * (v - lo) / span) : 0;
            art.pgm.push_back(static_cast<unsigned char>(std::clamp(byte, 0L, 255L)));
        }
    }

    nlohmann::ordered_json sidecar;
    sidecar["min"] = lo;
    sidecar["max"] = hi;
    sidecar["mode"] =
        spec.target == GridTarget::FrequencyMagnitude ? "frequency" : "spatial";
    sidecar["grid"] = spec.n;
    sidecar["extent"] = spec.extent;
    sidecar["depth"] = depth;
    art.sidecar_json = dump_canonical(sidecar) + "\n";
    return art;
}

void write_render(const RenderArtifacts& art, const std::string& out_path) {
    std::ofstream img(out_path, std::ios::binary);
    if (!img) throw std::runtime_error("cannot write image file: " + out_path);
    img.write(reinterpret_cast<const char*>(art.pgm.data()),
              static_cast<std::streamsize>(art.pgm.size()));
    std::ofstream side(out_path + ".json", std::ios::binary);
    if (!side) throw std::runtime_error("cannot write sidecar file: " + out_path + ".json");
    side << art.sidecar_json;
}

VerifyOutcome run_verify(const Mask& mask, const IntMatrix2& m, int j_prime, int samples,
                         std::uint64_t seed, int depth, double tol) {
    VerifyOutcome outcome;
    const TwoAngleCheck check = verify_two_angle(mask, m, j_prime, samples, seed, depth);
    outcome.two_angle_residual = check.max_residual;
    outcome.power_residual = power_identity_residual(m, j_prime);
    outcome.vartheta = check.vartheta;
    outcome.j_prime = j_prime;
    outcome.tol = tol;
    outcome.pass = outcome.two_angle_residual <= tol && outcome.power_residual <= tol;
    return outcome;
}

std::string verify_output(const VerifyOutcome& o) {
    std::ostringstream out;
    out << "j':                      " << o.j_prime << "\n";
    out << "vartheta:                " << fmt10(o.vartheta)
        << " rad (convention: vartheta = -j' * theta_signed)\n";
    out << "two-angle max residual:  " << format_real(o.two_angle_residual) << "\n";
    out << "power identity residual: " << format_real(o.power_residual) << "\n";
    out << "tolerance:               " << format_real(o.tol) << "\n";
    out << (o.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace rotdil::cli
