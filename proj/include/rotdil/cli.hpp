#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotdil/matrix2.hpp"
#include "rotdil/refine.hpp"

namespace rotdil::cli {

// Parses "a,b;c,d" (rows separated by semicolons). InputError names the
// offending token.
IntMatrix2 parse_matrix(const std::string& text);

// Full analysis report: classification, decomposition, invariant form,
// integer reconstruction. Human-readable table by default, canonical JSON
// with json = true. Non-rotational matrices still produce a report.
std::string analyze_output(const IntMatrix2& m, bool json);

// Angle table over 1 <= det <= det_max, 0 <= trace <= trace_max. CSV columns:
// det,trace,angle_kind,angle_exact,angle_radians,commensurable.
std::string table_output(long long det_max, long long trace_max, bool csv);

std::string enumerate_output(long long det, long long trace, long long bound, bool json);

std::string ellipse_output(const IntMatrix2& m, double level, bool json);

std::string orbit_output(const IntMatrix2& m, int count, bool csv);

struct RenderArtifacts {
    std::vector<unsigned char> pgm;  // P5, maxval 255, min-max scaled
    std::string sidecar_json;        // scaling bounds and render parameters
};

RenderArtifacts render_artifacts(const Mask& mask, const IntMatrix2& m, const GridSpec& spec,
                                 int depth);

// Writes the image to out_path and the sidecar to out_path + ".json".
void write_render(const RenderArtifacts& art, const std::string& out_path);

struct VerifyOutcome {
    double two_angle_residual = 0.0;
    double power_residual = 0.0;
    double vartheta = 0.0;
    int j_prime = 1;
    double tol = 0.0;
    bool pass = false;
};

VerifyOutcome run_verify(const Mask& mask, const IntMatrix2& m, int j_prime, int samples,
                         std::uint64_t seed, int depth, double tol);

std::string verify_output(const VerifyOutcome& outcome);

}  // namespace rotdil::cli
