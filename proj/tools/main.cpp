#include <cstdint>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "rotdil/cli.hpp"
#include "rotdil/errors.hpp"
#include "rotdil/refine.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 input parse error,
// 3 precondition (gate) failure, 4 mask file error.
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitGate = 3;
constexpr int kExitMask = 4;
constexpr int kExitInternal = 5;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotation properties of 2x2 integer dilation matrices"};
    app.require_subcommand(1);
    int exit_code = 0;

    // analyze
    std::string analyze_matrix;
    bool analyze_json = false;
    auto* analyze = app.add_subcommand("analyze", "classify a matrix and decompose it");
    analyze->add_option("matrix", analyze_matrix, "matrix as \"a,b;c,d\"")->required();
    analyze->add_flag("--json", analyze_json, "machine-readable output");
    analyze->callback([&] {
        std::cout << rotdil::cli::analyze_output(rotdil::cli::parse_matrix(analyze_matrix),
                                                 analyze_json);
    });

    // table
    long long det_max = 5, trace_max = 4;
    bool table_csv = false;
    auto* table = app.add_subcommand("table", "rotation angles per determinant and trace");
    table->add_option("--det-max", det_max, "largest determinant (>= 1)")
        ->check(CLI::Range(1LL, 1000000LL));
    table->add_option("--trace-max", trace_max, "largest trace (>= 0)")
        ->check(CLI::Range(0LL, 1000000LL));
    table->add_flag("--csv", table_csv, "CSV output");
    table->callback(
        [&] { std::cout << rotdil::cli::table_output(det_max, trace_max, table_csv); });

    // enumerate
    long long enum_det = 0, enum_trace = 0, enum_bound = 3;
    bool enum_json = false;
    auto* enumerate = app.add_subcommand("enumerate",
                                         "integer matrices with given determinant and trace");
    enumerate->add_option("--det", enum_det, "determinant")->required();
    enumerate->add_option("--trace", enum_trace, "trace")->required();
    enumerate->add_option("--bound", enum_bound, "entry bound (>= 1)")
        ->check(CLI::Range(1LL, 1000LL));
    enumerate->add_flag("--json", enum_json, "JSON array output");
    enumerate->callback([&] {
        std::cout << rotdil::cli::enumerate_output(enum_det, enum_trace, enum_bound, enum_json);
    });

    // ellipse
    std::string ellipse_matrix;
    double ellipse_level = 1.0;
    bool ellipse_json = false;
    auto* ellipse = app.add_subcommand("ellipse", "invariant ellipse geometry");
    ellipse->add_option("matrix", ellipse_matrix, "matrix as \"a,b;c,d\"")->required();
    ellipse->add_option("--level", ellipse_level, "ellipse level constant C > 0")
        ->check(CLI::PositiveNumber);
    ellipse->add_flag("--json", ellipse_json, "machine-readable output");
    ellipse->callback([&] {
        std::cout << rotdil::cli::ellipse_output(rotdil::cli::parse_matrix(ellipse_matrix),
                                                 ellipse_level, ellipse_json);
    });

    // orbit
    std::string orbit_matrix;
    int orbit_count = 16;
    bool orbit_csv = false;
    auto* orbit = app.add_subcommand("orbit", "rotation orbit j*theta mod 2pi");
    orbit->add_option("matrix", orbit_matrix, "matrix as \"a,b;c,d\"")->required();
    orbit->add_option("-n,--count", orbit_count, "orbit length (>= 1)")
        ->check(CLI::Range(1, 100000000));
    orbit->add_flag("--csv", orbit_csv, "CSV output");
    orbit->callback([&] {
        std::cout << rotdil::cli::orbit_output(rotdil::cli::parse_matrix(orbit_matrix),
                                               orbit_count, orbit_csv);
    });

    // render
    std::string render_matrix, render_mask, render_out;
    std::string render_mode = "freq";
    int render_grid_n = 64, render_depth = 30;
    double render_extent = 4.0 * std::numbers::pi;
    auto* render = app.add_subcommand("render", "render |phi_hat| or its reconstruction as PGM");
    render->add_option("matrix", render_matrix, "matrix as \"a,b;c,d\"")->required();
    render->add_option("--mask", render_mask, "mask JSON file")->required();
    render->add_option("--grid", render_grid_n, "samples per axis (power of two)");
    render->add_option("--extent", render_extent, "grid covers [-extent, extent]^2")
        ->check(CLI::PositiveNumber);
    render->add_option("--depth", render_depth, "truncation depth J (>= 1)")
        ->check(CLI::Range(1, 10000));
    render->add_option("--mode", render_mode, "freq or spatial")
        ->check(CLI::IsMember({"freq", "spatial"}));
    render->add_option("--out", render_out, "output PGM path")->required();
    render->callback([&] {
        const auto matrix = rotdil::cli::parse_matrix(render_matrix);
        const rotdil::Mask mask = rotdil::load_mask(render_mask);
        rotdil::GridSpec spec;
        spec.n = render_grid_n;
        spec.extent = render_extent;
        spec.target = render_mode == "freq" ? rotdil::GridTarget::FrequencyMagnitude
                                            : rotdil::GridTarget::SpatialReconstruction;
        const auto art = rotdil::cli::render_artifacts(mask, matrix, spec, render_depth);
        rotdil::cli::write_render(art, render_out);
        std::cout << "wrote " << render_out << " and " << render_out << ".json\n";
    });

    // verify
    std::string verify_matrix, verify_mask;
    int verify_jprime = 1, verify_samples = 200, verify_depth = 40;
    std::uint64_t verify_seed = 12345;
    double verify_tol = 1e-8;
    auto* verify = app.add_subcommand("verify", "check the two-angle relation numerically");
    verify->add_option("matrix", verify_matrix, "matrix as \"a,b;c,d\"")->required();
    verify->add_option("--mask", verify_mask, "mask JSON file")->required();
    verify->add_option("--jprime", verify_jprime, "iteration count j' (>= 1)")
        ->check(CLI::Range(1, 1000));
    verify->add_option("--samples", verify_samples, "number of sample points (>= 1)")
        ->check(CLI::Range(1, 100000000));
    verify->add_option("--seed", verify_seed, "RNG seed (64-bit)");
    verify->add_option("--depth", verify_depth, "truncation depth J (> j')")
        ->check(CLI::Range(2, 10000));
    verify->add_option("--tol", verify_tol, "residual tolerance")
        ->check(CLI::NonNegativeNumber);
    verify->callback([&] {
        const auto matrix = rotdil::cli::parse_matrix(verify_matrix);
        const rotdil::Mask mask = rotdil::load_mask(verify_mask);
        const auto outcome = rotdil::cli::run_verify(mask, matrix, verify_jprime,
                                                     verify_samples, verify_seed,
                                                     verify_depth, verify_tol);
        std::cout << "matrix:                  " << rotdil::matrix_text(matrix) << "\n"
                  << rotdil::cli::verify_output(outcome);
        if (!outcome.pass) exit_code = kExitVerifyFail;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    } catch (const rotdil::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const rotdil::GateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGate;
    } catch (const rotdil::MaskError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMask;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return exit_code;
}
