#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sympfib/checks.hpp"
#include "sympfib/json_io.hpp"

namespace {

using sympfib::Json;

struct GlobalConfig {
    int n = 2;
    double tau_sym = 1e-9;
    double tau_act = 1e-8;
    double tau_cov = 1e-8;
    int fiber_exponent = 1;
    std::uint64_t seed = 42;
    std::uint64_t samples = 500;
    std::string config_path;
    std::string out_path;
    std::string in_path;  // "-" = stdin
};

Json read_json_input(const GlobalConfig& cfg) {
    std::string text;
    if (cfg.in_path.empty() || cfg.in_path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(cfg.in_path);
        if (!f) throw sympfib::InvariantViolation("cannot open input file: " + cfg.in_path);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    return Json::parse(text);
}

void apply_config_file(GlobalConfig& cfg) {
    if (cfg.config_path.empty()) {
        if (const char* env = std::getenv("SYMPFIB_CONFIG")) cfg.config_path = env;
        if (cfg.config_path.empty()) return;
    }
    std::ifstream f(cfg.config_path);
    if (!f) throw sympfib::InvariantViolation("cannot open config file: " + cfg.config_path);
    const Json j = Json::parse(f);
    cfg.n = j.value("n", cfg.n);
    cfg.tau_sym = j.value("tau_sym", cfg.tau_sym);
    cfg.tau_act = j.value("tau_act", cfg.tau_act);
    cfg.tau_cov = j.value("tau_cov", cfg.tau_cov);
    cfg.fiber_exponent = j.value("fiber_exponent", cfg.fiber_exponent);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.samples = j.value("samples", cfg.samples);
}

int emit_report(const GlobalConfig& cfg, const std::string& command, const Json& inputs,
                const Json& outputs, const Json& residuals, bool pass) {
    Json report{{"command", command},
                {"inputs", inputs},
                {"outputs", outputs},
                {"residuals", residuals},
                {"pass", pass}};
    const std::string text = report.dump(2) + "\n";
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        f << text;
    } else {
        std::cout << text;
    }
    return pass ? 0 : 1;
}

std::pair<double, double> parse_range(const std::string& range) {
    const auto dots = range.find("..");
    if (dots == std::string::npos)
        throw sympfib::InvariantViolation("range must look like \"a..b\"");
    return {std::stod(range.substr(0, dots)), std::stod(range.substr(dots + 2))};
}

int run_suite(const GlobalConfig& cfg) {
    namespace ck = sympfib::checks;
    const int s = static_cast<int>(cfg.samples);
    Json residuals;
    bool pass = true;
    auto record = [&](const std::string& name, double value, double threshold) {
        residuals[name] = value;
        if (!(value <= threshold)) pass = false;
    };

    const auto mob = ck::mobius_axioms(cfg.n, cfg.seed, s, cfg.tau_act);
    record("mobius_composition", mob.composition_residual, cfg.tau_act);
    record("stabilizer_recover", mob.recover_residual, 1e-6);
    record("stabilizer_false_positives", mob.false_positives, 0);
    record("stabilizer_false_negatives", mob.false_negatives, 0);

    const auto nb = ck::normal_bundle_sweep(cfg.seed, s, std::min(s, 100));
    record("normal_bundle_off_span", nb.max_off_residual, 1e-8);
    record("normal_bundle_coefficient", nb.max_coeff_rel_err, 1e-8);

    const auto pf = ck::pushforward_generator_cases(cfg.seed, std::min(s, 100));
    record("pushforward_omega", pf.omega_rel_err, 1e-10);
    record("pushforward_diag", pf.diag_rel_err, 1e-10);
    record("pushforward_shear", pf.shear_rel_err, 1e-10);

    const auto cov = ck::cover_soundness(cfg.n, cfg.seed, s);
    record("cover_invariant", cov.invariant_residual, cfg.tau_cov);
    record("cover_associativity", cov.assoc_residual, 1e-7);
    record("center_commute", cov.center_commute_residual, cfg.tau_cov);
    record("center_parity_relation", cov.parity_relation_err, 1e-12);

    const auto ex = ck::exact_sequence(cfg.n, cfg.seed, s);
    record("exact_sequence_kernel", ex.kernel_residual, 1e-8);
    record("eta_homomorphism", ex.hom_residual, 1e-8);
    record("descended_action", ex.descend_residual, 1e-8);

    record("well_definedness", ck::well_definedness_residual(cfg.n, cfg.seed, std::min(s, 200)),
           1e-8);

    const std::uint64_t mc_samples = std::max<std::uint64_t>(cfg.samples * 100, 20000);
    const auto meas = ck::measure_invariance(cfg.seed, 5, mc_samples);
    record("measure_invariance", meas.max_residual,
           5.0 / std::sqrt(static_cast<double>(mc_samples)) + 5e-3);

    residuals["measure_decay_ratio"] = meas.decay_ratio;

    return emit_report(cfg, "suite",
                       Json{{"seed", cfg.seed}, {"samples", cfg.samples}, {"n", cfg.n}},
                       Json::object(), residuals, pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations in Sp(2n,R), its universal cover, the Siegel upper "
                 "half-space, and the fibered central extension"};
    app.require_subcommand(1);

    GlobalConfig cfg;
    app.add_option("--n", cfg.n, "block size n");
    app.add_option("--tau-sym", cfg.tau_sym, "symplectic membership tolerance");
    app.add_option("--tau-act", cfg.tau_act, "action residual tolerance");
    app.add_option("--tau-cov", cfg.tau_cov, "cover invariant tolerance");
    app.add_option("--fiber-exponent", cfg.fiber_exponent, "power of det(CZ+D) on the fiber");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--samples", cfg.samples, "sample count for randomized checks");
    app.add_option("--config", cfg.config_path, "JSON config file");
    app.add_option("--out", cfg.out_path, "write the report here instead of stdout");
    app.add_option("--in", cfg.in_path, "JSON input file (default stdin)");

    std::string range = "-1..1";
    std::string descriptor_path;

    auto* c_verify = app.add_subcommand("verify-symplectic", "membership test for Sp(2n,R)");
    auto* c_act = app.add_subcommand("act", "Moebius action on a Siegel point");
    auto* c_push = app.add_subcommand("pushforward", "tangent map of the Moebius action");
    auto* c_nb = app.add_subcommand("check-normal-bundle", "n=2 normal bundle invariance");
    auto* c_lift = app.add_subcommand("lift", "basepoint lift to the universal cover");
    auto* c_cmul = app.add_subcommand("cover-mul", "product in the universal cover");
    auto* c_center = app.add_subcommand("center", "enumerate center elements");
    c_center->add_option("--range", range, "lift index range a..b");
    auto* c_emul = app.add_subcommand("ext-mul", "product in the central extension");
    auto* c_eact = app.add_subcommand("ext-act", "extended action on the model space");
    auto* c_eta = app.add_subcommand("eta", "projection to PSp(2n,R)");
    auto* c_proj = app.add_subcommand("project", "bundle projection to the Siegel space");
    auto* c_chi = app.add_subcommand("euler-char", "exact chi(Sp(2n,Z))");
    auto* c_vol = app.add_subcommand("volume", "Seifert-like volume from a descriptor");
    c_vol->add_option("--descriptor", descriptor_path, "descriptor JSON file");
    auto* c_meas = app.add_subcommand("measure-check", "product measure invariance");
    auto* c_suite = app.add_subcommand("suite", "full property battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    using namespace sympfib;
    try {
        apply_config_file(cfg);

        if (c_chi->parsed()) {
            const Rational chi = euler_char_sp(cfg.n);
            return emit_report(cfg, "euler-char", Json{{"n", cfg.n}},
                               Json{{"chi", format_rational(chi)}}, Json::object(), true);
        }
        if (c_center->parsed()) {
            const auto [lo, hi] = parse_range(range);
            Json out = Json::array();
            for (const auto& z : center_elements(cfg.n, lo, hi))
                out.push_back(Json{{"sign", z.sign}, {"k", z.k}, {"iota", iota(z, cfg.n)}});
            return emit_report(cfg, "center", Json{{"n", cfg.n}, {"range", range}},
                               Json{{"elements", out}}, Json::object(), true);
        }
        if (c_suite->parsed()) return run_suite(cfg);

        if (c_vol->parsed()) {
            Json j;
            if (!descriptor_path.empty()) {
                std::ifstream f(descriptor_path);
                if (!f) throw InvariantViolation("cannot open descriptor: " + descriptor_path);
                j = Json::parse(f);
            } else {
                j = read_json_input(cfg);
            }
            const VolumeResult v = seifert_volume(seifert_from_json(j));
            return emit_report(cfg, "volume", j,
                               Json{{"volume", format_rational(v.volume)},
                                    {"signed_value", format_rational(v.signed_value)},
                                    {"sign_convention_applied", v.sign_convention_applied}},
                               Json::object(), true);
        }

        const Json in = read_json_input(cfg);

        if (c_verify->parsed()) {
            const RealMatrix M = matrix_from_json(in.at("matrix"));
            const double res = symplectic_residual(M);
            return emit_report(cfg, "verify-symplectic", in, Json{{"symplectic", res <= cfg.tau_sym}},
                               Json{{"membership", res}}, res <= cfg.tau_sym);
        }
        if (c_act->parsed()) {
            const RealMatrix M = matrix_from_json(in.at("matrix"));
            const SiegelPoint Z = siegel_from_json(in.at("Z"), cfg.tau_act);
            return emit_report(cfg, "act", in, Json{{"Z", siegel_to_json(mobius(M, Z, cfg.tau_act))}},
                               Json::object(), true);
        }
        if (c_push->parsed()) {
            const RealMatrix M = matrix_from_json(in.at("matrix"));
            const SiegelPoint Z = siegel_from_json(in.at("Z"), cfg.tau_act);
            const ComplexMatrix V = complex_matrix_from_json(in.at("V"));
            const TangentVector W = pushforward(M, TangentVector{V, Z});
            return emit_report(cfg, "pushforward", in,
                               Json{{"V", complex_matrix_to_json(W.V)},
                                    {"base", siegel_to_json(W.base)}},
                               Json::object(), true);
        }
        if (c_nb->parsed()) {
            const RealMatrix M = matrix_from_json(in.at("matrix"));
            const SiegelPoint Z = siegel_from_json(in.at("Z"), cfg.tau_act);
            const NormalBundleResult res = normal_bundle_check(M, Z);
            return emit_report(cfg, "check-normal-bundle", in,
                               Json{{"coefficient_re", res.coefficient.real()},
                                    {"coefficient_im", res.coefficient.imag()}},
                               Json{{"off_span", res.residual}}, res.residual <= cfg.tau_act);
        }
        if (c_lift->parsed()) {
            const RealMatrix M = matrix_from_json(in.at("matrix"));
            const CoverElement g = lift(M);
            return emit_report(cfg, "lift", in, cover_to_json(g),
                               Json{{"cover_invariant", cover_invariant_residual(g)}}, true);
        }
        if (c_cmul->parsed()) {
            const CoverElement g = cover_mul(cover_from_json(in.at("g1")),
                                             cover_from_json(in.at("g2")));
            return emit_report(cfg, "cover-mul", in, cover_to_json(g),
                               Json{{"cover_invariant", cover_invariant_residual(g)}},
                               cover_invariant_residual(g) <= cfg.tau_cov);
        }
        if (c_emul->parsed()) {
            const ExtElement e = ext_mul(ext_from_json(in.at("e1")), ext_from_json(in.at("e2")));
            return emit_report(cfg, "ext-mul", in, ext_to_json(e), Json::object(), true);
        }
        if (c_eact->parsed()) {
            const ExtElement e = ext_from_json(in.at("e"));
            const ModelPoint p = model_point_from_json(in.at("p"), cfg.tau_act);
            return emit_report(cfg, "ext-act", in,
                               model_point_to_json(ext_act(e, p, cfg.fiber_exponent)),
                               Json::object(), true);
        }
        if (c_eta->parsed()) {
            const ExtElement e = ext_from_json(in.at("e"));
            return emit_report(cfg, "eta", in, Json{{"matrix", matrix_to_json(eta(e))}},
                               Json::object(), true);
        }
        if (c_proj->parsed()) {
            const ModelPoint p = model_point_from_json(in.at("p"), cfg.tau_act);
            return emit_report(cfg, "project", in,
                               Json{{"Z", siegel_to_json(bundle_projection(p))}},
                               Json::object(), true);
        }
        if (c_meas->parsed()) {
            const RealMatrix M = in.contains("matrix")
                                     ? matrix_from_json(in.at("matrix"))
                                     : RealMatrix(RealMatrix::Identity(2 * cfg.n, 2 * cfg.n));
            const double r = in.value("r", 0.0);
            ProductBox box = default_box_n2();
            if (in.contains("box")) {
                const auto& b = in.at("box");
                const auto lo = b.at("lo").get<std::vector<double>>();
                const auto hi = b.at("hi").get<std::vector<double>>();
                box.lo = Eigen::Map<const Eigen::VectorXd>(lo.data(), lo.size());
                box.hi = Eigen::Map<const Eigen::VectorXd>(hi.data(), hi.size());
                box.fiber_lo = b.value("fiber_lo", 0.0);
                box.fiber_hi = b.value("fiber_hi", 1.0);
            }
            const std::uint64_t samples = in.value("samples", cfg.samples);
            const auto res = product_measure_check(cfg.n, M, r, box, samples, cfg.seed);
            const double threshold = 3.0 / std::sqrt(static_cast<double>(samples)) + 1e-3;
            return emit_report(cfg, "measure-check", in,
                               Json{{"measure_e", res.measure_e},
                                    {"measure_preimage", res.measure_preimage},
                                    {"samples", res.samples}},
                               Json{{"relative", res.residual}}, res.residual <= threshold);
        }
        std::cerr << "unknown subcommand\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return 3;
    } catch (const sympfib::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const sympfib::DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return 4;
    } catch (const sympfib::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    }
}
