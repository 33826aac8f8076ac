#include "polyloc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "polyloc/verify.hpp"

namespace polyloc::cli {

namespace {

struct Outcome {
    Json instances = Json::array();
    Json summary = Json::object();
    bool pass = true;
    std::optional<MatrixPolynomial> polynomial;
};

class UsageError : public Error {
public:
    using Error::Error;
};

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json config_echo(const RunConfig& c) {
    Json j;
    j["input"] = c.input.empty() ? Json(nullptr) : Json(c.input);
    j["n"] = c.n ? Json(*c.n) : Json(nullptr);
    j["m"] = c.m ? Json(*c.m) : Json(nullptr);
    j["r"] = c.r ? Json(*c.r) : Json(nullptr);
    j["k"] = c.k ? Json(*c.k) : Json(nullptr);
    j["trials"] = c.trials ? Json(*c.trials) : Json(nullptr);
    j["seed"] = c.seed;
    j["tol"] = c.tol ? Json(*c.tol) : Json(nullptr);
    j["format"] = format_name(c.format);
    return j;
}

void put_spectrum(Json& j, const Spectrum& s) {
    j["eigenvalues"] = complex_list_to_json(s.eigenvalues);
    j["moduli"] = s.moduli();
    j["residuals"] = s.residuals;
}

void put_eigenvalues(Json& j, const std::vector<Complex>& values) {
    j["eigenvalues"] = complex_list_to_json(values);
    std::vector<double> moduli;
    moduli.reserve(values.size());
    for (const auto& z : values) {
        moduli.push_back(std::abs(z));
    }
    j["moduli"] = moduli;
}

int require(const std::optional<int>& v, const char* flag) {
    if (!v) {
        throw UsageError(std::string("missing required option --") + flag);
    }
    return *v;
}

double require(const std::optional<double>& v, const char* flag) {
    if (!v) {
        throw UsageError(std::string("missing required option --") + flag);
    }
    return *v;
}

MatrixPolynomial require_input(const RunConfig& c) {
    if (c.input.empty()) {
        throw UsageError("missing required option --input");
    }
    return load_polynomial_file(c.input);
}

std::string seed_id(std::uint64_t seed) { return "seed=" + std::to_string(seed); }

// Either the --input polynomial or `trials` seeded random instances.
template <class Generate, class Check>
void for_each_instance(const RunConfig& c, Generate generate, Check check) {
    if (!c.input.empty()) {
        check(require_input(c), std::string("input"));
        return;
    }
    const int trials = c.trials.value_or(10);
    if (trials < 0) {
        throw UsageError("--trials must be nonnegative");
    }
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(t);
        check(generate(seed), seed_id(seed));
    }
}

// --- commands ----------------------------------------------------------------

Outcome cmd_eig(const RunConfig& c) {
    const MatrixPolynomial p = require_input(c);
    EigenOptions opts;
    opts.residual_tol = c.tol.value_or(opts.residual_tol);
    const Spectrum s = polyeig(p, opts);
    Outcome out;
    Json inst;
    inst["id"] = "input";
    inst["n"] = p.size();
    inst["m"] = p.degree();
    put_spectrum(inst, s);
    inst["min_modulus"] = s.min_modulus();
    inst["max_modulus"] = s.max_modulus();
    out.instances.push_back(std::move(inst));
    out.summary["count"] = s.count();
    return out;
}

Outcome cmd_bounds_cauchy(const RunConfig& c) {
    const MatrixPolynomial p = require_input(c);
    ScalarPolynomial scalar;
    if (p.size() == 1) {
        std::vector<Complex> coeffs;
        for (const auto& a : p.coeffs()) {
            coeffs.push_back(a(0, 0));
        }
        scalar = ScalarPolynomial(std::move(coeffs));
    } else {
        scalar = det_poly(p);
    }
    const double bound = cauchy_bound(scalar);
    const Spectrum roots = scalar_roots(scalar.coeffs());
    Outcome out;
    Json inst;
    inst["id"] = "input";
    inst["source"] = p.size() == 1 ? "scalar" : "det_poly";
    inst["coeffs"] = complex_list_to_json(scalar.coeffs());
    put_spectrum(inst, roots);
    inst["bound"] = bound;
    inst["max_modulus"] = roots.max_modulus();
    inst["margin"] = bound - roots.max_modulus();
    const bool pass = roots.max_modulus() <= bound + 1e-8;
    inst["pass"] = pass;
    out.instances.push_back(std::move(inst));
    out.pass = pass;
    out.summary["bound"] = bound;
    return out;
}

Outcome cmd_verify_ds(const RunConfig& c) {
    const double tol = c.tol.value_or(kDefaultDTol);
    const int n = c.n.value_or(2);
    const int m = c.m.value_or(2);
    const int k = c.k.value_or(0);
    Outcome out;
    double worst_inner = std::numeric_limits<double>::infinity();
    double worst_outer = std::numeric_limits<double>::infinity();
    int violations = 0;
    for_each_instance(
        c, [&](std::uint64_t seed) { return random_D_polynomial(n, m, k, seed); },
        [&](const MatrixPolynomial& p, const std::string& id) {
            const AnnulusReport rep = annulus_check(p, id, tol);
            const int distinct = distinct_count(std::span(rep.eigenvalues), 1e-6);
            const bool pass = rep.pass && (p.degree() < 2 || distinct >= 2);
            Json inst;
            inst["id"] = id;
            inst["n"] = p.size();
            inst["m"] = p.degree();
            put_eigenvalues(inst, rep.eigenvalues);
            inst["inner_margin"] = rep.inner_margin;
            inst["outer_margin"] = rep.outer_margin;
            inst["distinct"] = distinct;
            inst["pass"] = pass;
            out.instances.push_back(std::move(inst));
            worst_inner = std::min(worst_inner, rep.inner_margin);
            worst_outer = std::min(worst_outer, rep.outer_margin);
            violations += pass ? 0 : 1;
        });
    out.pass = violations == 0;
    out.summary["violations"] = violations;
    out.summary["worst_margins"] = {{"inner", finite_or_null(worst_inner)},
                                    {"outer", finite_or_null(worst_outer)}};
    return out;
}

Json disc_json(const DiscReport& rep) {
    Json inst;
    inst["id"] = rep.id;
    put_eigenvalues(inst, rep.eigenvalues);
    inst["r_declared"] = rep.r_declared;
    inst["r_eff"] = rep.r_eff;
    inst["bound"] = rep.bound;
    inst["max_modulus"] = rep.max_modulus;
    inst["margin"] = rep.margin;
    inst["pass"] = rep.pass;
    return inst;
}

Outcome cmd_verify_schur(const RunConfig& c) {
    const double tol = c.tol.value_or(kDefaultSrTol);
    const double r = c.r.value_or(1.0);
    const int n = c.n.value_or(2);
    const int m = c.m.value_or(2);
    if (!(r > 0.0)) {
        throw UsageError("--r must be positive");
    }
    Outcome out;
    double worst = std::numeric_limits<double>::infinity();
    int violations = 0;
    for_each_instance(
        c, [&](std::uint64_t seed) { return random_commuting_sr(n, m, r, seed); },
        [&](const MatrixPolynomial& p, const std::string& id) {
            const DiscReport rep = disc_check(p, r, id, tol);
            out.instances.push_back(disc_json(rep));
            worst = std::min(worst, rep.margin);
            violations += rep.pass ? 0 : 1;
        });
    out.pass = violations == 0;
    out.summary["violations"] = violations;
    out.summary["worst_margins"] = {{"disc", finite_or_null(worst)}};
    return out;
}

Outcome cmd_verify_unit_circle(const RunConfig& c) {
    const double tol = c.tol.value_or(1e-8);
    const int n = c.n.value_or(2);
    const int m = c.m.value_or(2);
    const int k = c.k.value_or(0);
    Outcome out;
    double worst_sigma = 0.0;
    double worst_null = 0.0;
    int violations = 0;
    for_each_instance(
        c, [&](std::uint64_t seed) { return random_ds_coefficients(n, m, k, seed); },
        [&](const MatrixPolynomial& p, const std::string& id) {
            Json inst;
            inst["id"] = id;
            inst["n"] = p.size();
            inst["m"] = p.degree();
            bool pass = true;
            const auto points = unit_circle_eigs(p, tol);
            Json pts = Json::array();
            for (const auto& pt : points) {
                pts.push_back({{"point", complex_to_json(pt.point)},
                               {"sigma_residual", pt.sigma_residual},
                               {"null_residual", pt.null_residual}});
                worst_sigma = std::max(worst_sigma, pt.sigma_residual);
                worst_null = std::max(worst_null, pt.null_residual);
            }
            inst["points"] = std::move(pts);
            if (p.degree() * p.size() <= 12) {
                const ScalarPolynomial d = det_poly(p);
                const double rem = divisibility_check(p);
                const double scale = d.is_zero() ? 1.0 : d.max_abs_coeff();
                inst["remainder"] = rem;
                inst["remainder_relative"] = rem / scale;
                pass = pass && rem <= 1e-7 * scale;
            } else {
                inst["remainder"] = nullptr;
                inst["remainder_relative"] = nullptr;
            }
            inst["pass"] = pass;
            out.instances.push_back(std::move(inst));
            violations += pass ? 0 : 1;
        });
    out.pass = violations == 0;
    out.summary["violations"] = violations;
    out.summary["worst_residuals"] = {{"sigma", worst_sigma}, {"null", worst_null}};
    return out;
}

Outcome cmd_extremal_inf(const RunConfig& c) {
    const double r = require(c.r, "r");
    const InfWitness w = extremal_inf_witness(r);
    const Spectrum s = polyeig(w.poly);
    Outcome out;
    Json inst;
    inst["id"] = "r=" + Json(r).dump();
    inst["r"] = r;
    inst["d"] = w.d;
    put_spectrum(inst, s);
    inst["min_modulus"] = s.min_modulus();
    out.pass = s.min_modulus() > kAnnulusInner && s.min_modulus() < r;
    inst["pass"] = out.pass;
    out.instances.push_back(std::move(inst));
    out.polynomial = w.poly;
    return out;
}

Outcome cmd_extremal_sup(const RunConfig& c) {
    const int m = require(c.m, "m");
    const MatrixPolynomial p = extremal_sup_witness(m);
    const AnnulusReport rep = annulus_check(p, "m=" + std::to_string(m));
    Outcome out;
    Json inst;
    inst["id"] = rep.id;
    inst["m"] = m;
    put_eigenvalues(inst, rep.eigenvalues);
    inst["max_modulus"] = kAnnulusOuter - rep.outer_margin;
    inst["outer_margin"] = rep.outer_margin;
    inst["pass"] = rep.pass;
    out.pass = rep.pass;
    out.instances.push_back(std::move(inst));
    out.polynomial = p;
    return out;
}

Outcome cmd_extremal_schur_sup(const RunConfig& c) {
    const int m = require(c.m, "m");
    const int n_param = require(c.n, "n");
    const double r = c.r.value_or(1.0);
    const MatrixPolynomial p = schur_sup_witness(m, n_param, r);
    const DiscReport rep = disc_check(p, r, "m=" + std::to_string(m) + ",n=" + std::to_string(n_param),
                                      c.tol.value_or(kDefaultSrTol));
    Outcome out;
    Json inst = disc_json(rep);
    inst["limit"] = r + 1.0;
    out.pass = rep.pass;
    out.instances.push_back(std::move(inst));
    out.polynomial = p;
    return out;
}

Outcome cmd_counterexample(const RunConfig& c) {
    const int n_param = c.n.value_or(1);
    const MatrixPolynomial p = noncommuting_counterexample(n_param);
    const Spectrum s = polyeig(p);
    const SrCheck check = check_sr(p, std::numeric_limits<double>::infinity(), kDefaultSrTol);
    const double expected = std::cbrt(static_cast<double>(n_param) * n_param);
    std::vector<double> moduli = s.moduli();
    std::sort(moduli.begin(), moduli.end());
    double worst = 0.0;
    for (std::size_t i = 1; i < moduli.size(); ++i) {
        worst = std::max(worst, std::abs(moduli[i] - expected) / expected);
    }
    Outcome out;
    Json inst;
    inst["id"] = "n=" + std::to_string(n_param);
    inst["n_param"] = n_param;
    put_spectrum(inst, s);
    inst["expected_modulus"] = expected;
    inst["max_relative_error"] = worst;
    inst["commuting"] = check.commuting;
    inst["max_coefficient_radius"] = check.r_eff;
    out.pass = worst <= 1e-5 && moduli.front() <= 1e-5 * expected;
    inst["pass"] = out.pass;
    out.instances.push_back(std::move(inst));
    out.polynomial = p;
    return out;
}

Outcome cmd_mass_spring(const RunConfig& c) {
    const int size = c.n.value_or(50);
    const MatrixPolynomial p = mass_spring(size);
    double inf_bound = 0.0;
    for (int i = 0; i < p.degree(); ++i) {
        inf_bound = std::max(inf_bound, inf_norm(p.coeff(i)));
    }
    // Every coefficient eigenvalue lies in the disc of radius inf_bound + eps.
    const double r_declared = inf_bound * (1.0 + 1e-9);
    const DiscReport rep = disc_check(p, r_declared, "N=" + std::to_string(size));
    Outcome out;
    Json inst = disc_json(rep);
    inst["N"] = size;
    inst["inf_norms"] = {{"damping", inf_norm(p.coeff(1))}, {"stiffness", inf_norm(p.coeff(0))}};
    inst["norm_bound"] = inf_bound + 1.0;
    const bool pass = rep.pass && rep.max_modulus <= inf_bound + 1.0;
    inst["pass"] = pass;
    out.pass = pass;
    out.instances.push_back(std::move(inst));
    out.polynomial = p;
    return out;
}

Outcome cmd_sweep(const RunConfig& c, Family family) {
    EnsembleSpec spec;
    spec.family = family;
    spec.n = c.n.value_or(2);
    spec.m = c.m.value_or(2);
    spec.r = c.r.value_or(1.0);
    spec.k = c.k.value_or(0);
    spec.trials = c.trials.value_or(0);
    spec.seed = c.seed;
    const SweepReport rep = sweep_extremes(spec);
    Outcome out;
    for (const auto& w : rep.witnesses) {
        out.instances.push_back({{"id", w.kind},
                                 {"parameter", w.parameter},
                                 {"parameter2", w.parameter2},
                                 {"modulus", w.modulus}});
    }
    out.pass = rep.pass;
    out.summary["family"] = to_string(family);
    out.summary["random_instances"] = rep.random_instances;
    out.summary["observed_min"] = rep.observed_min;
    out.summary["observed_max"] = rep.observed_max;
    out.summary["limit_inf"] = rep.limit_inf;
    out.summary["limit_sup"] = rep.limit_sup;
    return out;
}

const std::map<std::string, std::function<Outcome(const RunConfig&)>>& commands() {
    static const std::map<std::string, std::function<Outcome(const RunConfig&)>> table = {
        {"eig", cmd_eig},
        {"bounds cauchy", cmd_bounds_cauchy},
        {"verify ds", cmd_verify_ds},
        {"verify schur", cmd_verify_schur},
        {"verify unit-circle", cmd_verify_unit_circle},
        {"extremal inf", cmd_extremal_inf},
        {"extremal sup", cmd_extremal_sup},
        {"extremal schur-sup", cmd_extremal_schur_sup},
        {"counterexample", cmd_counterexample},
        {"example mass-spring", cmd_mass_spring},
        {"sweep ds", [](const RunConfig& c) { return cmd_sweep(c, Family::DoublyStochastic); }},
        {"sweep schur", [](const RunConfig& c) { return cmd_sweep(c, Family::SchurStable); }},
    };
    return table;
}

std::string error_document(const RunConfig& c, const std::string& kind, const std::string& what) {
    Json doc;
    doc["command"] = c.command;
    doc["config"] = config_echo(c);
    doc["instances"] = Json::array();
    doc["summary"] = {{"pass", false}, {"error", {{"kind", kind}, {"message", what}}}};
    return doc.dump(2) + "\n";
}

}  // namespace

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "json-report") return OutputFormat::JsonReport;
    if (name == "csv-moduli") return OutputFormat::CsvModuli;
    if (name == "poly") return OutputFormat::Polynomial;
    return std::nullopt;
}

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::JsonReport: return "json-report";
        case OutputFormat::CsvModuli: return "csv-moduli";
        case OutputFormat::Polynomial: return "poly";
    }
    return "json-report";
}

std::string moduli_csv(const Json& report) {
    std::ostringstream os;
    os.precision(17);
    os << "instance,index,re,im,modulus\n";
    for (const auto& inst : report.at("instances")) {
        if (!inst.contains("eigenvalues")) {
            continue;
        }
        const std::string id = inst.at("id").get<std::string>();
        std::size_t index = 0;
        for (const auto& z : inst.at("eigenvalues")) {
            const double re = z[0].get<double>();
            const double im = z[1].get<double>();
            os << id << ',' << index++ << ',' << re << ',' << im << ',' << std::hypot(re, im) << '\n';
        }
    }
    return os.str();
}

RunResult run(const RunConfig& config) {
    const auto started = std::chrono::steady_clock::now();
    RunResult result;
    const auto& table = commands();
    const auto it = table.find(config.command);
    if (it == table.end()) {
        result.status = kUsage;
        result.message = "unknown command '" + config.command + "'";
        return result;
    }

    Outcome outcome;
    try {
        outcome = it->second(config);
    } catch (const UsageError& e) {
        result.status = kUsage;
        result.message = e.what();
        return result;
    } catch (const ParseError& e) {
        result.status = kUsage;
        result.message = std::string("parse error: ") + e.what();
        return result;
    } catch (const SolverFailure& e) {
        result.status = kSolverFailure;
        result.message = std::string("solver failure: ") + e.what();
        result.document = error_document(config, "solver failure", e.what());
        return result;
    } catch (const FamilyError& e) {
        result.status = kViolation;
        result.message = std::string("hypothesis not met (") + e.predicate() + "): " + e.what();
        result.document = error_document(config, "family", e.what());
        return result;
    } catch (const TheoremViolation& e) {
        result.status = kViolation;
        result.message = std::string("theorem violation: ") + e.what();
        result.document = error_document(config, "theorem violation", e.what());
        return result;
    } catch (const Error& e) {
        // Dimension, degree, domain and singular-leading errors are input problems.
        result.status = kUsage;
        result.message = e.what();
        return result;
    }

    if (config.format == OutputFormat::Polynomial) {
        if (!outcome.polynomial) {
            result.status = kUsage;
            result.message = "--format poly is only available for generator commands";
            return result;
        }
        result.document = save_polynomial(*outcome.polynomial);
        result.status = outcome.pass ? kPass : kViolation;
        return result;
    }

    Json doc;
    doc["command"] = config.command;
    doc["config"] = config_echo(config);
    doc["instances"] = std::move(outcome.instances);
    Json summary;
    summary["pass"] = outcome.pass;
    for (auto& [key, value] : outcome.summary.items()) {
        summary[key] = value;
    }
    if (config.timing) {
        summary["runtime_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }
    doc["summary"] = std::move(summary);

    result.document = config.format == OutputFormat::CsvModuli ? moduli_csv(doc) : doc.dump(2) + "\n";
    result.status = outcome.pass ? kPass : kViolation;
    return result;
}

}  // namespace polyloc::cli
