#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyloc/cli.hpp"
#include "polyloc/verify.hpp"

namespace py = pybind11;
using namespace polyloc;

namespace {

py::dict spectrum_dict(const Spectrum& s) {
    py::dict d;
    d["eigenvalues"] = s.eigenvalues;
    d["residuals"] = s.residuals;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Matrix polynomial eigenvalues via block companion linearization, with "
              "eigenvalue-location checks for doubly stochastic and commuting families.";

    auto base = py::register_exception<Error>(m, "PolylocError", PyExc_RuntimeError);
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<DegreeError>(m, "DegreeError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<SingularLeadingError>(m, "SingularLeadingError", base.ptr());
    py::register_exception<SolverFailure>(m, "SolverFailure", base.ptr());
    py::register_exception<FamilyError>(m, "FamilyError", base.ptr());
    py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<MatrixPolynomial>(m, "MatrixPolynomial")
        .def(py::init<std::vector<ComplexMatrix>>(), py::arg("coeffs"),
             "Coefficients A_0..A_m in ascending degree.")
        .def_property_readonly("size", &MatrixPolynomial::size)
        .def_property_readonly("degree", &MatrixPolynomial::degree)
        .def_property_readonly("coeffs", &MatrixPolynomial::coeffs)
        .def("__call__", [](const MatrixPolynomial& p, Complex z) { return evaluate(p, z); })
        .def("to_json", [](const MatrixPolynomial& p) { return save_polynomial(p); })
        .def_static("from_json", [](const std::string& text) { return load_polynomial(text); })
        .def("__eq__", &MatrixPolynomial::operator==)
        .def("__repr__", [](const MatrixPolynomial& p) {
            return "<MatrixPolynomial n=" + std::to_string(p.size()) + " m=" + std::to_string(p.degree()) + ">";
        });

    m.def("polyeig", [](const MatrixPolynomial& p) { return spectrum_dict(polyeig(p)); }, py::arg("p"));
    m.def("eigenvalues_dense", [](const ComplexMatrix& a) { return spectrum_dict(eigenvalues_dense(a)); });
    m.def("scalar_roots", [](const std::vector<Complex>& c) { return spectrum_dict(scalar_roots(c)); },
          py::arg("coeffs"), "Roots of sum_k coeffs[k] z^k.");
    m.def("companion", &companion);
    m.def("reverse", &reverse);
    m.def("monic_reduce", &monic_reduce);
    m.def("det_poly", [](const MatrixPolynomial& p) { return det_poly(p).coeffs(); });
    m.def("is_eigenvalue", &is_eigenvalue, py::arg("p"), py::arg("z"), py::arg("tol"));
    m.def("det", &det);
    m.def("sigma_min", &sigma_min);
    m.def("spectral_norm", &spectral_norm);
    m.def("spectral_radius", &spectral_radius);
    m.def("inf_norm", &inf_norm);
    m.def("haar_unitary", &haar_unitary, py::arg("n"), py::arg("seed"));

    m.def("random_permutation", &random_permutation, py::arg("n"), py::arg("seed"));
    m.def("random_doubly_stochastic", &random_doubly_stochastic, py::arg("n"), py::arg("k"), py::arg("seed"));
    m.def("random_D_polynomial", &random_D_polynomial, py::arg("n"), py::arg("m"), py::arg("k") = 0,
          py::arg("seed") = 0);
    m.def("random_commuting_sr", &random_commuting_sr, py::arg("n"), py::arg("m"), py::arg("r"),
          py::arg("seed") = 0);
    m.def("validate_D", &validate_D, py::arg("p"), py::arg("tol") = kDefaultDTol);
    m.def("validate_sr", &validate_sr, py::arg("p"), py::arg("r"), py::arg("tol") = kDefaultSrTol);
    m.def("extremal_inf_witness", [](double r) {
        auto w = extremal_inf_witness(r);
        return py::make_tuple(w.poly, w.d);
    });
    m.def("extremal_sup_witness", &extremal_sup_witness, py::arg("m"));
    m.def("schur_sup_witness", &schur_sup_witness, py::arg("m"), py::arg("n_param"), py::arg("r"));
    m.def("noncommuting_counterexample", &noncommuting_counterexample, py::arg("n_param"));
    m.def("mass_spring", &mass_spring, py::arg("N"));

    m.def("cauchy_bound", [](const std::vector<Complex>& c) { return cauchy_bound(c); }, py::arg("coeffs"));
    m.def("annulus_check", [](const MatrixPolynomial& p) {
        const auto r = annulus_check(p);
        py::dict d;
        d["moduli"] = r.moduli;
        d["inner_margin"] = r.inner_margin;
        d["outer_margin"] = r.outer_margin;
        d["pass"] = r.pass;
        return d;
    });
    m.def("disc_check", [](const MatrixPolynomial& p, double r_declared) {
        const auto r = disc_check(p, r_declared);
        py::dict d;
        d["r_eff"] = r.r_eff;
        d["bound"] = r.bound;
        d["max_modulus"] = r.max_modulus;
        d["margin"] = r.margin;
        d["pass"] = r.pass;
        return d;
    }, py::arg("p"), py::arg("r_declared"));
    m.def("unit_circle_eigs", [](const MatrixPolynomial& p, double tol) {
        py::list out;
        for (const auto& pt : unit_circle_eigs(p, tol)) {
            out.append(py::make_tuple(pt.point, pt.sigma_residual, pt.null_residual));
        }
        return out;
    }, py::arg("p"), py::arg("tol") = 1e-8);
    m.def("divisibility_check", &divisibility_check);
    m.def("distinct_count", [](const std::vector<Complex>& v, double tol) { return distinct_count(v, tol); },
          py::arg("values"), py::arg("cluster_tol"));

    m.def("run_cli", [](const std::string& command, const py::dict& options) {
        cli::RunConfig cfg;
        cfg.command = command;
        for (auto item : options) {
            const auto key = item.first.cast<std::string>();
            const auto value = item.second;
            if (key == "n") cfg.n = value.cast<int>();
            else if (key == "m") cfg.m = value.cast<int>();
            else if (key == "r") cfg.r = value.cast<double>();
            else if (key == "k") cfg.k = value.cast<int>();
            else if (key == "trials") cfg.trials = value.cast<int>();
            else if (key == "seed") cfg.seed = value.cast<std::uint64_t>();
            else if (key == "tol") cfg.tol = value.cast<double>();
            else if (key == "input") cfg.input = value.cast<std::string>();
            else if (key == "format") {
                const auto f = cli::parse_format(value.cast<std::string>());
                if (!f) throw py::value_error("unknown format");
                cfg.format = *f;
            } else throw py::value_error("unknown option '" + key + "'");
        }
        const auto result = cli::run(cfg);
        return py::make_tuple(result.status, result.document, result.message);
    }, py::arg("command"), py::arg("options") = py::dict(),
       "Run a CLI command in-process; returns (status, document, message).");
}
