#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "swkit/cli.hpp"
#include "swkit/density.hpp"
#include "swkit/errors.hpp"
#include "swkit/guards.hpp"
#include "swkit/springer.hpp"
#include "swkit/weyl.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const swkit::BigInt& v) { return py::module_::import("builtins").attr("int")(swkit::to_decimal(v)); }

py::list to_pylist(const swkit::IntPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_pyint(c));
    return out;
}

swkit::PlaceKind kind_of(const std::string& s) {
    if (s == "inert") return swkit::PlaceKind::Inert;
    if (s == "split") return swkit::PlaceKind::Split;
    throw swkit::InputError("kind must be \"inert\" or \"split\"");
}

// (exit code, JSON text) for one CLI command on a JSON document.
py::tuple run_command(const std::string& command, const std::string& payload, int budget) {
    namespace cli = swkit::cli;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(payload);
    } catch (const nlohmann::json::exception& e) {
        throw swkit::InputError(std::string("malformed JSON: ") + e.what());
    }
    auto job = cli::parse_job(command, doc);
    if (budget >= 0) job.budget = budget;
    if (job.guard_scale) swkit::set_guard_scale(*job.guard_scale);
    cli::CommandResult res;
    {
        py::gil_scoped_release release;
        if (command == "den") res = cli::cmd_den(job);
        else if (command == "derivative") res = cli::cmd_derivative(job);
        else if (command == "verify") res = cli::cmd_verify(job);
        else throw swkit::InputError("command must be den, derivative or verify");
    }
    return py::make_tuple(res.exit_code, res.doc.dump());
}

}  // namespace

PYBIND11_MODULE(_swkit, m) {
    m.doc() = "Local densities, Springer trace polynomials and W_d characters";

    auto base = py::register_exception<swkit::Error>(m, "Error");
    py::register_exception<swkit::InputError>(m, "InputError", base.ptr());
    py::register_exception<swkit::GuardExceeded>(m, "GuardExceeded", base.ptr());

    m.def("run_command", &run_command, py::arg("command"), py::arg("payload"), py::arg("budget") = -1);
    m.def(
        "den_local",
        [](const std::string& kind, long q, const std::vector<int>& lambda) {
            return to_pylist(swkit::den_local(kind_of(kind), q, swkit::Partition(lambda)));
        },
        py::arg("kind"), py::arg("q"), py::arg("lambda_"));
    m.def(
        "functional_equation_check",
        [](const std::string& kind, long q, const std::vector<int>& lambda) {
            return swkit::functional_equation_check(kind_of(kind), q, swkit::Partition(lambda));
        },
        py::arg("kind"), py::arg("q"), py::arg("lambda_"));
    m.def(
        "isom_count_split", [](int mm, int n, int a, long q) { return to_pyint(swkit::isom_count_split(mm, n, a, q)); }, py::arg("m"),
        py::arg("n"), py::arg("a"), py::arg("q"));
    m.def(
        "p_coh_place", [](int t, long q, int deg) { return to_pylist(swkit::p_coh_place(t, q, deg)); }, py::arg("t"), py::arg("q"),
        py::arg("deg") = 1);
    m.def(
        "p_coh_grassmann_sum", [](int t, long q) { return to_pylist(swkit::p_coh_grassmann_sum(t, q)); }, py::arg("t"), py::arg("q"));
    m.def("verify_main_identity", [](int d) {
        py::gil_scoped_release release;
        return swkit::verify_main_identity(d).pass;
    });
    m.def("rho_dimension", [](int d, int i) { return swkit::rho(d, i).dimension(); });
    m.def("guard_scale", &swkit::guard_scale);
    m.def("set_guard_scale", &swkit::set_guard_scale);
}
