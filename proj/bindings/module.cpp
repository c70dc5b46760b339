// Python bindings: every operation takes program text and returns plain
// Python structures (lists, dicts, strings), so the module has no wrapped
// classes to keep alive.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpsem/comparator.hpp"
#include "lpsem/completion.hpp"
#include "lpsem/embeddings.hpp"
#include "lpsem/errors.hpp"
#include "lpsem/fixpoints.hpp"
#include "lpsem/render.hpp"
#include "lpsem/syntax.hpp"

namespace py = pybind11;
using namespace lpsem;

namespace {

GroundProgram ground_text(const std::string& text) { return ground(parse_program(text)); }

py::list name_list(const GroundProgram& gp, const std::vector<AtomId>& atoms) {
    py::list out;
    for (AtomId a : atoms) out.append(gp.atom_name(a));
    return out;
}

py::list model_list(const GroundProgram& gp, const std::vector<Interpretation>& ms) {
    py::list out;
    for (const Interpretation& m : ms) out.append(name_list(gp, m.atoms()));
    return out;
}

py::dict partial_dict(const GroundProgram& gp, const PartialInterpretation& m) {
    py::dict out;
    out["true"] = name_list(gp, m.true_atoms());
    out["false"] = name_list(gp, m.false_atoms());
    out["undefined"] = name_list(gp, m.undefined_atoms());
    return out;
}

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const Json& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out[py::str(it.key())] = json_to_py(it.value());
            }
            return out;
        }
        default: return py::none();
    }
}

} // namespace

PYBIND11_MODULE(lpsem, m) {
    m.doc() = "logic-program semantics workbench";

    const auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SafetyError>(m, "SafetyError", base.ptr());
    py::register_exception<GroundingError>(m, "GroundingError", base.ptr());
    py::register_exception<CapError>(m, "CapError", base.ptr());
    const auto precondition =
        py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<NotDefiniteError>(m, "NotDefiniteError", precondition.ptr());
    py::register_exception<NotStratifiedError>(m, "NotStratifiedError", precondition.ptr());

    m.def(
        "atoms",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            py::list out;
            for (const std::string& name : gp.base) out.append(name);
            return out;
        },
        py::arg("program"), "Herbrand base of the program, in name order.");

    m.def(
        "least",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            return name_list(gp, least_model(gp).atoms());
        },
        py::arg("program"), "Least model of a definite program.");

    m.def(
        "supported",
        [](const std::string& text, std::size_t max_atoms) {
            const GroundProgram gp = ground_text(text);
            return model_list(gp, supported_models(gp, max_atoms));
        },
        py::arg("program"), py::arg("max_atoms") = kDefaultEnumerationCap,
        "All models of the Clark completion.");

    m.def(
        "stable",
        [](const std::string& text, std::size_t max_atoms) {
            const GroundProgram gp = ground_text(text);
            return model_list(gp, stable_models(gp, max_atoms));
        },
        py::arg("program"), py::arg("max_atoms") = kDefaultEnumerationCap,
        "All stable models.");

    m.def(
        "perfect",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            return name_list(gp, perfect_model(gp).atoms());
        },
        py::arg("program"), "Perfect model of a stratified program.");

    m.def(
        "fitting",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            return partial_dict(gp, fitting_model(gp));
        },
        py::arg("program"), "Three-valued Fitting model.");

    m.def(
        "well_founded",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            return partial_dict(gp, well_founded_model(gp));
        },
        py::arg("program"), "Well-founded model.");

    m.def(
        "partial_stable",
        [](const std::string& text, std::size_t max_atoms) {
            const GroundProgram gp = ground_text(text);
            py::list out;
            for (const PartialInterpretation& m : partial_stable_models(gp, max_atoms)) {
                out.append(partial_dict(gp, m));
            }
            return out;
        },
        py::arg("program"), py::arg("max_atoms") = kDefaultThreeValuedCap,
        "All partial stable models.");

    m.def(
        "embed_ael",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            return ael_theory_text(gp, gelfond_embedding(gp));
        },
        py::arg("program"), "Autoepistemic embedding, one formula per line.");

    m.def(
        "embed_dl",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            return default_theory_text(gp, mt_embedding(gp));
        },
        py::arg("program"), "Default-logic embedding, one default per line.");

    m.def(
        "expansions",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            py::list out;
            for (const Expansion& e : ael_expansions(gelfond_embedding(gp))) {
                py::dict d;
                d["believed"] = name_list(gp, e.believed_atoms);
                py::list worlds;
                for (const Interpretation& w : e.worlds.worlds) {
                    worlds.append(name_list(gp, w.atoms()));
                }
                d["worlds"] = worlds;
                out.append(d);
            }
            return out;
        },
        py::arg("program"), "Stable expansions of the autoepistemic embedding.");

    m.def(
        "extensions",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            py::list out;
            for (const Extension& e : dl_extensions(mt_embedding(gp))) {
                out.append(name_list(gp, e.atoms));
            }
            return out;
        },
        py::arg("program"), "Extensions of the default-logic embedding.");

    m.def(
        "diagnose",
        [](const std::string& text) {
            const GroundProgram gp = ground_text(text);
            return json_to_py(report_json(gp, diagnose(gp)));
        },
        py::arg("program"), "Full two-readings report as nested dicts and lists.");
}
