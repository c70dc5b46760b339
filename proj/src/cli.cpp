#include "lpsem/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "lpsem/comparator.hpp"
#include "lpsem/completion.hpp"
#include "lpsem/embeddings.hpp"
#include "lpsem/errors.hpp"
#include "lpsem/fixpoints.hpp"
#include "lpsem/render.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

// Projection mask over atom ids; names that are not in the base are simply
// absent from every projection.
std::vector<bool> projection_mask(const GroundProgram& gp, const std::string& spec) {
    std::vector<bool> keep(gp.n_atoms(), false);
    std::string token;
    std::istringstream stream(spec);
    while (std::getline(stream, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto end = token.find_last_not_of(" \t");
        const std::string name = token.substr(begin, end - begin + 1);
        const auto it = std::lower_bound(gp.base.begin(), gp.base.end(), name);
        if (it != gp.base.end() && *it == name) keep[it - gp.base.begin()] = true;
    }
    return keep;
}

std::vector<AtomId> project(const std::vector<AtomId>& atoms, const std::vector<bool>& keep) {
    std::vector<AtomId> out;
    for (AtomId a : atoms) {
        if (keep[a]) out.push_back(a);
    }
    return out;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int solve_models(const GroundProgram& gp, std::vector<Interpretation> models,
                 const std::string& semantics, const std::string& format, bool do_project,
                 const std::vector<bool>& keep, std::ostream& out) {
    if (!do_project) {
        if (format == "json") {
            print_json(out, models_json(gp, semantics, models));
        } else {
            out << models_text(gp, models);
        }
        return 0;
    }
    std::vector<std::vector<AtomId>> projected;
    projected.reserve(models.size());
    for (const Interpretation& m : models) projected.push_back(project(m.atoms(), keep));
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
    if (format == "json") {
        Json j;
        j["semantics"] = semantics;
        Json arr = Json::array();
        for (const auto& atoms : projected) {
            Json row = Json::array();
            for (AtomId a : atoms) row.push_back(gp.atom_name(a));
            arr.push_back(std::move(row));
        }
        j["models"] = std::move(arr);
        print_json(out, j);
    } else {
        for (const auto& atoms : projected) out << atom_set_text(gp, atoms) << '\n';
    }
    return 0;
}

int solve_partials(const GroundProgram& gp, std::vector<PartialInterpretation> ms,
                   const std::string& semantics, const std::string& format, bool many,
                   bool do_project, const std::vector<bool>& keep, std::ostream& out) {
    using Triple = std::pair<std::vector<AtomId>, std::pair<std::vector<AtomId>, std::vector<AtomId>>>;
    std::vector<Triple> rows;
    rows.reserve(ms.size());
    for (const PartialInterpretation& m : ms) {
        Triple t{m.true_atoms(), {m.false_atoms(), m.undefined_atoms()}};
        if (do_project) {
            t.first = project(t.first, keep);
            t.second.first = project(t.second.first, keep);
            t.second.second = project(t.second.second, keep);
        }
        rows.push_back(std::move(t));
    }
    if (do_project) {
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    }
    auto row_json = [&](const Triple& t) {
        Json j;
        Json tr = Json::array(), fa = Json::array(), un = Json::array();
        for (AtomId a : t.first) tr.push_back(gp.atom_name(a));
        for (AtomId a : t.second.first) fa.push_back(gp.atom_name(a));
        for (AtomId a : t.second.second) un.push_back(gp.atom_name(a));
        j["true"] = std::move(tr);
        j["false"] = std::move(fa);
        j["undefined"] = std::move(un);
        return j;
    };
    auto row_text = [&](const Triple& t) {
        return "true: " + atom_set_text(gp, t.first) +
               " false: " + atom_set_text(gp, t.second.first) +
               " undefined: " + atom_set_text(gp, t.second.second);
    };
    if (format == "json") {
        Json j;
        j["semantics"] = semantics;
        if (many) {
            Json arr = Json::array();
            for (const Triple& t : rows) arr.push_back(row_json(t));
            j["models"] = std::move(arr);
        } else {
            Json one = row_json(rows.front());
            j.update(one);
        }
        print_json(out, j);
    } else {
        for (const Triple& t : rows) out << row_text(t) << '\n';
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"logic-program semantics workbench"};
    app.name("lpsem");
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    std::string semantics = "stable";
    std::string target;
    std::string project_spec;
    std::size_t max_atoms = kDefaultEnumerationCap;
    std::size_t max_atoms_3v = kDefaultThreeValuedCap;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "program file; stdin when omitted or '-'");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-atoms", max_atoms, "two-valued enumeration cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-atoms-3v", max_atoms_3v, "three-valued search cap")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* solve = app.add_subcommand("solve", "compute models under a semantics");
    add_common(solve);
    solve->add_option("--semantics", semantics, "semantics to apply")
        ->check(CLI::IsMember({"least", "supported", "fitting", "perfect", "stable", "pstable",
                               "wf"}));
    solve->add_option("--project", project_spec, "comma-separated atoms to project onto");

    CLI::App* embed = app.add_subcommand("embed", "print the embedded modal theory");
    add_common(embed);
    embed->add_option("--target", target, "embedding target")
        ->required()
        ->check(CLI::IsMember({"ael", "dl"}));

    CLI::App* expansions_cmd =
        app.add_subcommand("expansions", "stable expansions of the embedded theory");
    add_common(expansions_cmd);

    CLI::App* extensions_cmd =
        app.add_subcommand("extensions", "default-logic extensions of the embedded theory");
    add_common(extensions_cmd);

    CLI::App* compare = app.add_subcommand("compare", "check inter-semantics relations");
    add_common(compare);

    CLI::App* diagnose_cmd =
        app.add_subcommand("diagnose", "full two-readings report with divergence flags");
    add_common(diagnose_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const Program program = parse_program(read_input(file, in));
        const GroundProgram gp = ground(program);
        const Caps caps{max_atoms, max_atoms_3v, kDefaultGuessCap};

        if (app.got_subcommand(solve)) {
            const bool do_project = solve->count("--project") > 0;
            const std::vector<bool> keep =
                do_project ? projection_mask(gp, project_spec) : std::vector<bool>();
            if (semantics == "least") {
                return solve_models(gp, {least_model(gp)}, semantics, format, do_project, keep,
                                    out);
            }
            if (semantics == "supported") {
                return solve_models(gp, supported_models(gp, caps.enumeration), semantics, format,
                                    do_project, keep, out);
            }
            if (semantics == "stable") {
                return solve_models(gp, stable_models(gp, caps.enumeration), semantics, format,
                                    do_project, keep, out);
            }
            if (semantics == "perfect") {
                return solve_models(gp, {perfect_model(gp)}, semantics, format, do_project, keep,
                                    out);
            }
            if (semantics == "fitting") {
                return solve_partials(gp, {fitting_model(gp)}, semantics, format, false,
                                      do_project, keep, out);
            }
            if (semantics == "wf") {
                return solve_partials(gp, {well_founded_model(gp)}, semantics, format, false,
                                      do_project, keep, out);
            }
            // pstable
            return solve_partials(gp, partial_stable_models(gp, caps.three_valued), semantics,
                                  format, true, do_project, keep, out);
        }
        if (app.got_subcommand(embed)) {
            if (target == "ael") {
                const AelTheory t = gelfond_embedding(gp);
                if (format == "json") {
                    print_json(out, ael_theory_json(gp, t));
                } else {
                    out << ael_theory_text(gp, t);
                }
            } else {
                const DefaultTheory t = mt_embedding(gp);
                if (format == "json") {
                    print_json(out, default_theory_json(gp, t));
                } else {
                    out << default_theory_text(gp, t);
                }
            }
            return 0;
        }
        if (app.got_subcommand(expansions_cmd)) {
            const auto es = ael_expansions(gelfond_embedding(gp), caps.guesses, caps.enumeration);
            if (format == "json") {
                print_json(out, expansions_json(gp, es));
            } else {
                out << expansions_text(gp, es);
            }
            return 0;
        }
        if (app.got_subcommand(extensions_cmd)) {
            const auto es = dl_extensions(mt_embedding(gp), caps.guesses);
            if (format == "json") {
                print_json(out, extensions_json(gp, es));
            } else {
                out << extensions_text(gp, es);
            }
            return 0;
        }
        if (app.got_subcommand(compare)) {
            const ReadingsReport report = diagnose(gp, caps);
            if (format == "json") {
                Json j;
                j["relations"] = relations_json(report.relations);
                print_json(out, j);
            } else {
                out << relations_text(report.relations);
            }
            return 0;
        }
        // diagnose
        const ReadingsReport report = diagnose(gp, caps);
        if (format == "json") {
            print_json(out, report_json(gp, report));
        } else {
            out << report_text(gp, report);
        }
        return 0;
    } catch (const CapError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const SafetyError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const GroundingError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 70;
    }
}

} // namespace lpsem
