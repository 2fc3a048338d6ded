#include "gluemin/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gluemin;

namespace {

// Exit codes: 0 success, 1 semantic failure (invalid object, equiv false),
// 2 malformed input (unreadable file, parse error, wrong document type).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Document load(const std::string& path) {
    try {
        return parse_document(read_file(path));
    } catch (const GluedError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_output(const Document& d, const std::string& out_path) {
    std::string text = serialize_document(d);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw InputError("cannot write " + out_path);
    out << text;
}

GluedAutomaton wfa_to_glued(const WFA& w) {
    GluedAutomaton a;
    a.alphabet = w.alphabet;
    a.profile = Profile::weighted;
    a.states = embed_vec(w.dim);
    a.initial = {0, w.initial};
    a.final_map.source = a.states;
    a.final_map.target = a.output_space();
    a.final_map.assignment = {{0, Matrix::from_rows({w.final_row}, w.dim)}};
    for (const auto& [sym, m] : w.transitions) {
        GluedMorphism d;
        d.source = a.states;
        d.target = a.states;
        d.assignment = {{0, m}};
        a.transitions.emplace(sym, d);
    }
    return a;
}

GluedAutomaton as_automaton(const Document& d, const std::string& path) {
    if (const auto* a = std::get_if<GluedAutomaton>(&d))
        return *a;
    if (const auto* w = std::get_if<WFA>(&d))
        return wfa_to_glued(*w);
    throw InputError(path + ": expected a wfa or glued_automaton document");
}

void check_loaded(const GluedAutomaton& a, const std::string& path) {
    try {
        auto_check(a);
    } catch (const GluedError& e) {
        throw SemanticError(path + ": " + e.what());
    }
}

std::string eval_to_string(const GluedAutomaton& a, const Point& out) {
    if (a.profile == Profile::weighted)
        return rational_to_string(out.vector[0]);
    return std::to_string(out.component);
}

std::size_t resolve_budget(std::size_t cli_budget, bool cli_set) {
    if (cli_set)
        return cli_budget;
    if (const char* env = std::getenv("GLUEMIN_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1)
            return v;
        throw InputError("GLUEMIN_BUDGET must be a positive integer");
    }
    return 8;
}

std::string dims_list(const GluedSpace& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.components.size(); ++i)
        s += (i ? "," : "") + std::to_string(g.components[i]);
    return s + "]";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-rational minimization of set, weighted and glued automata"};
    app.require_subcommand(1);

    std::string file, file_b, out_path, word;
    std::size_t budget = 8;
    bool budget_set = false;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input document")->required();
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the result here (default: stdout)");
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "antichain budget per component")
            ->check(CLI::PositiveNumber)
            ->each([&](const std::string&) { budget_set = true; });
    };

    CLI::App* validate = app.add_subcommand("validate", "check a document's invariants");
    add_file(validate);
    CLI::App* eval = app.add_subcommand("eval", "evaluate a word");
    add_file(eval);
    eval->add_option("--word", word, "input word")->required();
    CLI::App* minimize_cmd = app.add_subcommand("minimize", "reach then obs");
    add_file(minimize_cmd);
    add_budget(minimize_cmd);
    add_out(minimize_cmd);
    CLI::App* reach_cmd = app.add_subcommand("reach", "reachable subobject");
    add_file(reach_cmd);
    add_budget(reach_cmd);
    add_out(reach_cmd);
    CLI::App* obs_cmd = app.add_subcommand("obs", "observational quotient");
    add_file(obs_cmd);
    add_out(obs_cmd);
    CLI::App* equiv = app.add_subcommand("equiv", "language equivalence");
    equiv->add_option("fileA", file, "first document")->required();
    equiv->add_option("fileB", file_b, "second document")->required();
    CLI::App* linearize_cmd = app.add_subcommand("linearize", "block direct-sum WFA");
    add_file(linearize_cmd);
    add_out(linearize_cmd);
    CLI::App* import_dfa_cmd = app.add_subcommand("import-dfa", "DFA table to glued automaton");
    add_file(import_dfa_cmd);
    add_out(import_dfa_cmd);
    CLI::App* import_duvs_cmd =
        app.add_subcommand("import-duvs", "DUVS tables to glued automaton");
    add_file(import_duvs_cmd);
    add_out(import_duvs_cmd);
    CLI::App* stats = app.add_subcommand("stats", "shape summary");
    add_file(stats);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            Document d = load(file);
            if (const auto* a = std::get_if<GluedAutomaton>(&d)) {
                check_loaded(*a, file);
                std::cout << "ok: glued_automaton\n";
            } else if (const auto* w = std::get_if<WFA>(&d)) {
                try {
                    w->validate();
                } catch (const std::exception& e) {
                    throw SemanticError(file + ": " + e.what());
                }
                std::cout << "ok: wfa\n";
            } else if (const auto* g = std::get_if<GluedSpace>(&d)) {
                try {
                    normalize(*g);
                } catch (const GluedError& e) {
                    throw SemanticError(file + ": " + e.what());
                }
                std::cout << "ok: glued_space\n";
            } else if (const auto* m = std::get_if<GluedMorphism>(&d)) {
                try {
                    morphism_check(*m);
                } catch (const GluedError& e) {
                    throw SemanticError(file + ": " + e.what());
                }
                std::cout << "ok: morphism\n";
            } else {
                std::cout << "ok: language_table\n";
            }
        } else if (eval->parsed()) {
            Document d = load(file);
            GluedAutomaton a = as_automaton(d, file);
            check_loaded(a, file);
            std::vector<std::string> w = split_word(word, a.alphabet);
            Point out;
            try {
                out = auto_eval(a, w);
            } catch (const GluedError& e) {
                throw InputError(e.what());
            }
            std::cout << eval_to_string(a, out) << "\n";
        } else if (minimize_cmd->parsed()) {
            GluedAutomaton a = as_automaton(load(file), file);
            check_loaded(a, file);
            MinimizeResult r = gluemin::minimize(a, resolve_budget(budget, budget_set));
            std::cout << "exact=" << (r.exact ? "true" : "false")
                      << " components=" << r.automaton.states.components.size()
                      << " dims=" << dims_list(r.automaton.states)
                      << " gluings=" << r.automaton.states.gluings.size() << "\n";
            if (!out_path.empty())
                write_output(Document(r.automaton), out_path);
        } else if (reach_cmd->parsed()) {
            GluedAutomaton a = as_automaton(load(file), file);
            check_loaded(a, file);
            ReachResult r = reach(a, resolve_budget(budget, budget_set));
            std::cout << "exact=" << (r.exact ? "true" : "false")
                      << " components=" << r.automaton.states.components.size()
                      << " dims=" << dims_list(r.automaton.states) << "\n";
            write_output(Document(r.automaton), out_path);
        } else if (obs_cmd->parsed()) {
            GluedAutomaton a = as_automaton(load(file), file);
            check_loaded(a, file);
            ObsResult r = obs(a);
            std::cout << "components=" << r.automaton.states.components.size()
                      << " dims=" << dims_list(r.automaton.states) << "\n";
            write_output(Document(r.automaton), out_path);
        } else if (equiv->parsed()) {
            GluedAutomaton a = as_automaton(load(file), file);
            GluedAutomaton b = as_automaton(load(file_b), file_b);
            check_loaded(a, file);
            check_loaded(b, file_b);
            bool eq;
            try {
                eq = auto_equiv(a, b);
            } catch (const GluedError& e) {
                throw InputError(e.what());
            }
            std::cout << (eq ? "true" : "false") << "\n";
            return eq ? 0 : 1;
        } else if (linearize_cmd->parsed()) {
            GluedAutomaton a = as_automaton(load(file), file);
            check_loaded(a, file);
            if (a.profile != Profile::weighted)
                throw SemanticError(file + ": linearize needs the weighted profile");
            write_output(Document(linearize(a)), out_path);
        } else if (import_dfa_cmd->parsed()) {
            Json j;
            try {
                j = Json::parse(read_file(file));
            } catch (const Json::parse_error& e) {
                throw InputError(file + ": " + e.what());
            }
            try {
                std::size_t n = j.at("states").get<std::size_t>();
                std::size_t init = j.at("initial").get<std::size_t>();
                std::vector<std::string> alphabet =
                    j.at("alphabet").get<std::vector<std::string>>();
                std::map<std::string, std::vector<std::size_t>> table;
                for (const auto& sym : alphabet)
                    table[sym] =
                        j.at("transitions").at(sym).get<std::vector<std::size_t>>();
                std::vector<bool> accepting(n, false);
                for (std::size_t s : j.at("accepting").get<std::vector<std::size_t>>()) {
                    if (s >= n)
                        throw InputError(file + ": accepting state out of range");
                    accepting[s] = true;
                }
                write_output(Document(import_dfa(n, init, alphabet, table, accepting)),
                             out_path);
            } catch (const Json::exception& e) {
                throw InputError(file + ": " + e.what());
            } catch (const GluedError& e) {
                throw InputError(file + ": " + e.what());
            }
        } else if (import_duvs_cmd->parsed()) {
            Json j;
            try {
                j = Json::parse(read_file(file));
            } catch (const Json::parse_error& e) {
                throw InputError(file + ": " + e.what());
            }
            try {
                DuvsSpec spec;
                spec.alphabet = j.at("alphabet").get<std::vector<std::string>>();
                for (const auto& c : j.at("components")) {
                    DuvsComponent dc;
                    dc.dim = c.at("dim").get<std::size_t>();
                    dc.final_row = vec_from_json(c.at("final"));
                    spec.components.push_back(std::move(dc));
                }
                spec.initial.component = j.at("initial").at("component").get<std::size_t>();
                spec.initial.vector = vec_from_json(j.at("initial").at("vector"));
                for (const auto& sym : spec.alphabet) {
                    std::vector<ComponentMap> maps;
                    for (std::size_t i = 0; i < spec.components.size(); ++i) {
                        const Json& e = j.at("transitions").at(sym).at(i);
                        std::size_t t = e.at("target").get<std::size_t>();
                        if (t >= spec.components.size())
                            throw InputError(file + ": transition target out of range");
                        maps.push_back({t, matrix_from_json(e.at("matrix"),
                                                            spec.components[i].dim)});
                    }
                    spec.transitions.emplace(sym, std::move(maps));
                }
                write_output(Document(import_duvs(spec)), out_path);
            } catch (const Json::exception& e) {
                throw InputError(file + ": " + e.what());
            } catch (const GluedError& e) {
                throw InputError(file + ": " + e.what());
            }
        } else if (stats->parsed()) {
            Document d = load(file);
            GluedSpace g;
            if (const auto* a = std::get_if<GluedAutomaton>(&d))
                g = a->states;
            else if (const auto* s = std::get_if<GluedSpace>(&d))
                g = *s;
            else if (const auto* w = std::get_if<WFA>(&d))
                g = embed_vec(w->dim);
            else
                throw InputError(file + ": stats needs a space or automaton document");
            std::cout << "components=" << g.components.size()
                      << " dims=" << dims_list(g)
                      << " total_dim=" << g.total_dim()
                      << " gluings=" << g.gluings.size() << "\n";
        }
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GluedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
