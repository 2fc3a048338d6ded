#include "gluemin/serialize.hpp"

#include <sstream>

namespace gluemin {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw GluedError("ParseError", msg);
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        fail(std::string("missing field \"") + name + "\"");
    return *it;
}

std::size_t size_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_unsigned())
        fail(std::string("field \"") + name + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return rational_from_string(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    fail("expected a rational (string \"p/q\" or integer)");
}

std::vector<std::string> alphabet_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        fail("alphabet must be a nonempty array");
    std::vector<std::string> out;
    for (const auto& s : j) {
        if (!s.is_string() || s.get<std::string>().empty())
            fail("alphabet symbols must be nonempty strings");
        out.push_back(s.get<std::string>());
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t k = i + 1; k < out.size(); ++k)
            if (out[i] == out[k])
                fail("alphabet symbols must be distinct");
    return out;
}

} // namespace

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(rational_to_string(x));
    return a;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array())
        fail("expected an array of rationals");
    Vec v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(to_json(m.row(r)));
    return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t cols) {
    if (!j.is_array())
        fail("expected a matrix (array of rows)");
    std::vector<Vec> rows;
    for (const auto& r : j) {
        Vec row = vec_from_json(r);
        if (row.size() != cols)
            fail("matrix row length mismatch");
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows, cols);
}

Json to_json(const WFA& a) {
    Json j;
    j["type"] = "wfa";
    j["alphabet"] = a.alphabet;
    j["dim"] = a.dim;
    j["initial"] = to_json(a.initial);
    j["final"] = to_json(a.final_row);
    Json tr;
    for (const auto& [sym, m] : a.transitions)
        tr[sym] = to_json(m);
    j["transitions"] = tr;
    return j;
}

WFA wfa_from_json(const Json& j) {
    WFA a;
    a.alphabet = alphabet_from_json(field(j, "alphabet"));
    a.dim = size_field(j, "dim");
    a.initial = vec_from_json(field(j, "initial"));
    a.final_row = vec_from_json(field(j, "final"));
    const Json& tr = field(j, "transitions");
    if (!tr.is_object())
        fail("transitions must be an object keyed by symbol");
    for (const auto& sym : a.alphabet) {
        auto it = tr.find(sym);
        if (it == tr.end())
            fail("missing transition matrix for symbol \"" + sym + "\"");
        Matrix m = matrix_from_json(*it, a.dim);
        if (m.rows() != a.dim)
            fail("transition matrix for \"" + sym + "\" is not dim x dim");
        a.transitions.emplace(sym, std::move(m));
    }
    if (a.initial.size() != a.dim || a.final_row.size() != a.dim)
        fail("initial/final vector length differs from dim");
    return a;
}

Json to_json(const GluedSpace& g) {
    Json j;
    j["type"] = "glued_space";
    j["components"] = g.components;
    Json gl = Json::array();
    for (const auto& [key, gluing] : g.gluings) {
        Json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["domain"] = to_json(Matrix::from_rows(gluing.domain.basis(),
                                                gluing.domain.ambient_dim()));
        e["phi"] = to_json(gluing.phi);
        gl.push_back(std::move(e));
    }
    j["gluings"] = gl;
    return j;
}

GluedSpace glued_space_from_json(const Json& j) {
    GluedSpace g;
    const Json& comps = field(j, "components");
    if (!comps.is_array())
        fail("components must be an array of dimensions");
    for (const auto& c : comps) {
        if (!c.is_number_unsigned())
            fail("component dimensions must be non-negative integers");
        g.components.push_back(c.get<std::size_t>());
    }
    const Json& gl = field(j, "gluings");
    if (!gl.is_array())
        fail("gluings must be an array");
    for (const auto& e : gl) {
        std::size_t i = size_field(e, "i");
        std::size_t k = size_field(e, "j");
        if (i >= k || k >= g.components.size())
            fail("gluing indices must satisfy i < j < component count");
        Matrix dom = matrix_from_json(field(e, "domain"), g.components[i]);
        Matrix phi = matrix_from_json(field(e, "phi"), g.components[i]);
        if (phi.rows() != g.components[k])
            fail("phi row count differs from the target component dimension");
        if (!g.gluings.insert({{i, k}, Gluing{Subspace::span(dom), phi}}).second)
            fail("duplicate gluing pair");
    }
    return g;
}

Json assignment_to_json(const GluedMorphism& m) {
    Json a = Json::array();
    for (const auto& cm : m.assignment) {
        Json e;
        e["target"] = cm.target;
        e["matrix"] = to_json(cm.mat);
        a.push_back(std::move(e));
    }
    return a;
}

GluedMorphism assignment_from_json(const Json& j, const GluedSpace& source,
                                   const GluedSpace& target) {
    if (!j.is_array())
        fail("assignment must be an array");
    const Json& arr = j;
    if (arr.size() != source.components.size())
        fail("assignment length differs from the source component count");
    GluedMorphism m;
    m.source = source;
    m.target = target;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::size_t t = size_field(arr[i], "target");
        if (t >= target.components.size())
            fail("assignment target out of range");
        Matrix mat = matrix_from_json(field(arr[i], "matrix"), source.components[i]);
        if (mat.rows() != target.components[t])
            fail("assignment matrix row count differs from the target dimension");
        m.assignment.push_back({t, std::move(mat)});
    }
    return m;
}

Json to_json(const GluedMorphism& m) {
    Json j;
    j["type"] = "morphism";
    j["source"] = to_json(m.source);
    j["target"] = to_json(m.target);
    j["assignment"] = assignment_to_json(m);
    return j;
}

GluedMorphism morphism_from_json(const Json& j) {
    GluedSpace source = glued_space_from_json(field(j, "source"));
    GluedSpace target = glued_space_from_json(field(j, "target"));
    return assignment_from_json(field(j, "assignment"), source, target);
}

Json to_json(const GluedAutomaton& a) {
    Json j;
    j["type"] = "glued_automaton";
    j["profile"] = a.profile == Profile::weighted
                       ? std::string("weighted")
                       : "set:" + std::to_string(a.set_size);
    j["alphabet"] = a.alphabet;
    j["states"] = to_json(a.states);
    Json init;
    init["component"] = a.initial.component;
    init["vector"] = to_json(a.initial.vector);
    j["initial"] = init;
    Json fin;
    fin["assignment"] = assignment_to_json(a.final_map);
    j["final"] = fin;
    Json tr;
    for (const auto& [sym, d] : a.transitions) {
        Json e;
        e["assignment"] = assignment_to_json(d);
        tr[sym] = e;
    }
    j["transitions"] = tr;
    return j;
}

GluedAutomaton automaton_from_json(const Json& j) {
    GluedAutomaton a;
    const Json& prof = field(j, "profile");
    if (!prof.is_string())
        fail("profile must be a string");
    std::string p = prof.get<std::string>();
    if (p == "weighted") {
        a.profile = Profile::weighted;
    } else if (p.rfind("set:", 0) == 0) {
        a.profile = Profile::set;
        try {
            a.set_size = std::stoul(p.substr(4));
        } catch (const std::exception&) {
            fail("bad set profile \"" + p + "\"");
        }
        if (a.set_size == 0)
            fail("set profile needs at least one output value");
    } else {
        fail("profile must be \"weighted\" or \"set:k\"");
    }
    a.alphabet = alphabet_from_json(field(j, "alphabet"));
    a.states = glued_space_from_json(field(j, "states"));
    const Json& init = field(j, "initial");
    a.initial.component = size_field(init, "component");
    a.initial.vector = vec_from_json(field(init, "vector"));
    if (a.initial.component >= a.states.components.size() ||
        a.initial.vector.size() != a.states.components[a.initial.component])
        fail("initial point shape mismatch");
    GluedSpace out = a.output_space();
    a.final_map = assignment_from_json(field(field(j, "final"), "assignment"),
                                       a.states, out);
    const Json& tr = field(j, "transitions");
    for (const auto& sym : a.alphabet) {
        auto it = tr.find(sym);
        if (it == tr.end())
            fail("missing transition morphism for symbol \"" + sym + "\"");
        a.transitions.emplace(sym, assignment_from_json(field(*it, "assignment"),
                                                        a.states, a.states));
    }
    return a;
}

Json to_json(const LanguageTable& t) {
    Json j;
    j["type"] = "language_table";
    Json entries = Json::array();
    for (const auto& [word, value] : t.entries) {
        Json e;
        e["word"] = word;
        e["value"] = value;
        entries.push_back(std::move(e));
    }
    j["entries"] = entries;
    return j;
}

LanguageTable language_table_from_json(const Json& j) {
    LanguageTable t;
    const Json& entries = field(j, "entries");
    if (!entries.is_array())
        fail("entries must be an array");
    for (const auto& e : entries) {
        const Json& w = field(e, "word");
        const Json& v = field(e, "value");
        if (!w.is_string() || !v.is_string())
            fail("table entries are {word, value} string pairs");
        t.entries.push_back({w.get<std::string>(), v.get<std::string>()});
    }
    return t;
}

Json to_json(const Document& d) {
    return std::visit([](const auto& v) { return to_json(v); }, d);
}

Document document_from_json(const Json& j) {
    if (!j.is_object())
        fail("document must be a JSON object");
    const Json& t = field(j, "type");
    if (!t.is_string())
        fail("type must be a string");
    std::string type = t.get<std::string>();
    if (type == "wfa")
        return wfa_from_json(j);
    if (type == "glued_space")
        return glued_space_from_json(j);
    if (type == "glued_automaton")
        return automaton_from_json(j);
    if (type == "morphism")
        return morphism_from_json(j);
    if (type == "language_table")
        return language_table_from_json(j);
    fail("unknown document type \"" + type + "\"");
}

std::string serialize_document(const Document& d) {
    return to_json(d).dump(2) + "\n";
}

Document parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(e.what()); // nlohmann reports the byte position
    }
    return document_from_json(j);
}

std::vector<std::string> split_word(const std::string& word,
                                    const std::vector<std::string>& alphabet) {
    bool single = true;
    for (const auto& s : alphabet)
        single = single && s.size() == 1;
    std::vector<std::string> out;
    if (single) {
        for (char c : word)
            if (c != ' ')
                out.push_back(std::string(1, c));
    } else {
        std::istringstream in(word);
        std::string tok;
        while (in >> tok)
            out.push_back(tok);
    }
    return out;
}

} // namespace gluemin
