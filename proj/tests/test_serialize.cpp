#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gluemin/serialize.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gluemin;

namespace {

std::string goldens_dir() {
    const char* env = std::getenv("GLUEMIN_GOLDENS");
    return env ? env : "goldens";
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("wfa round-trip") {
    WFA a = corpus::a_vec();
    std::string text = serialize_document(Document(a));
    Document d = parse_document(text);
    REQUIRE(std::holds_alternative<WFA>(d));
    const WFA& b = std::get<WFA>(d);
    CHECK(b.dim == 2);
    CHECK(b.initial == a.initial);
    CHECK(b.transitions == a.transitions);
    CHECK(serialize_document(d) == text); // byte-stable
}

TEST_CASE("glued space round-trip keeps gluings canonical") {
    GluedSpace g;
    g.components = {2, 1};
    g.gluings.insert(
        {{0, 1}, Gluing{Subspace::span({{1, 0}}, 2), Matrix{{1, 0}}}});
    std::string text = serialize_document(Document(g));
    Document d = parse_document(text);
    REQUIRE(std::holds_alternative<GluedSpace>(d));
    CHECK(std::get<GluedSpace>(d) == g);
    CHECK(serialize_document(d) == text);
}

TEST_CASE("automaton round-trip, both profiles") {
    for (Document doc : {Document(corpus::two_lines()), Document(corpus::dfa4())}) {
        std::string text = serialize_document(doc);
        Document back = parse_document(text);
        REQUIRE(std::holds_alternative<GluedAutomaton>(back));
        const auto& a = std::get<GluedAutomaton>(back);
        const auto& orig = std::get<GluedAutomaton>(doc);
        CHECK(a.profile == orig.profile);
        CHECK(a.set_size == orig.set_size);
        CHECK(a.states == orig.states);
        CHECK(a.initial == orig.initial);
        CHECK(a.final_map.assignment == orig.final_map.assignment);
        CHECK(serialize_document(back) == text);
    }
}

TEST_CASE("morphism and language table round-trips") {
    GluedMorphism m;
    m.source = embed_vec(1);
    m.target = embed_vec(2);
    m.assignment = {{0, Matrix{{1}, {Rational(-1, 2)}}}};
    std::string text = serialize_document(Document(m));
    Document d = parse_document(text);
    REQUIRE(std::holds_alternative<GluedMorphism>(d));
    CHECK(std::get<GluedMorphism>(d) == m);

    LanguageTable t{{{"abba", "4"}, {"", "1"}}};
    Document td = parse_document(serialize_document(Document(t)));
    REQUIRE(std::holds_alternative<LanguageTable>(td));
    CHECK(std::get<LanguageTable>(td) == t);
}

TEST_CASE("rationals serialize reduced, with /1 omitted") {
    WFA a = corpus::a_vec();
    a.initial = {Rational(2, 4), Rational(-3)};
    Json j = to_json(Document(a));
    CHECK(j["initial"][0] == "1/2");
    CHECK(j["initial"][1] == "-3");
}

TEST_CASE("parse errors carry positions and kinds") {
    CHECK_THROWS_AS(parse_document("{"), GluedError);
    CHECK_THROWS_AS(parse_document("{}"), GluedError);
    CHECK_THROWS_AS(parse_document(R"({"type":"nope"})"), GluedError);
    try {
        parse_document("{\"type\": \n!");
        FAIL("expected a parse error");
    } catch (const GluedError& e) {
        CHECK(e.kind == "ParseError");
    }
    // schema violations
    CHECK_THROWS_AS(
        parse_document(R"({"type":"wfa","alphabet":[],"dim":1,"initial":["1"],)"
                       R"("final":["1"],"transitions":{}})"),
        GluedError);
    CHECK_THROWS_AS(
        parse_document(R"({"type":"wfa","alphabet":["a"],"dim":1,"initial":["1/0"],)"
                       R"("final":["1"],"transitions":{"a":[["1"]]}})"),
        GluedError);
}

TEST_CASE("word splitting") {
    CHECK(split_word("abba", {"a", "b"}) ==
          std::vector<std::string>{"a", "b", "b", "a"});
    CHECK(split_word("up down", {"up", "down"}) ==
          std::vector<std::string>{"up", "down"});
    CHECK(split_word("", {"a"}).empty());
}

TEST_CASE("random automata survive a round-trip") {
    gen::Rng rng(83);
    for (int i = 0; i < 20; ++i) {
        GluedAutomaton a = gen::automaton(rng, 3, 3, 2);
        Document d = parse_document(serialize_document(Document(a)));
        const auto& b = std::get<GluedAutomaton>(d);
        CHECK(b.states == a.states);
        CHECK(b.initial == a.initial);
        for (const auto& sym : a.alphabet)
            CHECK(b.transitions.at(sym).assignment ==
                  a.transitions.at(sym).assignment);
    }
}

TEST_CASE("golden corpus: tables match evaluation") {
    namespace fs = std::filesystem;
    fs::path dir = goldens_dir();
    REQUIRE(fs::exists(dir));
    std::size_t machines = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        fs::path p = entry.path();
        if (p.extension() != ".json" || p.stem().string().ends_with(".table"))
            continue;
        Document d = parse_document(slurp(p));
        if (std::holds_alternative<LanguageTable>(d))
            continue;
        ++machines;
        // canonical on disk
        CHECK(serialize_document(d) == slurp(p));
        fs::path table_path = p;
        table_path.replace_filename(p.stem().string() + ".table.json");
        REQUIRE(fs::exists(table_path));
        Document td = parse_document(slurp(table_path));
        const auto& table = std::get<LanguageTable>(td);
        CHECK(table.entries.size() >= 12);
        GluedAutomaton a;
        std::vector<std::string> alphabet;
        if (const auto* w = std::get_if<WFA>(&d)) {
            for (const auto& [word, value] : table.entries)
                CHECK(rational_to_string(wfa_eval(*w, split_word(word, w->alphabet))) ==
                      value);
            continue;
        }
        a = std::get<GluedAutomaton>(d);
        for (const auto& [word, value] : table.entries) {
            Point out = auto_eval(a, split_word(word, a.alphabet));
            std::string got = a.profile == Profile::weighted
                                  ? rational_to_string(out.vector[0])
                                  : std::to_string(out.component);
            CHECK(got == value);
        }
    }
    CHECK(machines >= 7); // a_vec, a_duvs, three variants, rotation, dfa
}
