#pragma once

#include "gluemin/glued_automaton.hpp"

#include <json.hpp>

#include <variant>

namespace gluemin {

using Json = nlohmann::json;

// Sampled language: expected output per word. Weighted values are rational
// strings, set values are output component indices (as strings too, so the
// table format is uniform).
struct LanguageTable {
    std::vector<std::pair<std::string, std::string>> entries;

    bool operator==(const LanguageTable&) const = default;
};

using Document = std::variant<WFA, GluedSpace, GluedAutomaton, GluedMorphism,
                              LanguageTable>;

Json to_json(const Matrix& m);
// Row count comes from the data; the column count must be supplied so that
// zero-row matrices keep their shape.
Matrix matrix_from_json(const Json& j, std::size_t cols);

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json to_json(const WFA& a);
WFA wfa_from_json(const Json& j);

Json to_json(const GluedSpace& g);
GluedSpace glued_space_from_json(const Json& j);

Json to_json(const GluedMorphism& m);          // with source/target
GluedMorphism morphism_from_json(const Json& j);
// Inside an automaton only the assignment is stored.
Json assignment_to_json(const GluedMorphism& m);
GluedMorphism assignment_from_json(const Json& j, const GluedSpace& source,
                                   const GluedSpace& target);

Json to_json(const GluedAutomaton& a);
GluedAutomaton automaton_from_json(const Json& j);

Json to_json(const LanguageTable& t);
LanguageTable language_table_from_json(const Json& j);

Json to_json(const Document& d);
Document document_from_json(const Json& j);

// Canonical text form: sorted keys, two-space indent, trailing newline,
// rationals as "p/q" strings. parse . serialize is the identity on its image.
std::string serialize_document(const Document& d);
Document parse_document(const std::string& text); // throws GluedError ParseError

// Word helpers: a word is a single string; when every alphabet symbol is one
// character it is read letter by letter, otherwise it is split on spaces.
std::vector<std::string> split_word(const std::string& word,
                                    const std::vector<std::string>& alphabet);

} // namespace gluemin
