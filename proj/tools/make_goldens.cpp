// Regenerates the golden corpus (machines + language tables) in canonical
// serialized form. Usage: make-goldens <output-dir>
#include "gluemin/serialize.hpp"
#include "support/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace gluemin;

namespace {

void write(const std::filesystem::path& dir, const std::string& name,
           const Document& d) {
    std::ofstream out(dir / name);
    out << serialize_document(d);
}

LanguageTable table_for(const GluedAutomaton& a,
                        const std::vector<std::string>& words) {
    LanguageTable t;
    for (const auto& w : words) {
        std::vector<std::string> letters;
        for (char c : w)
            letters.push_back(std::string(1, c));
        Point out = auto_eval(a, letters);
        t.entries.push_back({w, a.profile == Profile::weighted
                                    ? rational_to_string(out.vector[0])
                                    : std::to_string(out.component)});
    }
    return t;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make-goldens <output-dir>\n";
        return 2;
    }
    std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    std::vector<std::string> ell_words{"",     "a",    "b",    "c",    "aa",
                                       "ab",   "bb",   "ba",   "abb",  "bab",
                                       "abba", "abc",  "aabb", "bbaa", "ababa",
                                       "babab"};
    std::vector<std::string> rot_words;
    for (int n = 0; n < 14; ++n)
        rot_words.push_back(std::string(n, 'r'));
    std::vector<std::string> dfa_words{"",   "a",   "b",   "aa",  "ab",  "ba",
                                       "bb", "aab", "aba", "abb", "bab", "aaa",
                                       "abab"};

    write(dir, "a_vec.json", corpus::a_vec());
    write(dir, "a_vec.table.json", table_for(corpus::a_vec_glued(), ell_words));

    struct Variant {
        const char* name;
        corpus::CVariant v;
    };
    for (Variant x : {Variant{"a_duvs", corpus::CVariant::keep},
                      Variant{"a_duvs_c_swap", corpus::CVariant::swap},
                      Variant{"a_duvs_c_even", corpus::CVariant::to_even},
                      Variant{"a_duvs_c_odd", corpus::CVariant::to_odd}}) {
        GluedAutomaton a = corpus::a_duvs(x.v);
        write(dir, std::string(x.name) + ".json", a);
        write(dir, std::string(x.name) + ".table.json", table_for(a, ell_words));
    }

    write(dir, "rotation.json", corpus::rotation());
    write(dir, "rotation.table.json", table_for(corpus::rotation(), rot_words));

    write(dir, "dfa4.json", corpus::dfa4());
    write(dir, "dfa4.table.json", table_for(corpus::dfa4(), dfa_words));
    return 0;
}
