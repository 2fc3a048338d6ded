#pragma once

#include "gluemin/subspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace gluemin {

// Weighted automaton over Q: linear transitions, initial vector i(1),
// final functional stored as a coefficient row.
struct WFA {
    std::vector<std::string> alphabet;
    std::size_t dim = 0;
    Vec initial;
    Vec final_row;
    std::map<std::string, Matrix> transitions;

    const Matrix& delta(const std::string& symbol) const;
    void validate() const;
};

// L(w) = final . delta_w . initial, letters applied left to right.
Rational wfa_eval(const WFA& a, const std::vector<std::string>& word);

// Restriction to the span reachable from the initial vector under all
// transition matrices; dual restriction to the span of observation rows.
WFA forward_reduce(const WFA& a);
WFA backward_reduce(const WFA& a);

// backward_reduce(forward_reduce(a)): minimal dimension among equivalents.
WFA wfa_minimize(const WFA& a);

// Exact language equality via the reachable span of the difference automaton.
bool wfa_equiv(const WFA& a, const WFA& b);

} // namespace gluemin
