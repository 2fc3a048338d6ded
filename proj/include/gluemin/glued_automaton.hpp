#pragma once

#include "gluemin/glued_space.hpp"
#include "gluemin/wfa.hpp"

namespace gluemin {

// Output profile: a one-dimensional space for weighted languages, a finite
// point set for deterministic acceptance.
enum class Profile { weighted, set };

// Hybrid set-vector automaton: a glued state space, an initial point, a
// final morphism into the output object and one glued endomorphism per letter.
struct GluedAutomaton {
    std::vector<std::string> alphabet;
    Profile profile = Profile::weighted;
    std::size_t set_size = 0; // number of output values for the set profile
    GluedSpace states;
    Point initial;
    GluedMorphism final_map;
    std::map<std::string, GluedMorphism> transitions;

    GluedSpace output_space() const {
        return profile == Profile::weighted ? embed_vec(1) : embed_set(set_size);
    }
    const GluedMorphism& delta(const std::string& symbol) const;
};

void auto_check(const GluedAutomaton& a); // throws on the first failing part
bool auto_validate(const GluedAutomaton& a);

Point auto_eval(const GluedAutomaton& a, const std::vector<std::string>& word);
// Weighted profile shortcut: the rational coordinate of the output point.
Rational auto_eval_weighted(const GluedAutomaton& a, const std::vector<std::string>& word);

// Block direct-sum WFA with the same weighted language.
WFA linearize(const GluedAutomaton& a);

struct ReachResult {
    GluedAutomaton automaton;
    GluedMorphism embedding; // mono into the input's states
    bool exact = true;       // false iff widening fired
    std::vector<SubspaceFamily> families; // reached point sets per component
};

// Forward saturation to the smallest transition-closed subobject containing
// the initial point; per-component antichain budget with sum-widening keeps
// it terminating (exact=false marks the over-approximation).
ReachResult reach(const GluedAutomaton& a, std::size_t budget);

struct ObsResult {
    GluedAutomaton automaton;
    GluedMorphism projection; // epi from the input's states
};

// Observational quotient: greatest fixpoint of the linear bisimulation
// relations, then per-component quotient with induced gluings.
ObsResult obs(const GluedAutomaton& a);

struct MinimizeResult {
    GluedAutomaton automaton;
    bool exact = true; // minimality is certified only when reach was exact
};

MinimizeResult minimize(const GluedAutomaton& a, std::size_t budget);

std::optional<GluedMorphism> auto_iso(const GluedAutomaton& a, const GluedAutomaton& b);
bool auto_equiv(const GluedAutomaton& a, const GluedAutomaton& b);

GluedAutomaton import_dfa(std::size_t states, std::size_t init,
                          const std::vector<std::string>& alphabet,
                          const std::map<std::string, std::vector<std::size_t>>& table,
                          const std::vector<bool>& accepting);

struct DuvsComponent {
    std::size_t dim = 0;
    Vec final_row; // coefficient row of the final functional on this index
};
struct DuvsSpec {
    std::vector<std::string> alphabet;
    std::vector<DuvsComponent> components;
    Point initial;
    // per letter, per index: target index and linear map
    std::map<std::string, std::vector<ComponentMap>> transitions;
};
GluedAutomaton import_duvs(const DuvsSpec& spec);

// Classical partition refinement on set-profile automata; the independent
// oracle for obs. Returns a block id per component.
std::vector<std::size_t> moore_refine(const GluedAutomaton& a);

} // namespace gluemin
