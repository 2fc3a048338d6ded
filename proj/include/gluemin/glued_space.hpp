#pragma once

#include "gluemin/family.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gluemin {

struct GluedError : std::runtime_error {
    explicit GluedError(const std::string& kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind(kind) {}
    std::string kind;
};

// Partial linear iso between two components: injective on its domain U,
// identifying x in U (component i) with phi . x (component j). phi is stored
// as a total matrix, canonically zero on the RREF complement of U.
struct Gluing {
    Subspace domain; // subspace of the lower-indexed component
    Matrix phi;      // n_j x n_i

    bool operator==(const Gluing&) const = default;
};

// Finite mono-diagram over Q-spaces in pairwise-gluing normal form:
// components Q^{n_1}..Q^{n_k}, with partial iso gluings between pairs.
// After normalize(), gluings are saturated (closed under composition),
// self-folding-free and non-redundant (no full-domain gluing).
struct GluedSpace {
    std::vector<std::size_t> components;
    std::map<std::pair<std::size_t, std::size_t>, Gluing> gluings; // key i<j

    std::size_t component_count() const { return components.size(); }
    std::size_t total_dim() const;
    const Gluing* gluing(std::size_t i, std::size_t j) const; // key order free
    // Graph subspace of the gluing relation from component i to component j
    // ({(x, y) : (i,x) = (j,y)} minus the diagonal case), nullopt if unglued.
    std::optional<Subspace> relation(std::size_t i, std::size_t j) const;

    bool operator==(const GluedSpace&) const = default;
};

struct Point {
    std::size_t component = 0;
    Vec vector;

    bool operator==(const Point&) const = default;
};

struct ComponentMap {
    std::size_t target = 0;
    Matrix mat;

    bool operator==(const ComponentMap&) const = default;
};

// Morphism of glued spaces: one representative (target component, matrix)
// per source component, compatible with the gluings.
struct GluedMorphism {
    GluedSpace source;
    GluedSpace target;
    std::vector<ComponentMap> assignment;

    bool operator==(const GluedMorphism&) const = default;
};

// Result of normalizing: the normal form plus the witness sending each
// original component into the surviving one it got folded into.
struct NormalizeResult {
    GluedSpace space;
    std::vector<ComponentMap> projection;  // original component -> normal form
    std::vector<std::size_t> survivors;    // original index of each kept component
};

// Saturates the gluing relations, rejects self-folding and non-injective
// gluings, removes subsumed (full-domain) components. Idempotent.
NormalizeResult normalize_with_witness(const GluedSpace& g);
GluedSpace normalize(const GluedSpace& g);

bool point_eq(const GluedSpace& g, const Point& p, const Point& q);

// {(x, y) : (c_i, f_i x) = (c_j, f_j y)} as a subspace of the product of the
// two matrix domains; nullopt (bottom) when no points can ever be equal.
std::optional<Subspace> agreement_subspace(const GluedSpace& g,
                                           std::size_t ci, const Matrix& fi,
                                           std::size_t cj, const Matrix& fj);

bool morphism_validate(const GluedMorphism& m);
void morphism_check(const GluedMorphism& m); // throws IncompatibleGluing
GluedMorphism morphism_compose(const GluedMorphism& m2, const GluedMorphism& m1);
GluedMorphism morphism_identity(const GluedSpace& g);
bool morphism_equal(const GluedMorphism& m, const GluedMorphism& n);

bool is_mono(const GluedMorphism& m);
bool is_epi(const GluedMorphism& m);

struct Factorization {
    GluedMorphism epi;  // source -> image
    GluedSpace image;
    GluedMorphism mono; // image -> target
};

// (strong epi, mono) image factorization: m = mono . epi.
Factorization factor(const GluedMorphism& m);

// Shared construction for image objects and subobjects: given injective maps
// into components of x, builds the normalized glued space they carve out,
// the mono into x, and where each input item ended up.
struct SubobjectBuild {
    GluedMorphism mono;
    std::vector<ComponentMap> fold; // input item -> component of mono.source
};
SubobjectBuild build_glued_sub(const GluedSpace& x,
                               const std::vector<std::pair<std::size_t, Matrix>>& items);

// Mono into x whose per-component point sets are the given families
// (one result component per family member, gluings induced by ambient
// point equality, then normalized).
GluedMorphism subobject_from_families(const GluedSpace& x,
                                      const std::vector<SubspaceFamily>& families);

// Per-component point sets of the image of a mono, including points visible
// through the gluings of the codomain.
std::vector<SubspaceFamily> image_families(const GluedMorphism& mono);

GluedMorphism subobject_intersect(const GluedMorphism& a, const GluedMorphism& b);
GluedMorphism subobject_preimage(const GluedMorphism& s, const GluedMorphism& m);

// Searches component bijections for an invertible compatible assignment.
std::optional<GluedMorphism> glued_iso(const GluedSpace& g, const GluedSpace& h);

GluedSpace embed_vec(std::size_t dim);
GluedSpace embed_set(std::size_t k);

} // namespace gluemin
