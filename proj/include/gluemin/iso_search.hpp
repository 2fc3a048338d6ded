#pragma once

#include "gluemin/glued_space.hpp"

#include <functional>

namespace gluemin {

// Affine constraint system over the entries of one candidate matrix per
// source component (M_c maps component c of g into component sigma(c) of h).
// Constraints are linear in the M_c entries; solutions are sampled for an
// invertible tuple.
class IsoSystem {
public:
    IsoSystem(const GluedSpace& g, const GluedSpace& h,
              const std::vector<std::size_t>& sigma);

    std::size_t nvars() const { return nvars_; }

    // Coefficient matrix of the expression a . M_c . b (one row per output
    // coordinate); pass an identity for a plain M_c . b.
    Matrix coeff(std::size_t c, const Matrix& a, const Vec& b) const;
    Matrix coeff(std::size_t c, const Vec& b) const; // a = identity

    // expr1 + const1 == expr2 + const2
    void add_equal(const Matrix& coeff1, const Vec& const1,
                   const Matrix& coeff2, const Vec& const2);
    void add_equal(const Matrix& coeff1, const Vec& const2); // expr1 == const2
    // expr + constant lies in s
    void add_membership(const Matrix& coeff, const Vec& constant, const Subspace& s);

    // Enumerates solutions (particular + random homogeneous combinations),
    // materialized as matrix tuples; returns those with every M_c invertible.
    std::vector<std::vector<Matrix>> invertible_solutions(std::size_t max_samples) const;

private:
    std::vector<std::size_t> src_dims_, dst_dims_, offsets_;
    std::size_t nvars_;
    std::vector<Vec> rows_;
    Vec rhs_;
};

// Backtracking search over component bijections of g and h; for each
// candidate bijection a constraint system is assembled (gluing compatibility
// plus caller constraints) and solved. The first candidate accepted by
// `accept` wins.
std::optional<GluedMorphism> find_iso(
    const GluedSpace& g, const GluedSpace& h,
    const std::function<bool(const std::vector<std::size_t>&, IsoSystem&)>& extra,
    const std::function<bool(const GluedMorphism&)>& accept);

} // namespace gluemin
