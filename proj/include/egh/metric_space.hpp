#pragma once

#include "egh/scalar.hpp"
#include "egh/square_table.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace egh {

// A finite metric space: point labels plus the full distance table. Immutable
// by convention after construction.
template <class S>
struct SpaceT {
    std::vector<std::string> labels;
    SquareTable<S> dist;

    std::size_t size() const { return dist.size(); }
    const S& d(std::size_t i, std::size_t j) const { return dist(i, j); }

    S diameter() const {
        S best{};
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (best < dist(i, j)) best = dist(i, j);
        return best;
    }

    // max row entry; drives the solver's assignment order
    S eccentricity(std::size_t i) const {
        S best{};
        for (std::size_t j = 0; j < size(); ++j)
            if (best < dist(i, j)) best = dist(i, j);
        return best;
    }

    bool operator==(const SpaceT&) const = default;
};

enum class Axiom { diagonal, symmetry, positivity, triangle };

std::string axiom_name(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    // triangle: dist(i,j) > dist(i,via) + dist(via,j); other axioms use i,j only
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t via = 0;

    bool operator==(const AxiomViolation&) const = default;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool valid() const { return violations.empty(); }
};

// Lists every violated axiom with a witnessing index tuple. Shape problems
// (non-square table, label count mismatch, empty space) are structural and
// throw instead of being reported.
template <class S>
ValidationReport validate_space(const SpaceT<S>& space);

// Throws StructuralError on shape problems and PreconditionError listing the
// first violations when the axioms fail. Labels default to "p0".."pN-1".
template <class S>
SpaceT<S> make_space(std::vector<std::string> labels, SquareTable<S> dist);

template <class S>
SpaceT<S> make_space(SquareTable<S> dist);

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "p");

extern template struct SpaceT<double>;
extern template struct SpaceT<Rational>;
extern template ValidationReport validate_space<double>(const SpaceT<double>&);
extern template ValidationReport validate_space<Rational>(const SpaceT<Rational>&);
extern template SpaceT<double> make_space<double>(std::vector<std::string>, SquareTable<double>);
extern template SpaceT<Rational> make_space<Rational>(std::vector<std::string>, SquareTable<Rational>);
extern template SpaceT<double> make_space<double>(SquareTable<double>);
extern template SpaceT<Rational> make_space<Rational>(SquareTable<Rational>);

} // namespace egh
