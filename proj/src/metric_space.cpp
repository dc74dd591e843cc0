#include "egh/metric_space.hpp"

#include "egh/errors.hpp"

#include <sstream>

namespace egh {

std::string axiom_name(Axiom a) {
    switch (a) {
    case Axiom::diagonal: return "diagonal";
    case Axiom::symmetry: return "symmetry";
    case Axiom::positivity: return "positivity";
    case Axiom::triangle: return "triangle";
    }
    return "?";
}

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

template <class S>
ValidationReport validate_space(const SpaceT<S>& space) {
    const std::size_t n = space.size();
    if (n == 0) throw StructuralError("metric space must have at least one point");
    if (!space.labels.empty() && space.labels.size() != n)
        throw StructuralError("label count " + std::to_string(space.labels.size()) +
                              " does not match table size " + std::to_string(n));

    const S tol = scalar_traits<S>::tol();
    ValidationReport report;
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq_tol(abs_diff(space.dist(i, i), S{}), S{}))
            report.violations.push_back({Axiom::diagonal, i, i, 0});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!leq_tol(abs_diff(space.dist(i, j), space.dist(j, i)), S{}))
                report.violations.push_back({Axiom::symmetry, i, j, 0});
            if (space.dist(i, j) <= tol)
                report.violations.push_back({Axiom::positivity, i, j, 0});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t via = 0; via < n; ++via) {
                if (via == i || via == j) continue;
                if (!leq_tol(space.dist(i, j), S(space.dist(i, via) + space.dist(via, j))))
                    report.violations.push_back({Axiom::triangle, i, j, via});
            }
    return report;
}

template <class S>
SpaceT<S> make_space(std::vector<std::string> labels, SquareTable<S> dist) {
    SpaceT<S> space{std::move(labels), std::move(dist)};
    if (space.labels.empty()) space.labels = default_labels(space.size());
    auto report = validate_space(space);
    if (!report.valid()) {
        std::ostringstream msg;
        msg << "not a metric space:";
        std::size_t shown = 0;
        for (const auto& v : report.violations) {
            msg << " " << axiom_name(v.axiom) << "(" << v.i << "," << v.j;
            if (v.axiom == Axiom::triangle) msg << "," << v.via;
            msg << ")";
            if (++shown == 8 && report.violations.size() > 8) {
                msg << " ... [" << report.violations.size() << " total]";
                break;
            }
        }
        throw PreconditionError(msg.str());
    }
    return space;
}

template <class S>
SpaceT<S> make_space(SquareTable<S> dist) {
    return make_space(std::vector<std::string>{}, std::move(dist));
}

template struct SpaceT<double>;
template struct SpaceT<Rational>;
template ValidationReport validate_space<double>(const SpaceT<double>&);
template ValidationReport validate_space<Rational>(const SpaceT<Rational>&);
template SpaceT<double> make_space<double>(std::vector<std::string>, SquareTable<double>);
template SpaceT<Rational> make_space<Rational>(std::vector<std::string>, SquareTable<Rational>);
template SpaceT<double> make_space<double>(SquareTable<double>);
template SpaceT<Rational> make_space<Rational>(SquareTable<Rational>);

} // namespace egh
