#pragma once

#include "egh/group.hpp"
#include "egh/triples.hpp"

#include <optional>
#include <string>
#include <vector>

namespace egh {

// A group with Euclidean coordinates per element and the measured sharp
// bi-Lipschitz constants against the uniform metric. Float-only: Euclidean
// norms leave the rationals.
struct EmbeddedGroup {
    std::vector<std::vector<double>> coords;
    double lip_low = 1.0; // max L with L·d_uniform ≤ ‖φg − φg′‖ on all pairs
    double lip_up = 1.0;  // min L with ‖φg − φg′‖ ≤ L·d_uniform on all pairs

    std::size_t dimension() const { return coords.empty() ? 0 : coords[0].size(); }
};

// Element g ↦ (d(g·x_0, x_0), ..., d(g·x_{n-1}, x_{n-1})) followed by the
// flattened permutation matrix; injective through the one-hot block. The
// trivial group reports both constants as 1.
EmbeddedGroup default_embedding(const ActionPairT<double>& pair);

struct NetSpec {
    std::vector<int> centers;
    double radius = 0.0;
};

// Greedy farthest-point centers until every element sits within the radius of
// one; covering re-verified exhaustively.
NetSpec greedy_net(const ActionPairT<double>& pair, double radius);

// Every element as its own center; the degenerate radius-0 net.
NetSpec all_elements_net(const Group& group);

enum class BumpProfile { tent, indicator };

BumpProfile bump_profile_from_name(const std::string& name);
std::string bump_profile_name(BumpProfile p);

// Weight profile positive exactly on [0, cutoff).
struct BumpSpec {
    double cutoff = 0.0;
    BumpProfile profile = BumpProfile::tent;

    double weight(double s) const;
};

struct SmoothResult {
    std::vector<int> theta2;
    double epsilon = 0.0;          // order of the input triple
    double measured_distance = 0.0; // max_g d_G(θ′(g), θ(g))
    BoundCheck<double> ceiling;     // against (L_up/L_low)·2·(cutoff + 5ε)
    bool recertifiable = false;     // measured_distance ≤ ε
    std::optional<PerturbCertificate<double>> recertification;
    bool pass() const {
        return ceiling.pass && (!recertification || recertification->pass());
    }
};

// Bump-weighted average of embedded θ-images over the net, retracted to the
// nearest embedded element (lowest index on ties). Requires
// net.radius ≤ bump.cutoff / 2 so every denominator is positive.
SmoothResult smooth_theta(const TripleT<double>& t, const EmbeddedGroup& emb, const NetSpec& net,
                          const BumpSpec& bump);

} // namespace egh
