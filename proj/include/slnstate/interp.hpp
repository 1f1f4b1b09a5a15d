#pragma once

#include <functional>
#include <memory>

#include "slnstate/symkit.hpp"

namespace slnstate {

// prod_{x in X, r in sigma \ omega}(x - r) / prod_{s in omega, r in sigma \ omega}(s - r)
struct InterpolationBasisElement {
    Subset omega;
    SymPoly numerator;  // in the elementary generators of the m-letter alphabet
    Rational denominator;

    SymPoly polynomial() const { return numerator * (Rational(1) / denominator); }
};

using InterpolationBasis = std::vector<InterpolationBasisElement>;

// Basis indexed like subsets_of_size(N, m); cached per (m, sigma, alphabet).
std::shared_ptr<const InterpolationBasis> interpolation_basis(int m, const RootSet& sigma,
                                                              const std::string& alphabet = "X");

SymPoly interpolate(const std::function<Rational(Subset)>& values, int m, const RootSet& sigma,
                    const std::string& alphabet = "X");

// Exact partial degree of a single-alphabet polynomial, doubled convention.
int exact_partial_degree(const SymPoly& g);

// Interpolates g from its values at all m-subsets of sigma and compares.
// Throws DomainError when g is outside the partial-degree bound 2(N - m).
bool reconstruct_check(const SymPoly& g, int m, const RootSet& sigma);

}  // namespace slnstate
