#pragma once

#include <memory>
#include <mutex>

#include "slnstate/symkit.hpp"

namespace slnstate {

// Quotient of Sym(X), |X| = m, by h_{N-m+1..N}(X - sigma). Elements are stored
// through their values at the m-subsets of sigma, which identify the ring with Q^dim.
class CircleRing {
public:
    CircleRing(int N, int m, RootSet sigma);

    int N() const { return N_; }
    int m() const { return m_; }
    const RootSet& sigma() const { return sigma_; }
    int dimension() const { return static_cast<int>(subsets_.size()); }
    int grading_shift() const { return -m_ * (N_ - m_); }
    const std::vector<Subset>& idempotent_index() const { return subsets_; }
    const std::vector<Partition>& schur_basis() const { return partitions_; }
    int subset_position(Subset s) const;
    bool same_ring(const CircleRing& o) const;

    // Row functional z with zeta(x) = z . coords(x).
    const std::vector<Rational>& zeta_functional() const;

private:
    int N_, m_;
    RootSet sigma_;
    std::vector<Subset> subsets_;
    std::vector<Partition> partitions_;
    mutable std::once_flag zeta_once_;
    mutable std::vector<Rational> zeta_;
};

using CircleRingPtr = std::shared_ptr<const CircleRing>;

CircleRingPtr make_circle_ring(int N, int m, const RootSet& sigma);
CircleRingPtr make_circle_ring(int N, int m);  // sigma = {0..N-1}

struct CircleRingElement {
    CircleRingPtr ring;
    std::vector<Rational> coords;  // aligned with ring->idempotent_index()

    CircleRingElement operator+(const CircleRingElement& o) const;
    CircleRingElement operator-(const CircleRingElement& o) const;
    CircleRingElement operator*(const CircleRingElement& o) const;
    CircleRingElement operator*(const Rational& c) const;
    bool operator==(const CircleRingElement& o) const;
};

CircleRingElement ring_one(const CircleRingPtr& ring);
CircleRingElement ring_idempotent(const CircleRingPtr& ring, Subset omega);
// Image of a polynomial in the m-letter alphabet `X`.
CircleRingElement from_polynomial(const CircleRingPtr& ring, const SymPoly& p);
// S_lambda(X) or, with difference = true, S_lambda(X - sigma).
CircleRingElement from_schur(const CircleRingPtr& ring, const Partition& lambda, bool difference);
Rational zeta(const CircleRingElement& x);
// M[omega][lambda] = S_lambda(omega); throws DomainError if singular.
RMatrix change_of_basis_matrix(const CircleRing& ring, bool difference = false);

}  // namespace slnstate
