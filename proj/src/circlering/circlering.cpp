#include "slnstate/circlering.hpp"

#include <algorithm>

namespace slnstate {

CircleRing::CircleRing(int N, int m, RootSet sigma)
    : N_(N), m_(m), sigma_(std::move(sigma)) {
    if (sigma_.size() != N) throw DomainError("sigma must have exactly N roots");
    if (m < 1 || m > N) throw DomainError("circle ring needs 1 <= m <= N");
    subsets_ = subsets_of_size(N, m);
    partitions_ = partitions_in_box(m, N - m);
}

int CircleRing::subset_position(Subset s) const {
    auto it = std::lower_bound(subsets_.begin(), subsets_.end(), s, [](Subset a, Subset b) {
        return a.indices() < b.indices();
    });
    if (it == subsets_.end() || *it != s) throw DomainError("subset is not an idempotent index");
    return static_cast<int>(it - subsets_.begin());
}

bool CircleRing::same_ring(const CircleRing& o) const {
    return N_ == o.N_ && m_ == o.m_ && sigma_ == o.sigma_;
}

const std::vector<Rational>& CircleRing::zeta_functional() const {
    std::call_once(zeta_once_, [this] {
        // zeta picks the coefficient of S_{box}(X - sigma) in the basis S_mu(X - sigma):
        // solve D^T z = e_box where D[omega][mu] = S_mu(omega - sigma).
        RMatrix d = change_of_basis_matrix(*this, true);
        const std::size_t n = d.size();
        RMatrix dt(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) dt[i][j] = d[j][i];
        std::vector<Rational> e(n, Rational(0));
        auto box = Partition::box(m_, N_ - m_);
        auto it = std::find(partitions_.begin(), partitions_.end(), box);
        e[static_cast<std::size_t>(it - partitions_.begin())] = 1;
        zeta_ = solve(dt, e);
    });
    return zeta_;
}

CircleRingPtr make_circle_ring(int N, int m, const RootSet& sigma) {
    return std::make_shared<const CircleRing>(N, m, sigma);
}

CircleRingPtr make_circle_ring(int N, int m) { return make_circle_ring(N, m, RootSet::standard(N)); }

namespace {

void check_same(const CircleRingElement& a, const CircleRingElement& b) {
    if (!a.ring || !b.ring || !a.ring->same_ring(*b.ring))
        throw DomainError("circle ring elements belong to different rings");
}

}  // namespace

CircleRingElement CircleRingElement::operator+(const CircleRingElement& o) const {
    check_same(*this, o);
    CircleRingElement r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

CircleRingElement CircleRingElement::operator-(const CircleRingElement& o) const {
    return *this + o * Rational(-1);
}

CircleRingElement CircleRingElement::operator*(const CircleRingElement& o) const {
    check_same(*this, o);
    CircleRingElement r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] *= o.coords[i];
    return r;
}

CircleRingElement CircleRingElement::operator*(const Rational& c) const {
    CircleRingElement r = *this;
    for (auto& x : r.coords) x *= c;
    return r;
}

bool CircleRingElement::operator==(const CircleRingElement& o) const {
    check_same(*this, o);
    return coords == o.coords;
}

CircleRingElement ring_one(const CircleRingPtr& ring) {
    return {ring, std::vector<Rational>(static_cast<std::size_t>(ring->dimension()), Rational(1))};
}

CircleRingElement ring_idempotent(const CircleRingPtr& ring, Subset omega) {
    CircleRingElement e{ring, std::vector<Rational>(static_cast<std::size_t>(ring->dimension()), Rational(0))};
    e.coords[static_cast<std::size_t>(ring->subset_position(omega))] = 1;
    return e;
}

CircleRingElement from_polynomial(const CircleRingPtr& ring, const SymPoly& p) {
    if (p.alphabets().size() > 1 || (p.alphabets().size() == 1 && p.alphabets()[0].size != ring->m()))
        throw DomainError("polynomial must be in one alphabet of size m");
    CircleRingElement e{ring, {}};
    for (Subset s : ring->idempotent_index()) e.coords.push_back(p.evaluate(s.values(ring->sigma())));
    return e;
}

CircleRingElement from_schur(const CircleRingPtr& ring, const Partition& lambda, bool difference) {
    if (!lambda.fits(ring->m(), ring->N() - ring->m()))
        throw DomainError("partition " + to_string(lambda) + " is outside the m x (N-m) box");
    CircleRingElement e{ring, {}};
    std::vector<Rational> none;
    for (Subset s : ring->idempotent_index())
        e.coords.push_back(
            schur_difference(lambda, s.values(ring->sigma()), difference ? ring->sigma().roots() : none));
    return e;
}

Rational zeta(const CircleRingElement& x) {
    if (!x.ring) throw DomainError("element has no ring");
    const auto& z = x.ring->zeta_functional();
    Rational total = 0;
    for (std::size_t i = 0; i < z.size(); ++i) total += z[i] * x.coords[i];
    return total;
}

RMatrix change_of_basis_matrix(const CircleRing& ring, bool difference) {
    RMatrix m;
    std::vector<Rational> none;
    for (Subset s : ring.idempotent_index()) {
        std::vector<Rational> row;
        auto v = s.values(ring.sigma());
        for (const auto& lambda : ring.schur_basis())
            row.push_back(schur_difference(lambda, v, difference ? ring.sigma().roots() : none));
        m.push_back(std::move(row));
    }
    if (determinant(m) == 0) throw DomainError("Schur evaluation matrix is singular");
    return m;
}

}  // namespace slnstate
