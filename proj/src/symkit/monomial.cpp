#include "slnstate/symkit.hpp"

#include <algorithm>
#include <numeric>

namespace slnstate {

MonomialPoly MonomialPoly::constant(int variables, const Rational& c) {
    MonomialPoly p(variables);
    p.add_term(Exponents(static_cast<std::size_t>(variables), 0), c);
    return p;
}

MonomialPoly MonomialPoly::variable(int variables, int i) {
    MonomialPoly p(variables);
    Exponents e(static_cast<std::size_t>(variables), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, 1);
    return p;
}

void MonomialPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent vector has the wrong length");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MonomialPoly MonomialPoly::operator+(const MonomialPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("variable count mismatch");
    MonomialPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MonomialPoly MonomialPoly::operator-(const MonomialPoly& o) const { return *this + o * Rational(-1); }

MonomialPoly MonomialPoly::operator*(const MonomialPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("variable count mismatch");
    MonomialPoly out(nvars_);
    Exponents e(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MonomialPoly MonomialPoly::operator*(const Rational& c) const {
    MonomialPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
    return out;
}

int MonomialPoly::degree_in(int i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return d;
}

bool MonomialPoly::is_symmetric() const {
    std::vector<int> perm(static_cast<std::size_t>(nvars_));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i + 1 < nvars_; ++i) {
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i + 1)]);
            auto it = terms_.find(f);
            if (it == terms_.end() || it->second != c) return false;
        }
    }
    return true;
}

Rational MonomialPoly::evaluate(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw DomainError("wrong number of values");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) t *= x[i];
        total += t;
    }
    return total;
}

MonomialPoly monomial_elementary(int variables, int first, int count, int k) {
    MonomialPoly p(variables);
    if (k < 0 || k > count) return p;
    for (Subset s : subsets_of_size(count, k)) {
        MonomialPoly::Exponents e(static_cast<std::size_t>(variables), 0);
        for (int i : s.indices()) e[static_cast<std::size_t>(first + i)] = 1;
        p.add_term(e, 1);
    }
    return p;
}

MonomialPoly monomial_complete(int variables, int first, int count, int k) {
    MonomialPoly p(variables);
    if (k < 0) return p;
    MonomialPoly::Exponents e(static_cast<std::size_t>(variables), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == count - 1 || count == 0) {
            if (count == 0) {
                if (left == 0) p.add_term(e, 1);
                return;
            }
            e[static_cast<std::size_t>(first + i)] = left;
            p.add_term(e, 1);
            e[static_cast<std::size_t>(first + i)] = 0;
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[static_cast<std::size_t>(first + i)] = a;
            self(self, i + 1, left - a);
        }
        e[static_cast<std::size_t>(first + i)] = 0;
    };
    rec(rec, 0, k);
    return p;
}

MonomialPoly expand_monomials(const SymPoly& p) {
    int n = p.variable_count();
    std::vector<MonomialPoly> gens;
    int first = 0;
    for (const auto& a : p.alphabets()) {
        for (int k = 1; k <= a.size; ++k) gens.push_back(monomial_elementary(n, first, a.size, k));
        first += a.size;
    }
    MonomialPoly out(n);
    for (const auto& [e, c] : p.terms()) {
        MonomialPoly t = MonomialPoly::constant(n, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) t = t * gens[i];
        out = out + t;
    }
    return out;
}

}  // namespace slnstate
