#include "slnstate/symkit.hpp"

#include <algorithm>
#include <sstream>

namespace slnstate {

namespace {

std::vector<Alphabet> merge_alphabets(const std::vector<Alphabet>& a, const std::vector<Alphabet>& b) {
    std::vector<Alphabet> out = a;
    for (const auto& x : b) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Alphabet& y) { return y.name == x.name; });
        if (it == out.end())
            out.push_back(x);
        else if (it->size != x.size)
            throw DomainError("alphabet '" + x.name + "' used with two different sizes");
    }
    return out;
}

}  // namespace

SymPoly align(const SymPoly& p, const std::vector<Alphabet>& target) {
    if (p.alphabets_ == target) return p;
    std::vector<int> map;  // flattened source index -> target index
    for (const auto& a : p.alphabets_) {
        int off = 0;
        bool found = false;
        for (const auto& t : target) {
            if (t.name == a.name) {
                if (t.size != a.size)
                    throw DomainError("alphabet '" + a.name + "' used with two different sizes");
                for (int k = 0; k < a.size; ++k) map.push_back(off + k);
                found = true;
                break;
            }
            off += t.size;
        }
        if (!found) throw DomainError("alphabet '" + a.name + "' missing from target");
    }
    SymPoly out(target);
    int n = out.variable_count();
    for (const auto& [e, c] : p.terms_) {
        SymPoly::Exponents f(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(map[i])] = e[i];
        out.add_term(f, c);
    }
    return out;
}

SymPoly::SymPoly(std::vector<Alphabet> alphabets) : alphabets_(std::move(alphabets)) {
    for (std::size_t i = 0; i < alphabets_.size(); ++i) {
        if (alphabets_[i].size < 1) throw DomainError("alphabet sizes must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (alphabets_[i].name == alphabets_[j].name)
                throw DomainError("duplicate alphabet name '" + alphabets_[i].name + "'");
    }
}

SymPoly SymPoly::constant(const Rational& c, std::vector<Alphabet> alphabets) {
    SymPoly p(std::move(alphabets));
    p.add_term(Exponents(static_cast<std::size_t>(p.variable_count()), 0), c);
    return p;
}

SymPoly SymPoly::generator(const Alphabet& a, int k) {
    if (k < 0 || k > a.size) throw DomainError("generator index out of range");
    SymPoly p({a});
    Exponents e(static_cast<std::size_t>(a.size), 0);
    if (k > 0) e[static_cast<std::size_t>(k - 1)] = 1;
    p.add_term(e, 1);
    return p;
}

int SymPoly::variable_count() const {
    int n = 0;
    for (const auto& a : alphabets_) n += a.size;
    return n;
}

int SymPoly::offset_of(const std::string& name) const {
    int off = 0;
    for (const auto& a : alphabets_) {
        if (a.name == name) return off;
        off += a.size;
    }
    return -1;
}

void SymPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != variable_count())
        throw DomainError("exponent vector has the wrong length");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    auto al = merge_alphabets(alphabets_, o.alphabets_);
    SymPoly out = align(*this, al);
    for (const auto& [e, c] : align(o, al).terms_) out.add_term(e, c);
    return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + o * Rational(-1); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    auto al = merge_alphabets(alphabets_, o.alphabets_);
    SymPoly a = align(*this, al), b = align(o, al);
    SymPoly out(al);
    Exponents e(static_cast<std::size_t>(out.variable_count()));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

SymPoly SymPoly::operator*(const Rational& c) const {
    SymPoly out(alphabets_);
    if (c == 0) return out;
    for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
    return out;
}

SymPoly SymPoly::pow(int k) const {
    if (k < 0) throw DomainError("negative power");
    SymPoly r = constant(1, alphabets_), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool SymPoly::operator==(const SymPoly& o) const {
    auto al = merge_alphabets(alphabets_, o.alphabets_);
    return align(*this, al).terms_ == align(o, al).terms_;
}

SymPoly SymPoly::embed(const std::vector<Alphabet>& target) const { return align(*this, target); }

int SymPoly::degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0, i = 0;
        for (const auto& a : alphabets_)
            for (int k = 1; k <= a.size; ++k) d += 2 * k * e[static_cast<std::size_t>(i++)];
        best = std::max(best, d);
    }
    return best;
}

int SymPoly::partial_degree(const std::string& alphabet) const {
    int off = offset_of(alphabet);
    if (off < 0) return is_zero() ? -1 : 0;
    int size = 0;
    for (const auto& a : alphabets_)
        if (a.name == alphabet) size = a.size;
    // Each X_k is linear in any single variable with non-vanishing leading
    // coefficient, so a monomial has partial degree sum(exponents). Cancellation
    // between monomials can lower the true value; expand_monomials gives it exactly.
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int k = 0; k < size; ++k) d += e[static_cast<std::size_t>(off + k)];
        best = std::max(best, 2 * d);
    }
    return best;
}

Rational SymPoly::evaluate(const std::map<std::string, std::vector<Rational>>& values) const {
    std::vector<Rational> gens;
    for (const auto& a : alphabets_) {
        auto it = values.find(a.name);
        if (it == values.end()) throw DomainError("no values supplied for alphabet '" + a.name + "'");
        if (static_cast<int>(it->second.size()) != a.size)
            throw DomainError("alphabet '" + a.name + "' needs exactly " + std::to_string(a.size) +
                              " values");
        auto e = elementary_values(it->second);
        for (int k = 1; k <= a.size; ++k) gens.push_back(e[static_cast<std::size_t>(k)]);
    }
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) t *= gens[i];
        total += t;
    }
    return total;
}

Rational SymPoly::evaluate(const std::vector<Rational>& values) const {
    if (alphabets_.size() > 1) throw DomainError("single-alphabet evaluation on a multi-alphabet polynomial");
    if (alphabets_.empty()) {
        auto it = terms_.begin();
        return it == terms_.end() ? Rational(0) : it->second;
    }
    return evaluate(std::map<std::string, std::vector<Rational>>{{alphabets_[0].name, values}});
}

SymPoly SymPoly::substitute(const std::string& name, const std::vector<SymPoly>& images) const {
    int off = offset_of(name);
    if (off < 0) return *this;
    int size = 0;
    std::vector<Alphabet> rest;
    for (const auto& a : alphabets_) {
        if (a.name == name)
            size = a.size;
        else
            rest.push_back(a);
    }
    if (static_cast<int>(images.size()) != size)
        throw DomainError("substitution needs one image per generator");
    SymPoly out = constant(0, rest);
    for (const auto& [e, c] : terms_) {
        Exponents kept;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) < off || static_cast<int>(i) >= off + size) kept.push_back(e[i]);
        SymPoly term(rest);
        term.add_term(kept, c);
        for (int k = 0; k < size; ++k) {
            int p = e[static_cast<std::size_t>(off + k)];
            if (p) term = term * images[static_cast<std::size_t>(k)].pow(p);
        }
        out = out + term;
    }
    return out;
}

std::string to_string(const SymPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        std::size_t i = 0;
        for (const auto& a : p.alphabets())
            for (int k = 1; k <= a.size; ++k, ++i)
                if (e[i]) {
                    os << "*" << a.name << "_" << k;
                    if (e[i] > 1) os << "^" << e[i];
                }
    }
    return os.str();
}

}  // namespace slnstate
