#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace slnstate {

// Thrown when inputs are well formed but violate a mathematical precondition.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown for malformed textual input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
Rational make_rational(long num, long den);  // canonical form
std::string to_string(const Rational& q);  // always "p/q"
Rational binomial(int n, int k);

// Exact square matrix helpers over Q.
using RMatrix = std::vector<std::vector<Rational>>;
Rational determinant(RMatrix a);  // Bareiss fraction-free elimination
// Solves a x = b; throws DomainError if a is singular.
std::vector<Rational> solve(RMatrix a, std::vector<Rational> b);
RMatrix inverse(const RMatrix& a);

// Ordered list of distinct rational roots.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(std::vector<Rational> roots);
    static RootSet standard(int N);  // {0, 1, ..., N-1}

    int size() const { return static_cast<int>(roots_.size()); }
    const Rational& operator[](int i) const { return roots_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& roots() const { return roots_; }
    bool operator==(const RootSet& o) const { return roots_ == o.roots_; }

private:
    std::vector<Rational> roots_;
};

constexpr int kMaxRoots = 16;

// Subset of root positions 0..N-1 stored as a bitmask.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
    static Subset of(const std::vector<int>& indices);
    static Subset full(int N) { return Subset(N >= 32 ? ~0u : ((1u << N) - 1u)); }

    std::uint32_t bits() const { return bits_; }
    int size() const { return __builtin_popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int i) const { return (bits_ >> i) & 1u; }
    bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    std::vector<int> indices() const;
    std::vector<Rational> values(const RootSet& sigma) const;
    Subset complement(int N) const { return Subset(full(N).bits_ & ~bits_); }

    Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
    Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
    Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
    auto operator<=>(const Subset&) const = default;

private:
    std::uint32_t bits_ = 0;
};

// All subsets of {0..N-1} of size k in lexicographic order of sorted index lists.
std::vector<Subset> subsets_of_size(int N, int k);
std::string to_string(Subset s);

// Non-increasing list of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition box(int rows, int cols);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    const std::vector<int>& parts() const { return parts_; }
    Partition conjugate() const;
    bool fits(int rows, int cols) const { return length() <= rows && part(0) <= cols; }
    // (cols - lambda_rows, ..., cols - lambda_1) inside the rows x cols box.
    Partition complement(int rows, int cols) const;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions inside the rows x cols box, ordered by weight then lexicographically descending.
std::vector<Partition> partitions_in_box(int rows, int cols);
std::string to_string(const Partition& p);

struct Alphabet {
    std::string name;
    int size = 0;
    bool operator==(const Alphabet&) const = default;
};

// Symmetric polynomial in one or more alphabets, stored in the elementary
// generators X_{a,1..size_a}. Exponent vectors are flattened alphabet by alphabet.
class SymPoly {
public:
    using Exponents = std::vector<int>;

    SymPoly() = default;
    explicit SymPoly(std::vector<Alphabet> alphabets);
    static SymPoly constant(const Rational& c, std::vector<Alphabet> alphabets = {});
    // The generator e_k of the named alphabet; k = 0 gives 1.
    static SymPoly generator(const Alphabet& a, int k);

    const std::vector<Alphabet>& alphabets() const { return alphabets_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    int variable_count() const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c);

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator*(const Rational& c) const;
    SymPoly pow(int k) const;
    bool operator==(const SymPoly& o) const;

    // Re-express over a superset of alphabets.
    SymPoly embed(const std::vector<Alphabet>& target) const;
    // Degree in the doubled convention: deg X_{a,k} = 2k.
    int degree() const;
    // Partial degree in one variable of the named alphabet, doubled convention.
    int partial_degree(const std::string& alphabet) const;

    // Evaluate with each alphabet specialized to a list of values of the alphabet's size.
    Rational evaluate(const std::map<std::string, std::vector<Rational>>& values) const;
    Rational evaluate(const std::vector<Rational>& values) const;  // single-alphabet shorthand

    // Replace the generators of alphabet `name` by the given images (index k-1 for X_k).
    SymPoly substitute(const std::string& name, const std::vector<SymPoly>& images) const;

private:
    std::vector<Alphabet> alphabets_;
    std::map<Exponents, Rational> terms_;
    int offset_of(const std::string& name) const;
    friend SymPoly align(const SymPoly&, const std::vector<Alphabet>&);
};

std::string to_string(const SymPoly& p);

// Sparse polynomial in commuting variables x_0..x_{n-1}.
class MonomialPoly {
public:
    using Exponents = std::vector<int>;

    MonomialPoly() = default;
    explicit MonomialPoly(int variables) : nvars_(variables) {}
    static MonomialPoly constant(int variables, const Rational& c);
    static MonomialPoly variable(int variables, int i);

    int variables() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& e, const Rational& c);

    MonomialPoly operator+(const MonomialPoly& o) const;
    MonomialPoly operator-(const MonomialPoly& o) const;
    MonomialPoly operator*(const MonomialPoly& o) const;
    MonomialPoly operator*(const Rational& c) const;
    bool operator==(const MonomialPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    int degree_in(int i) const;
    bool is_symmetric() const;
    Rational evaluate(const std::vector<Rational>& x) const;

private:
    int nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

// e_k and h_k of variables [first, first+count) inside an ambient ring of `variables`.
MonomialPoly monomial_elementary(int variables, int first, int count, int k);
MonomialPoly monomial_complete(int variables, int first, int count, int k);
// Expansion of a SymPoly into monomials; alphabets occupy consecutive variable blocks.
MonomialPoly expand_monomials(const SymPoly& p);

// Elementary and complete symmetric functions of a list of values.
std::vector<Rational> elementary_values(const std::vector<Rational>& values);
Rational elementary_value(int k, const std::vector<Rational>& values);

// h_k(values - sigma) from prod_{r in sigma}(1 - r t) / prod_{s in values}(1 - s t).
Rational complete_difference(int k, const std::vector<Rational>& values,
                             const std::vector<Rational>& sigma);
std::vector<Rational> complete_difference_series(int upto, const std::vector<Rational>& values,
                                                 const std::vector<Rational>& sigma);
// Jacobi-Trudi determinant S_lambda(A - B).
Rational schur_difference(const Partition& lambda, const std::vector<Rational>& a,
                          const std::vector<Rational>& b);
// S_{(n^m)}(omega1 - omega2) for |omega1| = m, |omega2| = n.
Rational schur_box_ratio(int m, int n, const std::vector<Rational>& omega1,
                         const std::vector<Rational>& omega2);
// e_i({a x_j + b}) as a polynomial in e_1..e_m of the m-letter alphabet `name`.
SymPoly affine_elementary_substitution(int i, int m, const Rational& a, const Rational& b,
                                       const std::string& name = "X");

}  // namespace slnstate
