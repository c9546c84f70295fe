#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterkit/bigint.hpp"

namespace clusterkit {

/// Exponent vector of a Laurent monomial. Fixed length per ring context;
/// compared lexicographically (std::vector's operator<), which is the
/// canonical term order used everywhere for output and for exact division.
using Exponents = std::vector<int>;

/// Thrown when exact_div is asked for a quotient that does not exist over
/// the integer Laurent ring. In this engine that can only mean a bug: every
/// division performed by seed mutation is exact by the Laurent phenomenon.
struct NonExactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse multivariate Laurent polynomial with BigInt coefficients.
///
/// Invariants: no zero coefficients are stored; the empty term map is 0;
/// the single term {0,...,0} -> 1 is 1. All terms share one exponent-vector
/// length (the ring context), checked on every binary operation.
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, BigInt>;

    explicit LaurentPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("LaurentPoly: negative variable count");
    }

    static LaurentPoly constant(int nvars, BigInt c);
    static LaurentPoly monomial(int nvars, Exponents e, BigInt c);
    static LaurentPoly variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c to the coefficient of e, dropping the term if it cancels.
    void add_term(const Exponents& e, const BigInt& c);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    LaurentPoly pow(int e) const; // e >= 0

    /// Exact division: returns r with r*q == *this. Performed as multivariate
    /// polynomial division (lex leading-term reduction) after clearing the
    /// common monomial factors of both operands. Throws NonExactDivision if
    /// no integer Laurent quotient exists, std::invalid_argument on q == 0.
    LaurentPoly exact_div(const LaurentPoly& q) const;

    /// Sets the listed variables to 1 (zeroes their exponents and merges).
    LaurentPoly specialized_at_one(std::span<const int> vars) const;

    /// Keeps only the listed variables, in order, as a new smaller ring.
    /// All dropped variables must have exponent 0 in every term.
    LaurentPoly restricted_to(std::span<const int> vars) const;

    int min_exponent(int var) const; // requires nonzero
    int max_exponent(int var) const; // requires nonzero

    bool all_coefficients_positive() const;

    /// Debug/diagnostic rendering, e.g. "x1^-1*x2 + x1^-1*y1".
    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    TermMap terms_;

    void check_same_ring(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: mismatched variable count");
    }
};

/// d_k = -(minimum exponent of variable first_var+k) for k in [0, count).
/// Matches the denominator-vector reading when the polynomial is a cluster
/// variable written over the initial cluster. Requires p != 0.
std::vector<long long> denominator_vector(const LaurentPoly& p, int first_var, int count);

/// Maximum exponent of one variable across all terms. Requires p != 0.
int max_degree(const LaurentPoly& p, int var);

/// Element of the tropical semifield Trop(y_1..y_n): a single Laurent
/// monomial in the generators. Multiplication adds exponent vectors;
/// tropical addition takes the componentwise minimum.
struct TropicalMonomial {
    Exponents e;

    static TropicalMonomial one(int n) { return TropicalMonomial{Exponents(static_cast<std::size_t>(n), 0)}; }
    static TropicalMonomial generator(int n, int index);

    int n() const { return static_cast<int>(e.size()); }
    TropicalMonomial inverse() const;
    TropicalMonomial power(long long k) const;
    bool operator==(const TropicalMonomial&) const = default;
};

TropicalMonomial operator*(const TropicalMonomial& a, const TropicalMonomial& b);
TropicalMonomial tropical_add(const TropicalMonomial& a, const TropicalMonomial& b);

/// Embeds a tropical monomial in n generators into the 2n-variable Laurent
/// ring whose last n variables are the coefficient generators.
LaurentPoly embed_coefficient(const TropicalMonomial& m, int rank);

} // namespace clusterkit
