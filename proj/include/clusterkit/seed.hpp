#pragma once

#include <span>
#include <string>
#include <vector>

#include "clusterkit/exchange_matrix.hpp"
#include "clusterkit/laurent.hpp"

namespace clusterkit {

/// Labeled seed with principal coefficients, expressed over the initial data:
/// each cluster variable is a Laurent polynomial in x_1..x_n, y_1..y_n (the
/// first n ring variables are the x's, the last n the y's), each coefficient
/// is a tropical monomial in y_1..y_n.
struct Seed {
    std::vector<LaurentPoly> x;
    std::vector<TropicalMonomial> y;
    IntMat b;

    int rank() const { return b.n; }
};

/// Seed at the initial vertex: x_i = x_i, y_i = y_i, matrix B.
Seed initial_seed(const IntMat& b);

/// Seed mutation in direction k (1-based). The new variable is
///   x'_k = (y_k * prod x_i^{[b_ik]+} + prod x_i^{[-b_ik]+}) / ((y_k (+) 1) x_k)
/// computed by exact Laurent division in the initial frame, with the tropical
/// monomials embedded as Laurent monomials in the y block. Involutive.
Seed mutate_seed(const Seed& s, int k);

/// Left-to-right composition of mutate_seed along the word.
Seed apply_word(Seed s, std::span<const int> word);

/// True iff some index permutation aligns x, y and B simultaneously.
bool non_labeled_equal(const Seed& a, const Seed& b);

/// Canonical serialization of the non-labeled seed (permutation class).
std::string seed_canonical_key(const Seed& s);

/// Canonical serialization of the non-labeled cluster only (the x multiset).
std::string cluster_canonical_key(const Seed& s);

struct SeedEnumeration {
    struct Entry {
        Seed seed;             // representative
        std::vector<int> word; // walk from the initial vertex reaching it
    };
    std::vector<Entry> seeds;
    bool complete = false; // false iff the cap cut the search short
};

/// BFS over labeled seeds modulo non-labeled equivalence. For finite type
/// this is the full exchange-graph vertex set (complete = true); otherwise
/// the cap bounds the number of distinct non-labeled seeds returned.
SeedEnumeration enumerate_seeds(const IntMat& b, std::size_t cap = 50000);

/// F-polynomial of one cluster variable: x set to 1, restricted to the y's.
LaurentPoly f_polynomial(const LaurentPoly& cluster_variable, int rank);

/// Maximal y-degrees of the F-polynomial, read off the variable itself.
std::vector<long long> f_vector(const LaurentPoly& cluster_variable, int rank);

} // namespace clusterkit
