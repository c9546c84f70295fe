#pragma once

#include <span>
#include <string>
#include <vector>

#include "clusterkit/exchange_matrix.hpp"
#include "clusterkit/seed.hpp"

namespace clusterkit {

enum class VectorKind { C, D, F, G };

struct VectorMatrix {
    VectorKind kind;
    IntMat m; // columns are the vectors v_{i;t}
};

/// Fused walk state: carries B_t together with the C-, D-, F- and G-matrices,
/// advanced one tree edge at a time. All four recursions consume B_t, and the
/// F- and G-updates additionally consume the current C column, so they are
/// stepped together.
struct RecursionWalk {
    IntMat b0; // initial exchange matrix (the G-update needs it)
    IntMat bt;
    IntMat c, d, f, g;

    explicit RecursionWalk(const IntMat& b);
    void step(int k); // 1-based direction
    void apply(std::span<const int> word);
};

VectorMatrix c_matrix(const IntMat& b, std::span<const int> word);
VectorMatrix d_matrix_recursive(const IntMat& b, std::span<const int> word);
VectorMatrix f_matrix_recursive(const IntMat& b, std::span<const int> word);
VectorMatrix g_matrix(const IntMat& b, std::span<const int> word);

/// D-matrix read off the seed engine: column i is the denominator vector of
/// x_{i;t}. Must agree with d_matrix_recursive on every walk.
VectorMatrix d_matrix_from_seed(const IntMat& b, std::span<const int> word);

/// F-polynomials at the end of the walk (polynomials in y_1..y_n).
std::vector<LaurentPoly> F_polynomials(const IntMat& b, std::span<const int> word);

struct CheckReport {
    std::string check;
    bool pass = true;
    std::vector<std::string> failures;

    explicit CheckReport(std::string name = "") : check(std::move(name)) {}

    void fail(std::string message) {
        pass = false;
        failures.push_back(std::move(message));
    }
};

/// F_t == [D_t]_+ entrywise at the endpoint of the walk. Advisory when the
/// matrix is neither of finite type nor rank 2 (the equality can fail there).
CheckReport verify_fd(const IntMat& b, std::span<const int> word, std::size_t classification_cap = 50000);

/// The same equality at every enumerated non-labeled seed (finite type).
CheckReport verify_fd_all_seeds(const IntMat& b, std::size_t cap = 50000);

/// The same equality at every vertex t_{-window}..t_{window} of a rank-2 strip.
CheckReport verify_fd_rank2_window(const IntMat& b, int window);

/// D_t^{B;t0} == (D_{t0}^{B_t^T;t})^T and the F-matrix analog, checked by
/// recomputing both matrices from the far end of the walk.
CheckReport verify_duality(const IntMat& b, std::span<const int> word);

/// Indices (row i, column j), 1-based, of the initial columns -e_i of D,
/// cross-checked against the zero-row rule: i is an initial row exactly when
/// every non-negative column of D vanishes in row i. Throws on inconsistent
/// input (a column neither non-negative-nonzero nor of the form -e_i, or a
/// mismatch between the zero rows and the initial columns present).
std::vector<std::pair<int, int>> detect_initial_d_columns(const IntMat& d);

struct UniquenessReport {
    bool pass = true;
    bool complete = true;       // enumeration finished under the cap
    std::size_t clusters = 0;   // distinct non-labeled clusters inspected
    std::vector<std::string> collisions;
};

/// Enumerates all non-labeled seeds and asserts that the map
/// cluster -> multiset of f-vectors is injective.
UniquenessReport verify_uniqueness_finite(const IntMat& b, std::size_t cap = 50000);

/// Rank-2 window variant: seeds t_{-window}..t_{window} on the strip, with
/// f-vector multisets computed by the recursion.
UniquenessReport verify_uniqueness_rank2_window(const IntMat& b, int window);

/// Seeds of the bipartite belt induced by the initial seed: everything
/// reachable by alternating composite source/sink mutations. Requires a
/// bipartite matrix; guard bounds the number of collected seeds.
std::vector<Seed> bipartite_belt(const IntMat& b, std::size_t guard = 10000);

/// Alternating walk word 1,2,1,... (n > 0) or 2,1,2,... (n < 0) of length |n|
/// reaching vertex t_n of a rank-2 strip.
std::vector<int> rank2_alternating_word(int n);

} // namespace clusterkit
