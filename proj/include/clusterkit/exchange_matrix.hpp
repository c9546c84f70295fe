#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterkit {

/// Small square integer matrix, row-major, 0-based accessors.
struct IntMat {
    int n = 0;
    std::vector<long long> a;

    IntMat() = default;
    explicit IntMat(int size) : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {
        if (size < 0) throw std::invalid_argument("IntMat: negative size");
    }

    static IntMat identity(int size);
    static IntMat from_rows(const std::vector<std::vector<long long>>& rows);

    long long& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    long long operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }

    IntMat transposed() const;
    IntMat negated() const;
    bool operator==(const IntMat&) const = default;

    std::string str() const;
};

/// Componentwise positive part [m]_+ = max(m, 0).
IntMat positive_part(const IntMat& m);

inline long long pos(long long v) { return v > 0 ? v : 0; }

/// Minimal positive integer diagonal d with d_i b_ij = -d_j b_ji for all i,j,
/// or nullopt when none exists. Minimal means the componentwise-smallest
/// integral point on each connected component's solution ray.
std::optional<std::vector<long long>> check_skew_symmetrizable(const IntMat& b);

/// Matrix mutation in direction k (1-based). Involutive.
IntMat mutate_matrix(const IntMat& b, int k);
IntMat mutate_matrix(const IntMat& b, std::span<const int> word);

/// Validated skew-symmetrizable exchange matrix with its minimal symmetrizer.
class ExchangeMatrix {
public:
    explicit ExchangeMatrix(IntMat b);

    int rank() const { return b_.n; }
    const IntMat& entries() const { return b_; }
    const std::vector<long long>& symmetrizer() const { return d_; }

    ExchangeMatrix mutated(int k) const;

private:
    IntMat b_;
    std::vector<long long> d_;
};

/// Sign function with b_ij > 0 implying eps(i) = +1 and eps(j) = -1.
struct BipartiteSign {
    std::vector<int> eps; // entries +1 / -1
};

std::optional<BipartiteSign> bipartite_sign(const IntMat& b);

/// a_ii = 2, a_ij = -|b_ij| for i != j.
IntMat cartan_companion(const IntMat& b);

/// Dynkin label ("A3", "B2", "G2", products like "A2xA1") when the matrix is
/// a finite Cartan matrix up to simultaneous permutation, nullopt otherwise.
/// Finite test: all principal minors positive. Throws std::invalid_argument
/// when the input is not shaped like a symmetrizable generalized Cartan
/// matrix (diagonal 2, off-diagonal <= 0, zeros paired).
std::optional<std::string> classify_cartan(const IntMat& cartan);

struct FiniteTypeClass {
    enum class Verdict { Finite, Infinite, Undecided };
    Verdict verdict = Verdict::Undecided;
    std::string label;         // set for Finite
    std::vector<int> witness;  // 1-based mutation word reaching the bipartite representative
    std::optional<IntMat> bipartite_rep; // the matrix the witness word reaches
};

/// Breadth-first search of the mutation class (matrices deduplicated up to
/// simultaneous permutation) for a bipartite representative whose Cartan
/// companion is a finite Cartan matrix. Infinite as soon as any reached
/// matrix has |b_ij * b_ji| >= 4, or when the whole class is exhausted with
/// no such representative. Undecided when cap distinct matrices were seen.
FiniteTypeClass finite_type_classification(const IntMat& b, std::size_t cap = 50000);

/// Sorted source word (eps = +1) and sink word (eps = -1). Asserts that
/// b_ij = 0 whenever eps(i) = eps(j), so each word's mutations commute.
std::pair<std::vector<int>, std::vector<int>> source_sink_words(const IntMat& b, const BipartiteSign& sign);

/// Canonical key of b under simultaneous row/column permutation.
std::string permutation_canonical_key(const IntMat& b);

} // namespace clusterkit
