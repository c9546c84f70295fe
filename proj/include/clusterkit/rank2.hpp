#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clusterkit/exchange_matrix.hpp"
#include "clusterkit/laurent.hpp"

namespace clusterkit {

/// Parameters of the rank-2 exchange matrix [[0, b], [-c, 0]], b, c >= 0.
struct Rank2Params {
    long long b = 0;
    long long c = 0;
};

struct SizeGuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default bound on a1 + a2 for compatible-pair enumeration (2^(a1+a2) subsets).
inline constexpr int kDefaultPairGuard = 24;

/// The maximal lattice path of type a1 x a2: from (0,0) to (a1,a2), weakly
/// below the diagonal and hugging it (the height after column x is
/// floor(x*a2/a1), the largest admissible value). Stored as a cyclic vertex
/// ring, (0,0) identified with (a1,a2); edges carry their 1-based u_i / v_j
/// labels in path order.
struct MaximalDyckPath {
    struct Point {
        int x = 0, y = 0;
        bool operator==(const Point&) const = default;
    };
    struct Edge {
        bool horizontal = false;
        int index = 0; // 1-based within its kind
        Point from, to;
    };

    int a1 = 0, a2 = 0;
    std::vector<Point> ring;  // path vertices in order, final (a1,a2) omitted
    std::vector<Edge> edges;  // edge i goes ring[i] -> ring[i+1 mod size]

    int length() const { return a1 + a2; }
    /// Ring position of a lattice point; (a1,a2) is position 0. Throws on
    /// points not on the path.
    int position_of(Point p) const;
};

MaximalDyckPath maximal_dyck_path(int a1, int a2);

/// Subpath from A northeast to B with wrap-around through (a1,a2) == (0,0);
/// A == B yields the full cycle. Horizontal/vertical edge labels plus the
/// interior lattice points (endpoints excluded).
struct SubpathEdges {
    std::vector<int> h; // u indices, 1-based, in path order
    std::vector<int> v; // v indices
    std::vector<MaximalDyckPath::Point> interior;
};

SubpathEdges subpath_edges(const MaximalDyckPath& path, MaximalDyckPath::Point a, MaximalDyckPath::Point b);

/// Edge subsets as bitmasks: bit i-1 of s1 is u_i, bit j-1 of s2 is v_j.
bool is_compatible(const MaximalDyckPath& path, std::uint32_t s1, std::uint32_t s2, Rank2Params params);

struct CompatiblePair {
    std::vector<int> s1; // u indices, ascending
    std::vector<int> s2; // v indices, ascending
};

/// All compatible pairs of the maximal path of type a1 x a2, in deterministic
/// (s1 mask, s2 mask) order. Brute force over subsets; throws
/// SizeGuardExceeded when a1 + a2 > guard.
std::vector<CompatiblePair> enumerate_compatible_pairs(int a1, int a2, Rank2Params params,
                                                       int guard = kDefaultPairGuard);

/// Dyck-path expansion of the variable with denominator vector d:
///   x_d = x1^{-d1} x2^{-d2} sum x1^{b|S2|} x2^{c|S1|}
/// over compatible pairs in the maximal path of type [d1]+ x [d2]+.
/// Two-variable ring (x1, x2).
LaurentPoly greedy_element(std::array<long long, 2> d, Rank2Params params, int guard = kDefaultPairGuard);

/// Principal-coefficients extension:
///   x_d = x1^{-d1} x2^{-d2} sum y1^{[d1]+ - |S1|} y2^{|S2|} x1^{b|S2|} x2^{c|S1|}.
/// Four-variable ring (x1, x2, y1, y2), matching the seed engine's frame.
LaurentPoly greedy_element_principal(std::array<long long, 2> d, Rank2Params params,
                                     int guard = kDefaultPairGuard);

/// F-polynomial with maximal degree vector f (f >= 0 componentwise):
///   F_f = sum y1^{f1 - |S1|} y2^{|S2|}
/// over compatible pairs in the maximal path of type f1 x f2.
/// Two-variable ring (y1, y2).
LaurentPoly restore_F(std::array<long long, 2> f, Rank2Params params, int guard = kDefaultPairGuard);

/// Normalized Chebyshev values of the second kind:
/// S_{-1} = 0, S_0 = 1, S_p = u S_{p-1} - S_{p-2}. Requires p >= -1.
long long chebyshev_S(int p, long long u);

/// Closed-form D-matrix at vertex t_n of the rank-2 strip (t_0 at n = 0,
/// positive direction mutating 1,2,1,...), built from Chebyshev values with
/// u = bc - 2; negative n via the 180-degree rotation of the (c,b) matrix at
/// -n. Agrees with the recursion for bc >= 4.
IntMat rank2_D_closed_form(int n, Rank2Params params);

/// g = (-d1, c d1 - d2) for a non-initial d-vector.
std::array<long long, 2> g_from_d_rank2(std::array<long long, 2> d, Rank2Params params);

} // namespace clusterkit
