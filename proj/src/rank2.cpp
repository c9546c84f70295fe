#include "clusterkit/rank2.hpp"

#include <bit>

namespace clusterkit {

namespace {

void check_params(const Rank2Params& p) {
    if (p.b < 0 || p.c < 0) throw std::invalid_argument("rank2: parameters must be non-negative");
}

} // namespace

int MaximalDyckPath::position_of(Point p) const {
    if (p.x == a1 && p.y == a2) p = Point{0, 0}; // endpoints identified
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (ring[i] == p) return static_cast<int>(i);
    throw std::invalid_argument("MaximalDyckPath: point is not on the path");
}

MaximalDyckPath maximal_dyck_path(int a1, int a2) {
    if (a1 < 0 || a2 < 0) throw std::invalid_argument("maximal_dyck_path: negative type");
    MaximalDyckPath path;
    path.a1 = a1;
    path.a2 = a2;
    path.ring.push_back({0, 0});
    if (a1 == 0 && a2 == 0) return path;

    // Height after column x: the largest integer weakly below the diagonal.
    auto height = [&](int x) -> int { return a1 == 0 ? a2 : static_cast<int>((static_cast<long long>(x) * a2) / a1); };

    auto push_point = [&](MaximalDyckPath::Point p) {
        if (p.x == a1 && p.y == a2) return; // identified with (0,0)
        path.ring.push_back(p);
    };

    int vcount = 0;
    if (a1 == 0) {
        for (int y = 1; y <= a2; ++y) {
            path.edges.push_back({false, ++vcount, {0, y - 1}, {0, y}});
            push_point({0, y});
        }
        return path;
    }
    for (int x = 1; x <= a1; ++x) {
        const int h_prev = height(x - 1);
        path.edges.push_back({true, x, {x - 1, h_prev}, {x, h_prev}});
        push_point({x, h_prev});
        for (int y = h_prev + 1; y <= height(x); ++y) {
            path.edges.push_back({false, ++vcount, {x, y - 1}, {x, y}});
            push_point({x, y});
        }
    }
    return path;
}

SubpathEdges subpath_edges(const MaximalDyckPath& path, MaximalDyckPath::Point a, MaximalDyckPath::Point b) {
    SubpathEdges out;
    const int size = path.length();
    const int pa = path.position_of(a);
    const int pb = path.position_of(b);
    if (size == 0) return out; // degenerate 0 x 0 path
    int len = ((pb - pa) % size + size) % size;
    if (len == 0) len = size; // A == B traverses the full cycle
    for (int i = 0; i < len; ++i) {
        const auto& e = path.edges[static_cast<std::size_t>((pa + i) % size)];
        (e.horizontal ? out.h : out.v).push_back(e.index);
        if (i + 1 < len) out.interior.push_back(path.ring[static_cast<std::size_t>((pa + i + 1) % size)]);
    }
    return out;
}

namespace {

// Per-(u,v) compatibility data: for every interior point A of the subpath EF
// (E the left endpoint of u, F the upper endpoint of v), the counts and edge
// masks of the two halves EA and AF. Checking the compatibility condition for
// fixed subsets is then two popcounts per candidate point.
struct PairWitnesses {
    struct Candidate {
        int af_h_count = 0;          // |(AF)_1|
        std::uint32_t af_v_mask = 0; // (AF)_2 as a v-edge bitmask
        int ea_v_count = 0;          // |(EA)_2|
        std::uint32_t ea_h_mask = 0; // (EA)_1 as a u-edge bitmask
    };
    std::vector<Candidate> candidates;
};

PairWitnesses pair_witnesses(const MaximalDyckPath& path, int u, int v) {
    PairWitnesses out;
    const int size = path.length();
    MaximalDyckPath::Point e_point, f_point;
    for (const auto& e : path.edges) {
        if (e.horizontal && e.index == u) e_point = e.from;
        if (!e.horizontal && e.index == v) f_point = e.to;
    }
    const int pa = path.position_of(e_point);
    const int pb = path.position_of(f_point);
    int len = ((pb - pa) % size + size) % size;
    if (len == 0) len = size;

    int total_h = 0;
    std::uint32_t total_v_mask = 0;
    for (int i = 0; i < len; ++i) {
        const auto& e = path.edges[static_cast<std::size_t>((pa + i) % size)];
        if (e.horizontal) ++total_h;
        else total_v_mask |= 1u << (e.index - 1);
    }

    int prefix_h = 0, prefix_v = 0;
    std::uint32_t prefix_h_mask = 0, prefix_v_mask = 0;
    for (int i = 0; i + 1 < len; ++i) {
        const auto& e = path.edges[static_cast<std::size_t>((pa + i) % size)];
        if (e.horizontal) {
            ++prefix_h;
            prefix_h_mask |= 1u << (e.index - 1);
        } else {
            ++prefix_v;
            prefix_v_mask |= 1u << (e.index - 1);
        }
        out.candidates.push_back({total_h - prefix_h, total_v_mask & ~prefix_v_mask, prefix_v, prefix_h_mask});
    }
    return out;
}

std::vector<std::vector<PairWitnesses>> all_pair_witnesses(const MaximalDyckPath& path) {
    std::vector<std::vector<PairWitnesses>> table(static_cast<std::size_t>(path.a1));
    for (int u = 1; u <= path.a1; ++u) {
        table[static_cast<std::size_t>(u - 1)].reserve(static_cast<std::size_t>(path.a2));
        for (int v = 1; v <= path.a2; ++v)
            table[static_cast<std::size_t>(u - 1)].push_back(pair_witnesses(path, u, v));
    }
    return table;
}

bool compatible_with_witnesses(const std::vector<std::vector<PairWitnesses>>& table, std::uint32_t s1,
                               std::uint32_t s2, const Rank2Params& params) {
    if (s1 == 0 || s2 == 0) return true; // vacuous
    for (std::uint32_t rest1 = s1; rest1 != 0; rest1 &= rest1 - 1) {
        const int u = std::countr_zero(rest1);
        for (std::uint32_t rest2 = s2; rest2 != 0; rest2 &= rest2 - 1) {
            const int v = std::countr_zero(rest2);
            const auto& cands = table[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)].candidates;
            bool found = false;
            for (const auto& cand : cands) {
                if (cand.af_h_count == params.b * std::popcount(cand.af_v_mask & s2) ||
                    cand.ea_v_count == params.c * std::popcount(cand.ea_h_mask & s1)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

template <typename Fn>
void for_each_compatible(int a1, int a2, const Rank2Params& params, int guard, Fn&& fn) {
    check_params(params);
    if (a1 < 0 || a2 < 0) throw std::invalid_argument("compatible pairs: negative path type");
    if (a1 + a2 > guard || a1 + a2 > 30)
        throw SizeGuardExceeded("compatible-pair enumeration: a1 + a2 exceeds the size guard");
    const MaximalDyckPath path = maximal_dyck_path(a1, a2);
    const auto table = all_pair_witnesses(path);
    const std::uint32_t lim1 = 1u << a1, lim2 = 1u << a2;
    for (std::uint32_t s1 = 0; s1 < lim1; ++s1)
        for (std::uint32_t s2 = 0; s2 < lim2; ++s2)
            if (compatible_with_witnesses(table, s1, s2, params)) fn(s1, s2);
}

} // namespace

bool is_compatible(const MaximalDyckPath& path, std::uint32_t s1, std::uint32_t s2, Rank2Params params) {
    check_params(params);
    if (path.a1 < 32 && (s1 >> path.a1) != 0) throw std::invalid_argument("is_compatible: s1 out of range");
    if (path.a2 < 32 && (s2 >> path.a2) != 0) throw std::invalid_argument("is_compatible: s2 out of range");
    if (s1 == 0 || s2 == 0) return true;
    const auto table = all_pair_witnesses(path);
    return compatible_with_witnesses(table, s1, s2, params);
}

std::vector<CompatiblePair> enumerate_compatible_pairs(int a1, int a2, Rank2Params params, int guard) {
    std::vector<CompatiblePair> out;
    for_each_compatible(a1, a2, params, guard, [&](std::uint32_t s1, std::uint32_t s2) {
        CompatiblePair pair;
        for (int i = 0; i < a1; ++i)
            if (s1 & (1u << i)) pair.s1.push_back(i + 1);
        for (int j = 0; j < a2; ++j)
            if (s2 & (1u << j)) pair.s2.push_back(j + 1);
        out.push_back(std::move(pair));
    });
    return out;
}

namespace {

// counts[p][q] = number of compatible pairs with |S1| = p, |S2| = q.
std::vector<std::vector<long long>> pair_size_counts(int a1, int a2, const Rank2Params& params, int guard) {
    std::vector<std::vector<long long>> counts(static_cast<std::size_t>(a1) + 1,
                                               std::vector<long long>(static_cast<std::size_t>(a2) + 1, 0));
    for_each_compatible(a1, a2, params, guard, [&](std::uint32_t s1, std::uint32_t s2) {
        ++counts[static_cast<std::size_t>(std::popcount(s1))][static_cast<std::size_t>(std::popcount(s2))];
    });
    return counts;
}

} // namespace

LaurentPoly greedy_element(std::array<long long, 2> d, Rank2Params params, int guard) {
    const int a1 = static_cast<int>(pos(d[0])), a2 = static_cast<int>(pos(d[1]));
    const auto counts = pair_size_counts(a1, a2, params, guard);
    LaurentPoly sum(2);
    for (int p = 0; p <= a1; ++p)
        for (int q = 0; q <= a2; ++q) {
            if (counts[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] == 0) continue;
            Exponents e{static_cast<int>(-d[0] + params.b * q), static_cast<int>(-d[1] + params.c * p)};
            sum.add_term(e, BigInt(static_cast<long>(counts[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)])));
        }
    return sum;
}

LaurentPoly greedy_element_principal(std::array<long long, 2> d, Rank2Params params, int guard) {
    const int a1 = static_cast<int>(pos(d[0])), a2 = static_cast<int>(pos(d[1]));
    const auto counts = pair_size_counts(a1, a2, params, guard);
    LaurentPoly sum(4);
    for (int p = 0; p <= a1; ++p)
        for (int q = 0; q <= a2; ++q) {
            if (counts[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] == 0) continue;
            Exponents e{static_cast<int>(-d[0] + params.b * q), static_cast<int>(-d[1] + params.c * p), a1 - p, q};
            sum.add_term(e, BigInt(static_cast<long>(counts[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)])));
        }
    return sum;
}

LaurentPoly restore_F(std::array<long long, 2> f, Rank2Params params, int guard) {
    if (f[0] < 0 || f[1] < 0) throw std::invalid_argument("restore_F: f must be non-negative");
    const int a1 = static_cast<int>(f[0]), a2 = static_cast<int>(f[1]);
    const auto counts = pair_size_counts(a1, a2, params, guard);
    LaurentPoly sum(2);
    for (int p = 0; p <= a1; ++p)
        for (int q = 0; q <= a2; ++q) {
            if (counts[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] == 0) continue;
            Exponents e{a1 - p, q};
            sum.add_term(e, BigInt(static_cast<long>(counts[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)])));
        }
    return sum;
}

long long chebyshev_S(int p, long long u) {
    if (p < -1) throw std::invalid_argument("chebyshev_S: p must be >= -1");
    long long prev = 0, cur = 1; // S_{-1}, S_0
    if (p == -1) return prev;
    for (int i = 1; i <= p; ++i) {
        const long long next = u * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

IntMat rank2_D_closed_form(int n, Rank2Params params) {
    check_params(params);
    IntMat m(2);
    if (n == 0) {
        m(0, 0) = m(1, 1) = -1;
        return m;
    }
    if (n == 1) {
        m(0, 0) = 1;
        m(1, 1) = -1;
        return m;
    }
    if (n < 0) {
        const IntMat pm = rank2_D_closed_form(-n, Rank2Params{params.c, params.b});
        m(0, 0) = pm(1, 1);
        m(0, 1) = pm(1, 0);
        m(1, 0) = pm(0, 1);
        m(1, 1) = pm(0, 0);
        return m;
    }
    const long long u = params.b * params.c - 2;
    if (n % 2 == 0) {
        const long long s_hi = chebyshev_S((n - 2) / 2, u);
        const long long s_lo = chebyshev_S((n - 4) / 2, u);
        m(0, 0) = m(1, 1) = s_hi + s_lo;
        m(0, 1) = params.b * s_hi;
        m(1, 0) = params.c * s_lo;
    } else {
        const long long s_hi = chebyshev_S((n - 1) / 2, u);
        const long long s_mid = chebyshev_S((n - 3) / 2, u);
        const long long s_lo = chebyshev_S((n - 5) / 2, u);
        m(0, 0) = s_hi + s_mid;
        m(0, 1) = params.b * s_mid;
        m(1, 0) = params.c * s_mid;
        m(1, 1) = s_mid + s_lo;
    }
    return m;
}

std::array<long long, 2> g_from_d_rank2(std::array<long long, 2> d, Rank2Params params) {
    check_params(params);
    return {-d[0], params.c * d[0] - d[1]};
}

} // namespace clusterkit
