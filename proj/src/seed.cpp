#include "clusterkit/seed.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace clusterkit {

Seed initial_seed(const IntMat& b) {
    if (!check_skew_symmetrizable(b)) throw std::invalid_argument("initial_seed: matrix is not skew-symmetrizable");
    const int n = b.n;
    Seed s;
    s.b = b;
    for (int i = 0; i < n; ++i) {
        s.x.push_back(LaurentPoly::variable(2 * n, i));
        s.y.push_back(TropicalMonomial::generator(n, i));
    }
    return s;
}

Seed mutate_seed(const Seed& s, int k) {
    const int n = s.rank();
    if (k < 1 || k > n) throw std::out_of_range("mutate_seed: direction out of range");
    const int kk = k - 1;
    const IntMat& b = s.b;

    Seed r;
    r.b = mutate_matrix(b, k);

    // Coefficient tuple: y'_k = y_k^{-1}, y'_j = y_j y_k^{[b_kj]+} (y_k (+) 1)^{-b_kj}.
    const TropicalMonomial& yk = s.y[static_cast<std::size_t>(kk)];
    const TropicalMonomial yk_plus_one = tropical_add(yk, TropicalMonomial::one(n));
    r.y.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        if (j == kk) {
            r.y.push_back(yk.inverse());
        } else {
            const long long bkj = b(kk, j);
            r.y.push_back(s.y[static_cast<std::size_t>(j)] * yk.power(pos(bkj)) * yk_plus_one.power(-bkj));
        }
    }

    // Exchange relation for the cluster variable in direction k.
    LaurentPoly term_plus = embed_coefficient(yk, n);
    LaurentPoly term_minus = LaurentPoly::constant(2 * n, 1);
    for (int i = 0; i < n; ++i) {
        const long long bik = b(i, kk);
        if (bik > 0) term_plus = term_plus * s.x[static_cast<std::size_t>(i)].pow(static_cast<int>(bik));
        if (bik < 0) term_minus = term_minus * s.x[static_cast<std::size_t>(i)].pow(static_cast<int>(-bik));
    }
    const LaurentPoly numerator = term_plus + term_minus;
    const LaurentPoly denominator = embed_coefficient(yk_plus_one, n) * s.x[static_cast<std::size_t>(kk)];

    r.x = s.x;
    r.x[static_cast<std::size_t>(kk)] = numerator.exact_div(denominator);
    return r;
}

Seed apply_word(Seed s, std::span<const int> word) {
    for (int k : word) s = mutate_seed(s, k);
    return s;
}

namespace {

void serialize_poly(std::ostringstream& out, const LaurentPoly& p) {
    out << "{";
    for (const auto& [e, c] : p.terms()) {
        for (int v : e) out << v << ".";
        out << ":" << c.get_str() << ";";
    }
    out << "}";
}

std::string poly_key(const LaurentPoly& p) {
    std::ostringstream out;
    serialize_poly(out, p);
    return out.str();
}

// Permutes the seed's labels by sigma: component i of the result is
// component sigma[i] of the input, and B'(i,j) = B(sigma[i], sigma[j]).
Seed permuted(const Seed& s, const std::vector<int>& sigma) {
    const int n = s.rank();
    Seed r;
    r.b = IntMat(n);
    for (int i = 0; i < n; ++i) {
        r.x.push_back(s.x[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
        r.y.push_back(s.y[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
        for (int j = 0; j < n; ++j)
            r.b(i, j) = s.b(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
    }
    return r;
}

std::string labeled_key(const Seed& s) {
    std::ostringstream out;
    for (const auto& p : s.x) serialize_poly(out, p);
    out << "|";
    for (const auto& m : s.y) {
        for (int v : m.e) out << v << ".";
        out << ";";
    }
    out << "|" << s.b.str();
    return out.str();
}

// All permutations sorting the x tuple; unique unless variables repeat.
std::vector<std::vector<int>> x_sorting_permutations(const Seed& s) {
    const int n = s.rank();
    std::vector<std::string> keys;
    keys.reserve(static_cast<std::size_t>(n));
    for (const auto& p : s.x) keys.push_back(poly_key(p));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return keys[static_cast<std::size_t>(i)] < keys[static_cast<std::size_t>(j)];
    });

    std::vector<std::vector<int>> result{order};
    // expand ties, if any
    bool has_tie = false;
    for (int i = 0; i + 1 < n; ++i)
        if (keys[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] ==
            keys[static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])])
            has_tie = true;
    if (!has_tie) return result;

    // Repeated components are possible only for degenerate inputs; fall back
    // to filtering all permutations that sort the keys.
    result.clear();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool sorted = true;
        for (int i = 0; i + 1 < n; ++i)
            if (keys[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >
                keys[static_cast<std::size_t>(perm[static_cast<std::size_t>(i + 1)])])
                sorted = false;
        if (sorted) result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

} // namespace

std::string seed_canonical_key(const Seed& s) {
    std::string best;
    for (const auto& sigma : x_sorting_permutations(s)) {
        std::string key = labeled_key(permuted(s, sigma));
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

std::string cluster_canonical_key(const Seed& s) {
    std::vector<std::string> keys;
    for (const auto& p : s.x) keys.push_back(poly_key(p));
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& k : keys) out += k;
    return out;
}

bool non_labeled_equal(const Seed& a, const Seed& b) {
    if (a.rank() != b.rank()) return false;
    return seed_canonical_key(a) == seed_canonical_key(b);
}

SeedEnumeration enumerate_seeds(const IntMat& b, std::size_t cap) {
    SeedEnumeration out;
    out.complete = true;
    Seed start = initial_seed(b);

    std::set<std::string> visited{seed_canonical_key(start)};
    std::deque<std::size_t> frontier;
    out.seeds.push_back({start, {}});
    frontier.push_back(0);

    while (!frontier.empty()) {
        const std::size_t idx = frontier.front();
        frontier.pop_front();
        const Seed current = out.seeds[idx].seed;
        const std::vector<int> word = out.seeds[idx].word;
        for (int k = 1; k <= b.n; ++k) {
            Seed next = mutate_seed(current, k);
            std::string key = seed_canonical_key(next);
            if (visited.contains(key)) continue;
            if (out.seeds.size() >= cap) {
                out.complete = false;
                continue;
            }
            visited.insert(std::move(key));
            std::vector<int> next_word = word;
            next_word.push_back(k);
            out.seeds.push_back({std::move(next), std::move(next_word)});
            frontier.push_back(out.seeds.size() - 1);
        }
    }
    return out;
}

LaurentPoly f_polynomial(const LaurentPoly& cluster_variable, int rank) {
    std::vector<int> xs(static_cast<std::size_t>(rank));
    std::iota(xs.begin(), xs.end(), 0);
    std::vector<int> ys(static_cast<std::size_t>(rank));
    std::iota(ys.begin(), ys.end(), rank);
    return cluster_variable.specialized_at_one(xs).restricted_to(ys);
}

std::vector<long long> f_vector(const LaurentPoly& cluster_variable, int rank) {
    std::vector<long long> f(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
        f[static_cast<std::size_t>(i)] = cluster_variable.max_exponent(rank + i);
    return f;
}

} // namespace clusterkit
