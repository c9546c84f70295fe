#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "clusterkit/vector_recursions.hpp"
#include "test_support.hpp"

using namespace clusterkit;
namespace ts = clusterkit::testing;
using ts::make_poly;

namespace {

const std::vector<int> kA2Walk{1, 2, 1, 2, 1};

std::vector<int> a2_prefix(int len) { return {kA2Walk.begin(), kA2Walk.begin() + len}; }

// D- and F-matrices along the alternating A2 walk, rows t_0..t_5.
const std::vector<IntMat> kA2D = {
    IntMat::from_rows({{-1, 0}, {0, -1}}), IntMat::from_rows({{1, 0}, {0, -1}}),
    IntMat::from_rows({{1, 1}, {0, 1}}),   IntMat::from_rows({{0, 1}, {1, 1}}),
    IntMat::from_rows({{0, -1}, {1, 0}}),  IntMat::from_rows({{0, -1}, {-1, 0}}),
};
const std::vector<IntMat> kA2F = {
    IntMat::from_rows({{0, 0}, {0, 0}}), IntMat::from_rows({{1, 0}, {0, 0}}),
    IntMat::from_rows({{1, 1}, {0, 1}}), IntMat::from_rows({{0, 1}, {1, 1}}),
    IntMat::from_rows({{0, 0}, {1, 0}}), IntMat::from_rows({{0, 0}, {0, 0}}),
};

std::string poly_to_key(const LaurentPoly& p) {
    std::ostringstream out;
    for (const auto& [e, c] : p.terms()) {
        for (int v : e) out << v << ".";
        out << ":" << c.get_str() << ";";
    }
    return out.str();
}

std::vector<long long> mat_column(const IntMat& m, int j) {
    std::vector<long long> v(static_cast<std::size_t>(m.n));
    for (int i = 0; i < m.n; ++i) v[static_cast<std::size_t>(i)] = m(i, j);
    return v;
}

// Degree of one term under deg(x_i) = e_i, deg(y_i) = -b_i (columns of the
// initial matrix). Returns the common degree, requiring homogeneity.
std::vector<long long> homogeneous_degree(const LaurentPoly& p, const IntMat& b0) {
    const int n = b0.n;
    std::vector<long long> degree;
    for (const auto& [e, c] : p.terms()) {
        std::vector<long long> d(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            d[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i)];
            for (int row = 0; row < n; ++row)
                d[static_cast<std::size_t>(row)] -= b0(row, i) * e[static_cast<std::size_t>(n + i)];
        }
        if (degree.empty()) degree = d;
        REQUIRE(degree == d);
    }
    return degree;
}

} // namespace

TEST_CASE("initial conditions") {
    const RecursionWalk w(ts::mat_A3());
    CHECK(w.c == IntMat::identity(3));
    CHECK(w.d == IntMat::identity(3).negated());
    CHECK(w.f == IntMat(3));
    CHECK(w.g == IntMat::identity(3));
    CHECK_THROWS_AS(RecursionWalk(ts::mat_A2()).step(0), std::out_of_range);
}

TEST_CASE("A2 reference D- and F-matrices") {
    for (int row = 0; row <= 5; ++row) {
        const auto word = a2_prefix(row);
        CHECK(d_matrix_recursive(ts::mat_A2(), word).m == kA2D[static_cast<std::size_t>(row)]);
        CHECK(f_matrix_recursive(ts::mat_A2(), word).m == kA2F[static_cast<std::size_t>(row)]);
    }
}

TEST_CASE("c-vectors are the tropical coefficient exponents") {
    // A2 walk, then a few random walks elsewhere
    for (int row = 0; row <= 5; ++row) {
        const auto word = a2_prefix(row);
        const IntMat c = c_matrix(ts::mat_A2(), word).m;
        const Seed s = apply_word(initial_seed(ts::mat_A2()), word);
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 2; ++i) CHECK(c(i, j) == s.y[static_cast<std::size_t>(j)].e[static_cast<std::size_t>(i)]);
    }
    std::mt19937 rng(31);
    for (const IntMat& b : {ts::mat_B3(), ts::mat_rank2(2, 2)}) {
        for (int iter = 0; iter < 10; ++iter) {
            std::vector<int> word(static_cast<std::size_t>(rng() % 6));
            for (int& k : word) k = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.n));
            const IntMat c = c_matrix(b, word).m;
            const Seed s = apply_word(initial_seed(b), word);
            for (int j = 0; j < b.n; ++j)
                for (int i = 0; i < b.n; ++i)
                    CHECK(c(i, j) == s.y[static_cast<std::size_t>(j)].e[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("c-matrix spot values") {
    CHECK(c_matrix(ts::mat_A2(), std::vector<int>{}).m == IntMat::identity(2));
    const IntMat c1 = c_matrix(ts::mat_A2(), std::vector<int>{1}).m;
    CHECK(mat_column(c1, 0) == std::vector<long long>{-1, 0}); // sign flip at the mutated index
}

TEST_CASE("recursive D-matrix equals the seed-engine D-matrix") {
    for (int row = 0; row <= 5; ++row) {
        const auto word = a2_prefix(row);
        CHECK(d_matrix_recursive(ts::mat_A2(), word).m == d_matrix_from_seed(ts::mat_A2(), word).m);
    }
    const std::vector<int> word421{1, 2, 1};
    CHECK(d_matrix_recursive(ts::mat_rank2(4, 1), word421).m == d_matrix_from_seed(ts::mat_rank2(4, 1), word421).m);
    std::mt19937 rng(17);
    for (int iter = 0; iter < 15; ++iter) {
        std::vector<int> word(static_cast<std::size_t>(rng() % 7));
        for (int& k : word) k = 1 + static_cast<int>(rng() % 3);
        CHECK(d_matrix_recursive(ts::mat_A3(), word).m == d_matrix_from_seed(ts::mat_A3(), word).m);
    }
}

TEST_CASE("F-polynomials") {
    const auto f0 = F_polynomials(ts::mat_A2(), std::vector<int>{});
    CHECK(f0[0].is_one());
    CHECK(f0[1].is_one());
    const auto f1 = F_polynomials(ts::mat_A2(), std::vector<int>{1});
    CHECK(f1[0] == make_poly(2, {{{1, 0}, 1}, {{0, 0}, 1}}));
    const auto f2 = F_polynomials(ts::mat_A2(), std::vector<int>{1, 2});
    CHECK(f2[1] == make_poly(2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}}));
}

TEST_CASE("f-matrix columns are the F-polynomial maximal degrees") {
    std::mt19937 rng(23);
    for (const IntMat& b : {ts::mat_A3(), ts::mat_B2(), ts::mat_rank2(2, 2)}) {
        for (int iter = 0; iter < 8; ++iter) {
            std::vector<int> word(static_cast<std::size_t>(rng() % 6));
            for (int& k : word) k = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.n));
            const IntMat f = f_matrix_recursive(b, word).m;
            const Seed s = apply_word(initial_seed(b), word);
            for (int j = 0; j < b.n; ++j)
                CHECK(mat_column(f, j) == f_vector(s.x[static_cast<std::size_t>(j)], b.n));
        }
    }
}

TEST_CASE("g-matrix") {
    CHECK(g_matrix(ts::mat_A2(), std::vector<int>{}).m == IntMat::identity(2));
    const IntMat g1 = g_matrix(ts::mat_A2(), std::vector<int>{1}).m;
    CHECK(mat_column(g1, 0) == std::vector<long long>{-1, 1});

    // every principal-coefficients cluster variable is homogeneous with the
    // g-column as its degree
    std::mt19937 rng(41);
    for (const IntMat& b : {ts::mat_A3(), ts::mat_B3(), ts::mat_rank2(2, 2)}) {
        for (int iter = 0; iter < 8; ++iter) {
            std::vector<int> word(static_cast<std::size_t>(rng() % 6));
            for (int& k : word) k = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.n));
            const IntMat g = g_matrix(b, word).m;
            const Seed s = apply_word(initial_seed(b), word);
            for (int j = 0; j < b.n; ++j)
                CHECK(homogeneous_degree(s.x[static_cast<std::size_t>(j)], b) == mat_column(g, j));
        }
    }
}

TEST_CASE("F equals the positive part of D") {
    for (int row = 0; row <= 5; ++row) {
        const auto report = verify_fd(ts::mat_A2(), a2_prefix(row));
        CHECK(report.pass);
        CHECK(report.failures.empty());
    }
    // all rank-2 words of length <= 8 for (b,c) = (2,3)
    const IntMat b23 = ts::mat_rank2(2, 3);
    std::vector<std::vector<int>> words{{}};
    for (int len = 1; len <= 8; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (int k = 1; k <= 2; ++k) {
                    auto e = w;
                    e.push_back(k);
                    next.push_back(e);
                }
        for (const auto& w : next) {
            RecursionWalk walk(b23);
            walk.apply(w);
            CHECK(walk.f == positive_part(walk.d));
        }
        words = std::move(next);
    }
}

TEST_CASE("fd verification over all seeds and rank-2 windows") {
    CHECK(verify_fd_all_seeds(ts::mat_A3()).pass);
    CHECK(verify_fd_all_seeds(ts::mat_B2()).pass);
    CHECK(verify_fd_rank2_window(ts::mat_rank2(2, 2), 8).pass);
    CHECK(verify_fd_rank2_window(ts::mat_rank2(1, 4), 8).pass);
    CHECK(!verify_fd_rank2_window(ts::mat_A3(), 2).pass); // not rank 2
}

TEST_CASE("advisory note outside the guaranteed regimes") {
    // rank-3 infinite type: report flags that the equality is not guaranteed
    const IntMat markov = IntMat::from_rows({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
    const auto report = verify_fd(markov, std::vector<int>{1, 2});
    CHECK(!report.failures.empty());
    CHECK(report.failures.front().find("advisory") == 0);
}

TEST_CASE("transpose duality of D- and F-matrices") {
    const std::vector<int> word12{1, 2};
    RecursionWalk w(ts::mat_A2());
    w.apply(word12);
    CHECK(w.d == IntMat::from_rows({{1, 1}, {0, 1}}));
    CHECK(verify_duality(ts::mat_A2(), word12).pass);
    CHECK(verify_duality(ts::mat_A2(), std::vector<int>{}).pass);

    std::mt19937 rng(2024);
    for (const IntMat& b : {ts::mat_A3(), ts::mat_B3()}) {
        for (int iter = 0; iter < 25; ++iter) {
            std::vector<int> word(static_cast<std::size_t>(rng() % 11));
            for (int& k : word) k = 1 + static_cast<int>(rng() % 3);
            CHECK(verify_duality(b, word).pass);
        }
    }
}

TEST_CASE("initial d-column detection") {
    const IntMat d_t1 = IntMat::from_rows({{1, 0}, {0, -1}});
    CHECK(detect_initial_d_columns(d_t1) == std::vector<std::pair<int, int>>{{2, 2}});

    const IntMat minus_identity = IntMat::identity(2).negated();
    CHECK(detect_initial_d_columns(minus_identity) == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});

    const IntMat d_tm1 = IntMat::from_rows({{-1, 0}, {0, 1}});
    CHECK(detect_initial_d_columns(d_tm1) == std::vector<std::pair<int, int>>{{1, 1}});

    // no initial columns at a generic seed
    const IntMat d_t2 = IntMat::from_rows({{1, 1}, {0, 1}});
    CHECK(detect_initial_d_columns(d_t2).empty());

    // inconsistent inputs
    CHECK_THROWS_AS(detect_initial_d_columns(IntMat::from_rows({{-2, 0}, {0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(detect_initial_d_columns(IntMat::from_rows({{1, 0}, {1, -1}})), std::invalid_argument);

    // every finite-type seed yields a consistent detection
    for (const auto& entry : enumerate_seeds(ts::mat_A3()).seeds) {
        const IntMat d = d_matrix_from_seed(ts::mat_A3(), entry.word).m;
        CHECK_NOTHROW(detect_initial_d_columns(d));
    }
}

TEST_CASE("clusters are determined by their f-vector multisets") {
    const auto a1 = verify_uniqueness_finite(IntMat::from_rows({{0}}));
    CHECK(a1.pass);
    CHECK(a1.clusters == 2);

    const auto a2 = verify_uniqueness_finite(ts::mat_A2());
    CHECK(a2.pass);
    CHECK(a2.clusters == 5);

    const auto a3 = verify_uniqueness_finite(ts::mat_A3());
    CHECK(a3.pass);
    CHECK(a3.clusters == 14);

    const auto capped = verify_uniqueness_finite(ts::mat_A3(), 5);
    CHECK(!capped.complete);

    CHECK(verify_uniqueness_rank2_window(ts::mat_rank2(2, 2), 8).pass);
    CHECK(verify_uniqueness_rank2_window(ts::mat_rank2(3, 3), 8).pass);
}

TEST_CASE("A2 f-vector multisets match the reference walk") {
    std::set<std::multiset<std::vector<long long>>> seen;
    for (int row = 0; row < 5; ++row) {
        const IntMat f = kA2F[static_cast<std::size_t>(row)];
        seen.insert({mat_column(f, 0), mat_column(f, 1)});
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("non-initial d-vectors are non-negative and non-zero") {
    for (const auto& entry : enumerate_seeds(ts::mat_B3()).seeds) {
        const IntMat d = d_matrix_from_seed(ts::mat_B3(), entry.word).m;
        const IntMat f = f_matrix_recursive(ts::mat_B3(), entry.word).m;
        for (int j = 0; j < 3; ++j) {
            const auto dj = mat_column(d, j);
            const bool initial = *std::min_element(dj.begin(), dj.end()) < 0;
            if (initial) {
                // initial columns are exactly -e_i, with zero f-vector
                CHECK(std::count(dj.begin(), dj.end(), -1) == 1);
                CHECK(std::count(dj.begin(), dj.end(), 0) == 2);
                CHECK(mat_column(f, j) == std::vector<long long>(3, 0));
            } else {
                CHECK(std::any_of(dj.begin(), dj.end(), [](long long v) { return v > 0; }));
                CHECK(mat_column(f, j) != std::vector<long long>(3, 0));
            }
        }
    }
}

TEST_CASE("rank-2 boundary d-vectors") {
    for (const IntMat& b : {ts::mat_rank2(4, 1), ts::mat_rank2(2, 2)}) {
        RecursionWalk forward(b);
        forward.step(1);
        CHECK(forward.d == IntMat::from_rows({{1, 0}, {0, -1}}));
        RecursionWalk backward(b);
        backward.step(2);
        CHECK(backward.d == IntMat::from_rows({{-1, 0}, {0, 1}}));
        CHECK(mat_column(forward.d, 0) != mat_column(backward.d, 1));
    }
}

TEST_CASE("bipartite belt covers all cluster variables in finite type") {
    for (const IntMat& b : {ts::mat_A3(), ts::mat_B3(), ts::mat_D4()}) {
        const auto belt = bipartite_belt(b);
        std::set<std::string> belt_vars;
        for (const Seed& s : belt)
            for (const auto& p : s.x) belt_vars.insert(poly_to_key(p));
        std::set<std::string> all_vars;
        for (const auto& entry : enumerate_seeds(b).seeds)
            for (const auto& p : entry.seed.x) all_vars.insert(poly_to_key(p));
        CHECK(belt_vars == all_vars);
    }
    CHECK_THROWS_AS(bipartite_belt(IntMat::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})), std::invalid_argument);
}

TEST_CASE("alternating word construction") {
    CHECK(rank2_alternating_word(0).empty());
    CHECK(rank2_alternating_word(3) == std::vector<int>{1, 2, 1});
    CHECK(rank2_alternating_word(-4) == std::vector<int>{2, 1, 2, 1});
}
