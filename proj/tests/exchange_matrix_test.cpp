#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clusterkit/exchange_matrix.hpp"
#include "test_support.hpp"

using namespace clusterkit;
namespace ts = clusterkit::testing;

namespace {

// Brute-force oracle: componentwise-smallest positive diagonal with
// d_i b_ij = -d_j b_ji, searched over a box.
std::optional<std::vector<long long>> symmetrizer_oracle(const IntMat& b, long long box = 12) {
    const int n = b.n;
    std::vector<long long> d(static_cast<std::size_t>(n), 1);
    std::optional<std::vector<long long>> best;
    for (;;) {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[static_cast<std::size_t>(i)] * b(i, j) != -d[static_cast<std::size_t>(j)] * b(j, i)) {
                    ok = false;
                    break;
                }
        if (ok && (!best || d < *best)) best = d;
        int pos_idx = n - 1;
        while (pos_idx >= 0 && d[static_cast<std::size_t>(pos_idx)] == box) {
            d[static_cast<std::size_t>(pos_idx)] = 1;
            --pos_idx;
        }
        if (pos_idx < 0) break;
        ++d[static_cast<std::size_t>(pos_idx)];
    }
    return best;
}

// Exhaustive oracle for the bipartite condition over all 2^n assignments.
bool bipartite_oracle(const IntMat& b) {
    const int n = b.n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b(i, j) > 0 && !((mask >> i) & 1u && !((mask >> j) & 1u))) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    }
    return false;
}

} // namespace

TEST_CASE("skew-symmetrizer computation") {
    CHECK(check_skew_symmetrizable(ts::mat_A2()) == std::vector<long long>{1, 1});
    CHECK(check_skew_symmetrizable(ts::mat_rank2(4, 1)) == std::vector<long long>{1, 4});
    CHECK(check_skew_symmetrizable(ts::mat_rank2(4, 1)) == symmetrizer_oracle(ts::mat_rank2(4, 1)));
    CHECK(!check_skew_symmetrizable(IntMat::from_rows({{0, 1}, {1, 0}})));
    CHECK(!check_skew_symmetrizable(IntMat::from_rows({{1, 0}, {0, 1}})));
    CHECK(!check_skew_symmetrizable(IntMat::from_rows({{0, 0}, {-3, 0}})));
    CHECK(check_skew_symmetrizable(ts::mat_B3()) == std::vector<long long>{2, 2, 1});
    CHECK(check_skew_symmetrizable(ts::mat_B3()) == symmetrizer_oracle(ts::mat_B3(), 6));
    CHECK(check_skew_symmetrizable(ts::mat_C3()) == std::vector<long long>{1, 1, 2});
    // isolated indices get the minimal value 1
    CHECK(check_skew_symmetrizable(IntMat(3)) == std::vector<long long>{1, 1, 1});
}

TEST_CASE("skew-symmetrizer on random constructions") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        const IntMat b = ts::random_skew_symmetrizable(rng, 2 + static_cast<int>(rng() % 3));
        const auto d = check_skew_symmetrizable(b);
        REQUIRE(d.has_value());
        for (int i = 0; i < b.n; ++i) {
            CHECK((*d)[static_cast<std::size_t>(i)] >= 1);
            for (int j = 0; j < b.n; ++j)
                CHECK((*d)[static_cast<std::size_t>(i)] * b(i, j) == -(*d)[static_cast<std::size_t>(j)] * b(j, i));
        }
    }
}

TEST_CASE("ExchangeMatrix validates on construction") {
    CHECK_NOTHROW(ExchangeMatrix(ts::mat_G2()));
    CHECK_THROWS_AS(ExchangeMatrix(IntMat::from_rows({{0, 1}, {1, 0}})), std::invalid_argument);
    const ExchangeMatrix m(ts::mat_rank2(4, 1));
    CHECK(m.symmetrizer() == std::vector<long long>{1, 4});
    CHECK(m.mutated(2).entries() == ts::mat_rank2(4, 1).negated());
}

TEST_CASE("matrix mutation examples") {
    CHECK(mutate_matrix(ts::mat_A2(), 1) == ts::mat_A2().negated());
    CHECK(mutate_matrix(ts::mat_rank2(4, 1), 2) == ts::mat_rank2(4, 1).negated());
    const IntMat linear_a3 = IntMat::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    CHECK(mutate_matrix(linear_a3, 2) == IntMat::from_rows({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
    CHECK_THROWS_AS(mutate_matrix(ts::mat_A2(), 0), std::out_of_range);
    CHECK_THROWS_AS(mutate_matrix(ts::mat_A2(), 3), std::out_of_range);
}

TEST_CASE("mutation involutivity and symmetrizer preservation") {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const IntMat b = ts::random_skew_symmetrizable(rng, n);
        const int k = 1 + static_cast<int>(rng() % n);
        CHECK(mutate_matrix(mutate_matrix(b, k), k) == b);
        const auto d = check_skew_symmetrizable(b);
        const IntMat bm = mutate_matrix(b, k);
        REQUIRE(d.has_value());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK((*d)[static_cast<std::size_t>(i)] * bm(i, j) == -(*d)[static_cast<std::size_t>(j)] * bm(j, i));
    }
}

TEST_CASE("bipartite sign function") {
    const auto a2 = bipartite_sign(ts::mat_A2());
    REQUIRE(a2.has_value());
    CHECK(a2->eps == std::vector<int>{1, -1});

    // the linear orientation has a vertex that is neither source nor sink
    const IntMat linear_a3 = IntMat::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    CHECK(!bipartite_sign(linear_a3));
    CHECK(!bipartite_oracle(linear_a3));

    const IntMat source_a3 = IntMat::from_rows({{0, -1, 0}, {1, 0, 1}, {0, -1, 0}});
    const auto s = bipartite_sign(source_a3);
    REQUIRE(s.has_value());
    CHECK(s->eps == std::vector<int>{-1, 1, -1});

    const IntMat cycle = IntMat::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
    CHECK(!bipartite_sign(cycle));
    CHECK(!bipartite_oracle(cycle));
}

TEST_CASE("bipartite sign matches the exhaustive oracle") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        const IntMat b = ts::random_skew_symmetrizable(rng, 2 + static_cast<int>(rng() % 3));
        CHECK(bipartite_sign(b).has_value() == bipartite_oracle(b));
    }
}

TEST_CASE("Cartan companions") {
    CHECK(cartan_companion(ts::mat_A2()) == IntMat::from_rows({{2, -1}, {-1, 2}}));
    CHECK(cartan_companion(ts::mat_rank2(4, 1)) == IntMat::from_rows({{2, -4}, {-1, 2}}));
    CHECK(cartan_companion(ts::mat_rank2(2, 1)) == IntMat::from_rows({{2, -2}, {-1, 2}}));
    std::mt19937 rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        const IntMat b = ts::random_skew_symmetrizable(rng, 3);
        CHECK(cartan_companion(b) == cartan_companion(b.negated()));
    }
}

TEST_CASE("finite Cartan classification") {
    CHECK(classify_cartan(IntMat::from_rows({{2, -1}, {-1, 2}})) == "A2");
    CHECK(!classify_cartan(IntMat::from_rows({{2, -4}, {-1, 2}})));
    CHECK(classify_cartan(IntMat::from_rows({{2, -3}, {-1, 2}})) == "G2");
    CHECK(classify_cartan(IntMat::from_rows({{2, -1}, {-3, 2}})) == "G2");
    CHECK(classify_cartan(IntMat::from_rows({{2, -2}, {-1, 2}})) == "B2");
    CHECK(classify_cartan(cartan_companion(ts::mat_B3())) == "B3");
    CHECK(classify_cartan(cartan_companion(ts::mat_C3())) == "C3");
    CHECK(classify_cartan(cartan_companion(ts::mat_D4())) == "D4");
    CHECK(classify_cartan(cartan_companion(ts::mat_A4())) == "A4");

    // reducible input classifies as a product
    const IntMat block = IntMat::from_rows({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}});
    CHECK(classify_cartan(block) == "A2xA1");

    // stability under simultaneous permutation
    const IntMat a3 = cartan_companion(ts::mat_A3());
    IntMat permuted(3);
    const int sigma[3] = {2, 0, 1};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) permuted(i, j) = a3(sigma[i], sigma[j]);
    CHECK(classify_cartan(permuted) == "A3");

    CHECK_THROWS_AS(classify_cartan(IntMat::from_rows({{1, 0}, {0, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(classify_cartan(IntMat::from_rows({{2, 1}, {1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(classify_cartan(IntMat::from_rows({{2, -1}, {0, 2}})), std::invalid_argument);
}

TEST_CASE("exceptional finite Cartan matrices") {
    const IntMat f4 = IntMat::from_rows({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    CHECK(classify_cartan(f4) == "F4");
    // the reversed node order is the same diagram
    IntMat f4_flipped(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) f4_flipped(i, j) = f4(3 - i, 3 - j);
    CHECK(classify_cartan(f4_flipped) == "F4");

    auto simply_laced = [](const std::vector<std::pair<int, int>>& edges, int n) {
        IntMat m = IntMat::identity(n);
        for (long long& v : m.a) v *= 2;
        for (const auto& [i, j] : edges) {
            m(i, j) = -1;
            m(j, i) = -1;
        }
        return m;
    };
    const IntMat e6 = simply_laced({{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}, 6);
    CHECK(classify_cartan(e6) == "E6");
    const IntMat e8 = simply_laced({{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}, 8);
    CHECK(classify_cartan(e8) == "E8");
    // the 7-node star that is affine, not finite
    const IntMat affine = simply_laced({{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}, 7);
    CHECK(!classify_cartan(affine).has_value());
}

TEST_CASE("finite type search on exceptional types") {
    // bipartite F4 exchange matrix: companion a_23 = -2, a_32 = -1
    const IntMat f4_exchange = IntMat::from_rows({{0, 1, 0, 0}, {-1, 0, -2, 0}, {0, 1, 0, 1}, {0, 0, -1, 0}});
    REQUIRE(bipartite_sign(f4_exchange).has_value());
    const auto f4 = finite_type_classification(f4_exchange);
    CHECK(f4.verdict == FiniteTypeClass::Verdict::Finite);
    CHECK(f4.label == "F4");
    REQUIRE(f4.bipartite_rep.has_value());
    CHECK(*f4.bipartite_rep == f4_exchange);

    const auto moved = finite_type_classification(mutate_matrix(f4_exchange, 1));
    CHECK(moved.verdict == FiniteTypeClass::Verdict::Finite);
    CHECK(moved.label == "F4");
    REQUIRE(moved.bipartite_rep.has_value());
    CHECK(*moved.bipartite_rep == mutate_matrix(mutate_matrix(f4_exchange, 1), moved.witness));

    // bipartite E6 exchange matrix (alternating orientation of the diagram)
    IntMat e6_exchange(6);
    const std::vector<std::pair<int, int>> edges{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
    // nodes 0,3,5 sources; 1 is a sink beside node 3
    for (const auto& [i, j] : edges) {
        const bool i_source = (i == 0 || i == 3 || i == 5);
        e6_exchange(i, j) = i_source ? 1 : -1;
        e6_exchange(j, i) = i_source ? -1 : 1;
    }
    const auto e6 = finite_type_classification(e6_exchange);
    CHECK(e6.verdict == FiniteTypeClass::Verdict::Finite);
    CHECK(e6.label == "E6");
}

TEST_CASE("finite type classification by mutation search") {
    const auto a2 = finite_type_classification(ts::mat_A2());
    CHECK(a2.verdict == FiniteTypeClass::Verdict::Finite);
    CHECK(a2.label == "A2");
    CHECK(a2.witness.empty());

    CHECK(finite_type_classification(ts::mat_rank2(4, 1)).verdict == FiniteTypeClass::Verdict::Infinite);

    const IntMat linear_a3 = IntMat::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    const auto a3 = finite_type_classification(linear_a3);
    CHECK(a3.verdict == FiniteTypeClass::Verdict::Finite);
    CHECK(a3.label == "A3");
    // the witness word really reaches a bipartite finite-Cartan representative
    const IntMat rep = mutate_matrix(linear_a3, a3.witness);
    REQUIRE(bipartite_sign(rep).has_value());
    CHECK(classify_cartan(cartan_companion(rep)) == "A3");

    // Markov matrix: a single (permutation class) orbit, infinite type
    CHECK(finite_type_classification(IntMat::from_rows({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}})).verdict ==
          FiniteTypeClass::Verdict::Infinite);

    // cap exhaustion reports Undecided
    CHECK(finite_type_classification(linear_a3, 1).verdict == FiniteTypeClass::Verdict::Undecided);
    CHECK_THROWS_AS(finite_type_classification(linear_a3, 0), std::invalid_argument);
}

TEST_CASE("classification is stable under initial mutation") {
    for (const IntMat& b : {ts::mat_A3(), ts::mat_B3(), ts::mat_D4()}) {
        const auto base = finite_type_classification(b);
        REQUIRE(base.verdict == FiniteTypeClass::Verdict::Finite);
        for (int k = 1; k <= b.n; ++k) {
            const auto moved = finite_type_classification(mutate_matrix(b, k));
            CHECK(moved.verdict == FiniteTypeClass::Verdict::Finite);
            CHECK(moved.label == base.label);
        }
    }
}

TEST_CASE("rank 2 is finite exactly when |b12 b21| <= 3") {
    for (long long b = 0; b <= 4; ++b)
        for (long long c = 0; c <= 4; ++c) {
            if ((b == 0) != (c == 0)) continue; // not skew-symmetrizable
            const auto verdict = finite_type_classification(ts::mat_rank2(b, c)).verdict;
            if (b * c <= 3) CHECK(verdict == FiniteTypeClass::Verdict::Finite);
            else CHECK(verdict == FiniteTypeClass::Verdict::Infinite);
        }
}

TEST_CASE("source and sink words") {
    const auto a2_sign = bipartite_sign(ts::mat_A2());
    REQUIRE(a2_sign.has_value());
    const auto [plus_a2, minus_a2] = source_sink_words(ts::mat_A2(), *a2_sign);
    CHECK(plus_a2 == std::vector<int>{1});
    CHECK(minus_a2 == std::vector<int>{2});

    const auto b2_sign = bipartite_sign(ts::mat_rank2(2, 1));
    REQUIRE(b2_sign.has_value());
    const auto [plus_b2, minus_b2] = source_sink_words(ts::mat_rank2(2, 1), *b2_sign);
    CHECK(plus_b2 == std::vector<int>{1});
    CHECK(minus_b2 == std::vector<int>{2});

    const auto a3_sign = bipartite_sign(ts::mat_A3());
    REQUIRE(a3_sign.has_value());
    const auto [plus_a3, minus_a3] = source_sink_words(ts::mat_A3(), *a3_sign);
    CHECK(plus_a3 == std::vector<int>{1, 3});
    CHECK(minus_a3 == std::vector<int>{2});

    // mismatched sign is rejected
    CHECK_THROWS_AS(source_sink_words(ts::mat_A2(), BipartiteSign{{-1, 1}}), std::invalid_argument);
}
