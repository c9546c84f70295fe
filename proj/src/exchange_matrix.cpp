#include "clusterkit/exchange_matrix.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace clusterkit {

IntMat IntMat::identity(int size) {
    IntMat m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("IntMat::from_rows: not square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::negated() const {
    IntMat t = *this;
    for (long long& v : t.a) v = -v;
    return t;
}

std::string IntMat::str() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < n; ++i) {
        out << (i ? ",[" : "[");
        for (int j = 0; j < n; ++j) out << (j ? "," : "") << (*this)(i, j);
        out << "]";
    }
    out << "]";
    return out.str();
}

IntMat positive_part(const IntMat& m) {
    IntMat r = m;
    for (long long& v : r.a) v = pos(v);
    return r;
}

namespace {

struct Frac {
    long long num = 1, den = 1; // den > 0, reduced

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

Frac frac_mul(Frac a, long long num, long long den) {
    Frac r{a.num * num, a.den * den};
    r.reduce();
    return r;
}

bool frac_eq(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }

} // namespace

std::optional<std::vector<long long>> check_skew_symmetrizable(const IntMat& b) {
    const int n = b.n;
    for (int i = 0; i < n; ++i) {
        if (b(i, i) != 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            const long long x = b(i, j), y = b(j, i);
            if ((x > 0 && y >= 0) || (x < 0 && y <= 0) || (x == 0 && y != 0)) return std::nullopt;
        }
    }

    // Rational assignment per connected component, minimal integral rescale.
    std::vector<Frac> d(static_cast<std::size_t>(n));
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<std::size_t>(root)] != -1) continue;
        const int c = ncomp++;
        std::deque<int> queue{root};
        comp[static_cast<std::size_t>(root)] = c;
        d[static_cast<std::size_t>(root)] = Frac{1, 1};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (b(i, j) == 0) continue;
                // d_i |b_ij| = d_j |b_ji|
                const long long bij = b(i, j) < 0 ? -b(i, j) : b(i, j);
                const long long bji = b(j, i) < 0 ? -b(j, i) : b(j, i);
                const Frac dj = frac_mul(d[static_cast<std::size_t>(i)], bij, bji);
                if (comp[static_cast<std::size_t>(j)] == -1) {
                    comp[static_cast<std::size_t>(j)] = c;
                    d[static_cast<std::size_t>(j)] = dj;
                    queue.push_back(j);
                } else if (!frac_eq(d[static_cast<std::size_t>(j)], dj)) {
                    return std::nullopt;
                }
            }
        }
    }

    std::vector<long long> result(static_cast<std::size_t>(n), 1);
    for (int c = 0; c < ncomp; ++c) {
        long long lcm = 1;
        for (int i = 0; i < n; ++i)
            if (comp[static_cast<std::size_t>(i)] == c) lcm = std::lcm(lcm, d[static_cast<std::size_t>(i)].den);
        long long g = 0;
        for (int i = 0; i < n; ++i)
            if (comp[static_cast<std::size_t>(i)] == c) {
                const Frac& f = d[static_cast<std::size_t>(i)];
                g = std::gcd(g, f.num * (lcm / f.den));
            }
        for (int i = 0; i < n; ++i)
            if (comp[static_cast<std::size_t>(i)] == c) {
                const Frac& f = d[static_cast<std::size_t>(i)];
                result[static_cast<std::size_t>(i)] = f.num * (lcm / f.den) / g;
            }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (result[static_cast<std::size_t>(i)] * b(i, j) != -result[static_cast<std::size_t>(j)] * b(j, i))
                return std::nullopt;
    return result;
}

IntMat mutate_matrix(const IntMat& b, int k) {
    if (k < 1 || k > b.n) throw std::out_of_range("mutate_matrix: direction out of range");
    const int kk = k - 1;
    IntMat r(b.n);
    for (int i = 0; i < b.n; ++i) {
        for (int j = 0; j < b.n; ++j) {
            if (i == kk || j == kk)
                r(i, j) = -b(i, j);
            else
                r(i, j) = b(i, j) + pos(b(i, kk)) * b(kk, j) + b(i, kk) * pos(-b(kk, j));
        }
    }
    return r;
}

IntMat mutate_matrix(const IntMat& b, std::span<const int> word) {
    IntMat r = b;
    for (int k : word) r = mutate_matrix(r, k);
    return r;
}

ExchangeMatrix::ExchangeMatrix(IntMat b) : b_(std::move(b)) {
    auto d = check_skew_symmetrizable(b_);
    if (!d) throw std::invalid_argument("ExchangeMatrix: matrix is not skew-symmetrizable");
    d_ = std::move(*d);
}

ExchangeMatrix ExchangeMatrix::mutated(int k) const { return ExchangeMatrix(mutate_matrix(b_, k)); }

std::optional<BipartiteSign> bipartite_sign(const IntMat& b) {
    const int n = b.n;
    // b_ij > 0 forces eps(i) = +1 and eps(j) = -1, so every constrained index
    // is determined outright; a conflict means no sign function exists.
    std::vector<int> eps(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (b(i, j) <= 0) continue;
            if (eps[static_cast<std::size_t>(i)] == -1 || eps[static_cast<std::size_t>(j)] == +1) return std::nullopt;
            eps[static_cast<std::size_t>(i)] = +1;
            eps[static_cast<std::size_t>(j)] = -1;
        }
    }
    for (int& v : eps)
        if (v == 0) v = +1; // isolated index, either sign works
    return BipartiteSign{std::move(eps)};
}

IntMat cartan_companion(const IntMat& b) {
    IntMat a(b.n);
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j) a(i, j) = i == j ? 2 : -(b(i, j) < 0 ? -b(i, j) : b(i, j));
    return a;
}

namespace {

// Integer determinant, Bareiss fraction-free elimination.
long long int_det(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == -1) return 0;
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                     m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
                    prev;
        prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

bool all_principal_minors_positive(const IntMat& a) {
    const int n = a.n;
    if (n > 16) return false; // out of desk scale
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::vector<std::vector<long long>> sub(idx.size(), std::vector<long long>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = a(idx[i], idx[j]);
        if (int_det(std::move(sub)) <= 0) return false;
    }
    return true;
}

struct Candidate {
    std::string label;
    IntMat m;
};

IntMat path_cartan(int n) {
    IntMat m = IntMat::identity(n);
    for (long long& v : m.a) v *= 2;
    for (int i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = -1;
        m(i + 1, i) = -1;
    }
    return m;
}

std::vector<Candidate> finite_cartan_candidates(int n) {
    std::vector<Candidate> out;
    if (n < 1) return out;
    out.push_back({"A" + std::to_string(n), path_cartan(n)});
    if (n >= 2) {
        IntMat b = path_cartan(n);
        b(n - 2, n - 1) = -1;
        b(n - 1, n - 2) = -2;
        out.push_back({"B" + std::to_string(n), b});
    }
    if (n >= 3) {
        IntMat c = path_cartan(n);
        c(n - 2, n - 1) = -2;
        c(n - 1, n - 2) = -1;
        out.push_back({"C" + std::to_string(n), c});
    }
    if (n >= 4) {
        IntMat d = path_cartan(n - 1);
        IntMat full = IntMat::identity(n);
        for (long long& v : full.a) v *= 2;
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) full(i, j) = d(i, j);
        full(n - 3, n - 1) = -1;
        full(n - 1, n - 3) = -1;
        out.push_back({"D" + std::to_string(n), full});
    }
    if (n >= 6 && n <= 8) {
        IntMat e = IntMat::identity(n);
        for (long long& v : e.a) v *= 2;
        auto link = [&](int i, int j) {
            e(i, j) = -1;
            e(j, i) = -1;
        };
        link(0, 2);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        link(1, 3);
        out.push_back({"E" + std::to_string(n), e});
    }
    if (n == 4) {
        IntMat f = path_cartan(4);
        f(1, 2) = -2;
        f(2, 1) = -1;
        out.push_back({"F4", f});
    }
    if (n == 2) {
        IntMat g = IntMat::identity(2);
        g(0, 0) = g(1, 1) = 2;
        g(0, 1) = -1;
        g(1, 0) = -3;
        out.push_back({"G2", g});
    }
    return out;
}

bool permutation_equivalent(const IntMat& m, const IntMat& t) {
    if (m.n != t.n) return false;
    std::vector<int> perm(static_cast<std::size_t>(m.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; ok && i < m.n; ++i)
            for (int j = 0; j < m.n; ++j)
                if (m(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) != t(i, j)) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<std::vector<int>> connected_components(const IntMat& a) {
    const int n = a.n;
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<int> members;
        std::deque<int> queue{root};
        comp[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            members.push_back(i);
            for (int j = 0; j < n; ++j)
                if (i != j && a(i, j) != 0 && comp[static_cast<std::size_t>(j)] == -1) {
                    comp[static_cast<std::size_t>(j)] = comp[static_cast<std::size_t>(root)];
                    queue.push_back(j);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

int label_rank(const std::string& label) { return std::stoi(label.substr(1)); }

} // namespace

std::optional<std::string> classify_cartan(const IntMat& a) {
    const int n = a.n;
    for (int i = 0; i < n; ++i) {
        if (a(i, i) != 2) throw std::invalid_argument("classify_cartan: diagonal entry != 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a(i, j) > 0) throw std::invalid_argument("classify_cartan: positive off-diagonal entry");
            if ((a(i, j) == 0) != (a(j, i) == 0))
                throw std::invalid_argument("classify_cartan: unpaired zero entry");
        }
    }
    if (!all_principal_minors_positive(a)) return std::nullopt;

    std::vector<std::string> labels;
    for (const auto& members : connected_components(a)) {
        const int m = static_cast<int>(members.size());
        IntMat sub(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                sub(i, j) = a(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
        std::string found;
        for (const auto& cand : finite_cartan_candidates(m)) {
            if (permutation_equivalent(sub, cand.m)) {
                found = cand.label;
                break;
            }
        }
        if (found.empty()) return std::nullopt;
        labels.push_back(found);
    }
    std::sort(labels.begin(), labels.end(), [](const std::string& x, const std::string& y) {
        if (label_rank(x) != label_rank(y)) return label_rank(x) > label_rank(y);
        return x < y;
    });
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "x" : "") + labels[i];
    return out;
}

std::string permutation_canonical_key(const IntMat& b) {
    const int n = b.n;
    // Indices with distinct row/column signatures can never swap under a
    // simultaneous permutation, so only orderings within signature groups
    // are enumerated.
    std::vector<std::vector<std::pair<long long, long long>>> sig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (j != i) sig[static_cast<std::size_t>(i)].emplace_back(b(i, j), b(j, i));
        std::sort(sig[static_cast<std::size_t>(i)].begin(), sig[static_cast<std::size_t>(i)].end());
    }
    std::map<std::vector<std::pair<long long, long long>>, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[sig[static_cast<std::size_t>(i)]].push_back(i);

    std::vector<std::vector<int>> group_list;
    for (auto& [key, members] : groups) group_list.push_back(members);

    std::vector<long long> best;
    std::vector<int> perm(static_cast<std::size_t>(n));

    auto evaluate = [&]() {
        std::vector<long long> flat;
        flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                flat.push_back(b(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
        if (best.empty() || flat < best) best = std::move(flat);
    };

    // Cartesian product of within-group permutations.
    std::vector<std::vector<int>> arrangements = group_list;
    std::size_t pos = 0;
    std::vector<std::size_t> offsets;
    for (auto& g : arrangements) {
        offsets.push_back(pos);
        pos += g.size();
        std::sort(g.begin(), g.end());
    }
    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == arrangements.size()) {
            evaluate();
            return;
        }
        auto& g = arrangements[gi];
        std::sort(g.begin(), g.end());
        do {
            for (std::size_t i = 0; i < g.size(); ++i) perm[offsets[gi] + i] = g[i];
            self(self, gi + 1);
        } while (std::next_permutation(g.begin(), g.end()));
    };
    rec(rec, 0);

    std::ostringstream out;
    out << n << ":";
    for (long long v : best) out << v << ",";
    return out.str();
}

FiniteTypeClass finite_type_classification(const IntMat& b, std::size_t cap) {
    if (cap == 0) throw std::invalid_argument("finite_type_classification: cap must be positive");
    if (!check_skew_symmetrizable(b))
        throw std::invalid_argument("finite_type_classification: matrix is not skew-symmetrizable");

    std::deque<std::pair<IntMat, std::vector<int>>> queue;
    std::set<std::string> visited;
    queue.emplace_back(b, std::vector<int>{});
    visited.insert(permutation_canonical_key(b));
    bool capped = false;

    while (!queue.empty()) {
        auto [m, word] = std::move(queue.front());
        queue.pop_front();

        for (int i = 0; i < m.n; ++i)
            for (int j = i + 1; j < m.n; ++j) {
                long long prod = m(i, j) * m(j, i);
                if (prod < 0) prod = -prod;
                if (prod >= 4) return FiniteTypeClass{FiniteTypeClass::Verdict::Infinite, "", {}, std::nullopt};
            }

        if (bipartite_sign(m)) {
            if (auto label = classify_cartan(cartan_companion(m)))
                return FiniteTypeClass{FiniteTypeClass::Verdict::Finite, *label, word, m};
        }

        for (int k = 1; k <= m.n; ++k) {
            IntMat next = mutate_matrix(m, k);
            std::string key = permutation_canonical_key(next);
            if (visited.contains(key)) continue;
            if (visited.size() >= cap) {
                capped = true;
                continue;
            }
            visited.insert(std::move(key));
            std::vector<int> next_word = word;
            next_word.push_back(k);
            queue.emplace_back(std::move(next), std::move(next_word));
        }
    }
    return FiniteTypeClass{capped ? FiniteTypeClass::Verdict::Undecided : FiniteTypeClass::Verdict::Infinite,
                           "",
                           {},
                           std::nullopt};
}

std::pair<std::vector<int>, std::vector<int>> source_sink_words(const IntMat& b, const BipartiteSign& sign) {
    const int n = b.n;
    if (static_cast<int>(sign.eps.size()) != n) throw std::invalid_argument("source_sink_words: sign length mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (b(i, j) > 0 && !(sign.eps[static_cast<std::size_t>(i)] == 1 && sign.eps[static_cast<std::size_t>(j)] == -1))
                throw std::invalid_argument("source_sink_words: sign does not satisfy the bipartite condition");
            if (sign.eps[static_cast<std::size_t>(i)] == sign.eps[static_cast<std::size_t>(j)] && b(i, j) != 0)
                throw std::invalid_argument("source_sink_words: equal signs joined by a nonzero entry");
        }
    std::pair<std::vector<int>, std::vector<int>> words;
    for (int i = 0; i < n; ++i)
        (sign.eps[static_cast<std::size_t>(i)] == 1 ? words.first : words.second).push_back(i + 1);
    return words;
}

} // namespace clusterkit
