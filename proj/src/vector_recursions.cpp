#include "clusterkit/vector_recursions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace clusterkit {

namespace {

std::vector<long long> column(const IntMat& m, int j) {
    std::vector<long long> v(static_cast<std::size_t>(m.n));
    for (int i = 0; i < m.n; ++i) v[static_cast<std::size_t>(i)] = m(i, j);
    return v;
}

void set_column(IntMat& m, int j, const std::vector<long long>& v) {
    for (int i = 0; i < m.n; ++i) m(i, j) = v[static_cast<std::size_t>(i)];
}

std::string vec_str(const std::vector<long long>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ")";
    return out.str();
}

} // namespace

RecursionWalk::RecursionWalk(const IntMat& b)
    : b0(b), bt(b), c(IntMat::identity(b.n)), d(IntMat::identity(b.n).negated()), f(IntMat(b.n)), g(IntMat::identity(b.n)) {}

void RecursionWalk::step(int k) {
    const int n = bt.n;
    if (k < 1 || k > n) throw std::out_of_range("RecursionWalk::step: direction out of range");
    const int kk = k - 1;

    const auto ck = column(c, kk);
    const auto dk = column(d, kk);
    const auto fk = column(f, kk);
    const auto gk = column(g, kk);

    // d_{k;t'} = -d_k + max( sum_j [b_jk]+ d_j , sum_j [-b_jk]+ d_j ), max componentwise
    {
        std::vector<long long> plus(static_cast<std::size_t>(n), 0), minus(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            const long long bjk = bt(j, kk);
            if (bjk == 0) continue;
            const auto dj = column(d, j);
            for (int i = 0; i < n; ++i) {
                plus[static_cast<std::size_t>(i)] += pos(bjk) * dj[static_cast<std::size_t>(i)];
                minus[static_cast<std::size_t>(i)] += pos(-bjk) * dj[static_cast<std::size_t>(i)];
            }
        }
        std::vector<long long> nd(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            nd[static_cast<std::size_t>(i)] =
                -dk[static_cast<std::size_t>(i)] + std::max(plus[static_cast<std::size_t>(i)], minus[static_cast<std::size_t>(i)]);
        set_column(d, kk, nd);
    }

    // f_{k;t'} = -f_k + max( [c_k]+ + sum_j [b_jk]+ f_j , [-c_k]+ + sum_j [-b_jk]+ f_j )
    {
        std::vector<long long> plus(static_cast<std::size_t>(n)), minus(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            plus[static_cast<std::size_t>(i)] = pos(ck[static_cast<std::size_t>(i)]);
            minus[static_cast<std::size_t>(i)] = pos(-ck[static_cast<std::size_t>(i)]);
        }
        for (int j = 0; j < n; ++j) {
            const long long bjk = bt(j, kk);
            if (bjk == 0) continue;
            const auto fj = column(f, j);
            for (int i = 0; i < n; ++i) {
                plus[static_cast<std::size_t>(i)] += pos(bjk) * fj[static_cast<std::size_t>(i)];
                minus[static_cast<std::size_t>(i)] += pos(-bjk) * fj[static_cast<std::size_t>(i)];
            }
        }
        std::vector<long long> nf(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            nf[static_cast<std::size_t>(i)] =
                -fk[static_cast<std::size_t>(i)] + std::max(plus[static_cast<std::size_t>(i)], minus[static_cast<std::size_t>(i)]);
        set_column(f, kk, nf);
    }

    // g_{k;t'} = -g_k + sum_l [b_lk]+ g_l - B_0 [c_k]+
    {
        std::vector<long long> ng(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ng[static_cast<std::size_t>(i)] = -gk[static_cast<std::size_t>(i)];
        for (int l = 0; l < n; ++l) {
            const long long blk = pos(bt(l, kk));
            if (blk == 0) continue;
            for (int i = 0; i < n; ++i) ng[static_cast<std::size_t>(i)] += blk * g(i, l);
        }
        for (int l = 0; l < n; ++l) {
            const long long cl = pos(ck[static_cast<std::size_t>(l)]);
            if (cl == 0) continue;
            for (int i = 0; i < n; ++i) ng[static_cast<std::size_t>(i)] -= b0(i, l) * cl;
        }
        set_column(g, kk, ng);
    }

    // c_{k;t'} = -c_k; for j != k, c_{j;t'} = c_j + [b_kj]+ c_k + b_kj [-c_k]+
    {
        std::vector<long long> ck_neg_pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ck_neg_pos[static_cast<std::size_t>(i)] = pos(-ck[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            if (j == kk) continue;
            const long long bkj = bt(kk, j);
            if (bkj == 0) continue;
            for (int i = 0; i < n; ++i)
                c(i, j) += pos(bkj) * ck[static_cast<std::size_t>(i)] + bkj * ck_neg_pos[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < n; ++i) c(i, kk) = -ck[static_cast<std::size_t>(i)];
    }

    bt = mutate_matrix(bt, k);
}

void RecursionWalk::apply(std::span<const int> word) {
    for (int k : word) step(k);
}

VectorMatrix c_matrix(const IntMat& b, std::span<const int> word) {
    RecursionWalk w(b);
    w.apply(word);
    return {VectorKind::C, w.c};
}

VectorMatrix d_matrix_recursive(const IntMat& b, std::span<const int> word) {
    RecursionWalk w(b);
    w.apply(word);
    return {VectorKind::D, w.d};
}

VectorMatrix f_matrix_recursive(const IntMat& b, std::span<const int> word) {
    RecursionWalk w(b);
    w.apply(word);
    return {VectorKind::F, w.f};
}

VectorMatrix g_matrix(const IntMat& b, std::span<const int> word) {
    RecursionWalk w(b);
    w.apply(word);
    return {VectorKind::G, w.g};
}

VectorMatrix d_matrix_from_seed(const IntMat& b, std::span<const int> word) {
    const Seed s = apply_word(initial_seed(b), word);
    IntMat d(b.n);
    for (int j = 0; j < b.n; ++j) {
        const auto dj = denominator_vector(s.x[static_cast<std::size_t>(j)], 0, b.n);
        for (int i = 0; i < b.n; ++i) d(i, j) = dj[static_cast<std::size_t>(i)];
    }
    return {VectorKind::D, d};
}

std::vector<LaurentPoly> F_polynomials(const IntMat& b, std::span<const int> word) {
    const Seed s = apply_word(initial_seed(b), word);
    std::vector<LaurentPoly> out;
    out.reserve(s.x.size());
    for (const auto& p : s.x) out.push_back(f_polynomial(p, b.n));
    return out;
}

namespace {

void check_fd_matrices(const IntMat& f, const IntMat& d, const std::string& where, CheckReport& report) {
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j)
            if (f(i, j) != pos(d(i, j))) {
                std::ostringstream msg;
                msg << where << ": entry (" << i + 1 << "," << j + 1 << ") F=" << f(i, j) << " [D]+=" << pos(d(i, j));
                report.fail(msg.str());
            }
}

bool is_rank2(const IntMat& b) { return b.n == 2; }

} // namespace

CheckReport verify_fd(const IntMat& b, std::span<const int> word, std::size_t classification_cap) {
    CheckReport report{"verify-fd"};
    if (!is_rank2(b)) {
        const auto cls = finite_type_classification(b, classification_cap);
        if (cls.verdict != FiniteTypeClass::Verdict::Finite)
            report.failures.push_back("advisory: matrix is neither finite type nor rank 2; the equality is not guaranteed");
    }
    RecursionWalk w(b);
    w.apply(word);
    check_fd_matrices(w.f, w.d, "endpoint", report);
    return report;
}

CheckReport verify_fd_all_seeds(const IntMat& b, std::size_t cap) {
    CheckReport report{"verify-fd"};
    const auto enumeration = enumerate_seeds(b, cap);
    if (!enumeration.complete) {
        report.fail("enumeration cap exceeded");
        return report;
    }
    for (const auto& entry : enumeration.seeds) {
        RecursionWalk w(b);
        w.apply(entry.word);
        std::ostringstream where;
        where << "word" << vec_str(std::vector<long long>(entry.word.begin(), entry.word.end()));
        check_fd_matrices(w.f, w.d, where.str(), report);
    }
    return report;
}

CheckReport verify_fd_rank2_window(const IntMat& b, int window) {
    CheckReport report{"verify-fd"};
    if (!is_rank2(b)) {
        report.fail("not a rank-2 matrix");
        return report;
    }
    for (int n = -window; n <= window; ++n) {
        const auto word = rank2_alternating_word(n);
        RecursionWalk w(b);
        w.apply(word);
        std::ostringstream where;
        where << "t_" << n;
        check_fd_matrices(w.f, w.d, where.str(), report);
    }
    return report;
}

CheckReport verify_duality(const IntMat& b, std::span<const int> word) {
    CheckReport report{"verify-duality"};
    RecursionWalk forward(b);
    forward.apply(word);

    std::vector<int> reversed(word.rbegin(), word.rend());
    RecursionWalk backward(forward.bt.transposed());
    backward.apply(reversed);

    const IntMat dT = backward.d.transposed();
    const IntMat fT = backward.f.transposed();
    if (forward.d != dT) report.fail("D duality failed: D_t != (D'_{t0})^T");
    if (forward.f != fT) report.fail("F duality failed: F_t != (F'_{t0})^T");
    return report;
}

std::vector<std::pair<int, int>> detect_initial_d_columns(const IntMat& d) {
    const int n = d.n;
    std::vector<int> nonneg_cols, initial_cols;
    std::vector<int> initial_row_of_col(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
        bool nonneg = true, nonzero = false;
        for (int i = 0; i < n; ++i) {
            if (d(i, j) < 0) nonneg = false;
            if (d(i, j) != 0) nonzero = true;
        }
        if (nonneg && nonzero) {
            nonneg_cols.push_back(j);
            continue;
        }
        // must be exactly -e_i
        int row = -1;
        bool ok = nonzero;
        for (int i = 0; i < n && ok; ++i) {
            if (d(i, j) == 0) continue;
            if (d(i, j) != -1 || row != -1) ok = false;
            else row = i;
        }
        if (!ok) throw std::invalid_argument("detect_initial_d_columns: column is neither non-negative nor -e_i");
        initial_cols.push_back(j);
        initial_row_of_col[static_cast<std::size_t>(j)] = row;
    }

    // Zero rows across the non-negative columns must match the initial rows.
    std::set<int> zero_rows;
    for (int i = 0; i < n; ++i) {
        bool all_zero = true;
        for (int j : nonneg_cols)
            if (d(i, j) != 0) all_zero = false;
        if (all_zero) zero_rows.insert(i);
    }
    std::set<int> initial_rows;
    for (int j : initial_cols) initial_rows.insert(initial_row_of_col[static_cast<std::size_t>(j)]);
    if (static_cast<int>(initial_rows.size()) != static_cast<int>(initial_cols.size()) || zero_rows != initial_rows)
        throw std::invalid_argument("detect_initial_d_columns: zero rows do not match the initial columns");

    std::vector<std::pair<int, int>> out;
    for (int j : initial_cols) out.emplace_back(initial_row_of_col[static_cast<std::size_t>(j)] + 1, j + 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

namespace {

std::string f_multiset_key(const std::vector<std::vector<long long>>& fvecs) {
    std::vector<std::string> parts;
    for (const auto& v : fvecs) parts.push_back(vec_str(v));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p + ";";
    return out;
}

} // namespace

UniquenessReport verify_uniqueness_finite(const IntMat& b, std::size_t cap) {
    UniquenessReport report;
    const auto enumeration = enumerate_seeds(b, cap);
    report.complete = enumeration.complete;
    if (!enumeration.complete) {
        report.pass = false;
        report.collisions.push_back("enumeration cap exceeded");
        return report;
    }
    std::map<std::string, std::string> cluster_to_fkey; // cluster key -> f multiset key
    std::map<std::string, std::string> fkey_to_cluster;
    for (const auto& entry : enumeration.seeds) {
        std::vector<std::vector<long long>> fvecs;
        for (const auto& p : entry.seed.x) fvecs.push_back(f_vector(p, b.n));
        const std::string ckey = cluster_canonical_key(entry.seed);
        const std::string fkey = f_multiset_key(fvecs);
        auto it = cluster_to_fkey.find(ckey);
        if (it == cluster_to_fkey.end()) {
            cluster_to_fkey.emplace(ckey, fkey);
            auto [fit, inserted] = fkey_to_cluster.emplace(fkey, ckey);
            if (!inserted && fit->second != ckey) {
                report.pass = false;
                report.collisions.push_back("two clusters share the f-vector multiset " + fkey);
            }
        } else if (it->second != fkey) {
            // one cluster, two multisets: cannot happen (f is a function of x)
            report.pass = false;
            report.collisions.push_back("cluster with inconsistent f-vector multisets");
        }
    }
    report.clusters = cluster_to_fkey.size();
    return report;
}

UniquenessReport verify_uniqueness_rank2_window(const IntMat& b, int window) {
    UniquenessReport report;
    if (b.n != 2) {
        report.pass = false;
        report.collisions.push_back("not a rank-2 matrix");
        return report;
    }
    std::map<std::string, int> fkey_to_vertex;
    for (int n = -window; n <= window; ++n) {
        const auto word = rank2_alternating_word(n);
        RecursionWalk w(b);
        w.apply(word);
        std::vector<std::vector<long long>> fvecs{column(w.f, 0), column(w.f, 1)};
        const std::string fkey = f_multiset_key(fvecs);
        auto [it, inserted] = fkey_to_vertex.emplace(fkey, n);
        if (!inserted) {
            report.pass = false;
            std::ostringstream msg;
            msg << "t_" << it->second << " and t_" << n << " share the f-vector multiset " << fkey;
            report.collisions.push_back(msg.str());
        }
    }
    report.clusters = fkey_to_vertex.size();
    return report;
}

std::vector<Seed> bipartite_belt(const IntMat& b, std::size_t guard) {
    const auto sign = bipartite_sign(b);
    if (!sign) throw std::invalid_argument("bipartite_belt: matrix is not bipartite");
    const auto [mu_plus, mu_minus] = source_sink_words(b, *sign);

    const Seed start = initial_seed(b);
    std::vector<Seed> belt{start};
    std::set<std::string> keys{seed_canonical_key(start)};

    auto extend = [&](bool begin_with_plus) {
        Seed current = start;
        bool plus = begin_with_plus;
        while (belt.size() < guard) {
            const auto& word = plus ? mu_plus : mu_minus;
            current = apply_word(current, word);
            plus = !plus;
            std::string key = seed_canonical_key(current);
            if (keys.contains(key)) break;
            keys.insert(std::move(key));
            belt.push_back(current);
        }
    };
    extend(true);
    extend(false);
    return belt;
}

std::vector<int> rank2_alternating_word(int n) {
    std::vector<int> word;
    int next = n > 0 ? 1 : 2;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) {
        word.push_back(next);
        next = 3 - next;
    }
    return word;
}

} // namespace clusterkit
