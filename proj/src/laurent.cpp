#include "clusterkit/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace clusterkit {

LaurentPoly LaurentPoly::constant(int nvars, BigInt c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(static_cast<std::size_t>(nvars), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, Exponents e, BigInt c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("LaurentPoly::monomial: exponent length mismatch");
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index, int power) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("LaurentPoly::variable: index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = power;
    return monomial(nvars, std::move(e), 1);
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

void LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ring(b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ring(b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ring(b);
    LaurentPoly r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly acc = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

namespace {

Exponents min_exponents(const LaurentPoly::TermMap& terms, int nvars) {
    Exponents mins(static_cast<std::size_t>(nvars), 0);
    bool first = true;
    for (const auto& [e, c] : terms) {
        (void)c;
        if (first) {
            mins = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], e[i]);
        }
    }
    return mins;
}

} // namespace

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& q) const {
    check_same_ring(q);
    if (q.is_zero()) throw std::invalid_argument("LaurentPoly::exact_div: division by zero");
    LaurentPoly quotient(nvars_);
    if (is_zero()) return quotient;

    // Clear common monomial factors so both operands live in the ordinary
    // polynomial ring, where lex is a well order and the reduction below
    // terminates. The cleared shifts are reapplied to the quotient.
    const Exponents shift_p = min_exponents(terms_, nvars_);
    const Exponents shift_q = min_exponents(q.terms_, nvars_);

    TermMap rem;
    for (const auto& [e, c] : terms_) {
        Exponents s(e);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= shift_p[i];
        rem.emplace(std::move(s), c);
    }
    TermMap div;
    for (const auto& [e, c] : q.terms_) {
        Exponents s(e);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= shift_q[i];
        div.emplace(std::move(s), c);
    }

    const auto& [eq, cq] = *div.rbegin(); // lex leading term of the divisor

    while (!rem.empty()) {
        const auto& [ep, cp] = *rem.rbegin();
        Exponents et(ep);
        for (std::size_t i = 0; i < et.size(); ++i) {
            et[i] -= eq[i];
            if (et[i] < 0) throw NonExactDivision("exact_div: leading monomial does not divide");
        }
        if (!mpz_divisible_p(cp.get_mpz_t(), cq.get_mpz_t()))
            throw NonExactDivision("exact_div: leading coefficient does not divide");
        BigInt ct = cp / cq;

        // quotient term in the original Laurent frame
        Exponents eo(et);
        for (std::size_t i = 0; i < eo.size(); ++i) eo[i] += shift_p[i] - shift_q[i];
        quotient.add_term(eo, ct);

        for (const auto& [ed, cd] : div) {
            Exponents e(et);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += ed[i];
            const BigInt delta = ct * cd;
            auto it = rem.find(e);
            if (it == rem.end()) {
                rem.emplace(std::move(e), -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return quotient;
}

LaurentPoly LaurentPoly::specialized_at_one(std::span<const int> vars) const {
    for (int v : vars)
        if (v < 0 || v >= nvars_) throw std::invalid_argument("specialized_at_one: variable out of range");
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents s(e);
        for (int v : vars) s[static_cast<std::size_t>(v)] = 0;
        r.add_term(s, c);
    }
    return r;
}

LaurentPoly LaurentPoly::restricted_to(std::span<const int> vars) const {
    std::vector<bool> kept(static_cast<std::size_t>(nvars_), false);
    for (int v : vars) {
        if (v < 0 || v >= nvars_) throw std::invalid_argument("restricted_to: variable out of range");
        kept[static_cast<std::size_t>(v)] = true;
    }
    LaurentPoly r(static_cast<int>(vars.size()));
    for (const auto& [e, c] : terms_) {
        Exponents s;
        s.reserve(vars.size());
        for (int v : vars) s.push_back(e[static_cast<std::size_t>(v)]);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!kept[i] && e[i] != 0)
                throw std::invalid_argument("restricted_to: dropped variable has nonzero exponent");
        r.add_term(s, c);
    }
    return r;
}

int LaurentPoly::min_exponent(int var) const {
    if (is_zero()) throw std::invalid_argument("min_exponent: zero polynomial");
    if (var < 0 || var >= nvars_) throw std::invalid_argument("min_exponent: variable out of range");
    int m = terms_.begin()->first[static_cast<std::size_t>(var)];
    for (const auto& [e, c] : terms_) m = std::min(m, e[static_cast<std::size_t>(var)]);
    return m;
}

int LaurentPoly::max_exponent(int var) const {
    if (is_zero()) throw std::invalid_argument("max_exponent: zero polynomial");
    if (var < 0 || var >= nvars_) throw std::invalid_argument("max_exponent: variable out of range");
    int m = terms_.begin()->first[static_cast<std::size_t>(var)];
    for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<std::size_t>(var)]);
    return m;
}

bool LaurentPoly::all_coefficients_positive() const {
    for (const auto& [e, c] : terms_)
        if (c <= 0) return false;
    return true;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first_term = true;
    // print highest lex term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first_term) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first_term = false;
        BigInt abs_c = abs(c);
        bool printed = false;
        if (abs_c != 1) {
            out << abs_c.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) out << "*";
            out << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (e[i] != 1) out << "^" << e[i];
            printed = true;
        }
        if (!printed) out << "1";
    }
    return out.str();
}

std::vector<long long> denominator_vector(const LaurentPoly& p, int first_var, int count) {
    if (p.is_zero()) throw std::invalid_argument("denominator_vector: zero polynomial");
    std::vector<long long> d(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) d[static_cast<std::size_t>(k)] = -p.min_exponent(first_var + k);
    return d;
}

int max_degree(const LaurentPoly& p, int var) { return p.max_exponent(var); }

TropicalMonomial TropicalMonomial::generator(int n, int index) {
    if (index < 0 || index >= n) throw std::invalid_argument("TropicalMonomial::generator: index out of range");
    TropicalMonomial m = one(n);
    m.e[static_cast<std::size_t>(index)] = 1;
    return m;
}

TropicalMonomial TropicalMonomial::inverse() const {
    TropicalMonomial r = *this;
    for (int& v : r.e) v = -v;
    return r;
}

TropicalMonomial TropicalMonomial::power(long long k) const {
    TropicalMonomial r = *this;
    for (int& v : r.e) v = static_cast<int>(v * k);
    return r;
}

TropicalMonomial operator*(const TropicalMonomial& a, const TropicalMonomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("TropicalMonomial: mismatched rank");
    TropicalMonomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

TropicalMonomial tropical_add(const TropicalMonomial& a, const TropicalMonomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("TropicalMonomial: mismatched rank");
    TropicalMonomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(r.e[i], b.e[i]);
    return r;
}

LaurentPoly embed_coefficient(const TropicalMonomial& m, int rank) {
    if (m.n() != rank) throw std::invalid_argument("embed_coefficient: rank mismatch");
    Exponents e(static_cast<std::size_t>(2 * rank), 0);
    for (int i = 0; i < rank; ++i) e[static_cast<std::size_t>(rank + i)] = m.e[static_cast<std::size_t>(i)];
    return LaurentPoly::monomial(2 * rank, std::move(e), 1);
}

} // namespace clusterkit
