#include "clusterkit/json_io.hpp"

namespace clusterkit {

std::vector<std::string> xy_var_names(int rank) {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= rank; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

std::vector<std::string> y_var_names(int rank) {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

Json matrix_to_json(const IntMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.n}, {"b", std::move(rows)}};
}

IntMat matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("b") || !j["n"].is_number_integer() || !j["b"].is_array())
        throw std::invalid_argument("matrix JSON must be {\"n\": int, \"b\": [[int,...],...]}");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("matrix JSON: n must be positive");
    const auto& rows = j["b"];
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("matrix JSON: row count differs from n");
    IntMat m(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix JSON: matrix is not square");
        for (int jj = 0; jj < n; ++jj) {
            const auto& cell = row[static_cast<std::size_t>(jj)];
            if (!cell.is_number_integer()) throw std::invalid_argument("matrix JSON: entries must be integers");
            m(i, jj) = cell.get<long long>();
        }
    }
    return m;
}

Json poly_to_json(const LaurentPoly& p, const std::vector<std::string>& var_names) {
    if (static_cast<int>(var_names.size()) != p.nvars())
        throw std::invalid_argument("poly_to_json: variable name count mismatch");
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["c"] = c.get_str();
        term["e"] = e;
        terms.push_back(std::move(term));
    }
    return Json{{"vars", var_names}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms") || !j["vars"].is_array() || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON must be {\"vars\": [...], \"terms\": [...]}");
    const int nvars = static_cast<int>(j["vars"].size());
    LaurentPoly p(nvars);
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("c") || !term.contains("e") || !term["e"].is_array())
            throw std::invalid_argument("polynomial JSON: bad term");
        Exponents e;
        for (const auto& v : term["e"]) {
            if (!v.is_number_integer()) throw std::invalid_argument("polynomial JSON: exponents must be integers");
            e.push_back(v.get<int>());
        }
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("polynomial JSON: exponent length differs from vars");
        BigInt c;
        if (term["c"].is_string()) c = BigInt(term["c"].get<std::string>());
        else if (term["c"].is_number_integer()) c = BigInt(term["c"].get<long>());
        else throw std::invalid_argument("polynomial JSON: coefficient must be a string or integer");
        p.add_term(e, c);
    }
    return p;
}

Json seed_to_json(const Seed& s) {
    const int n = s.rank();
    Json xs = Json::array();
    for (const auto& p : s.x) xs.push_back(poly_to_json(p, xy_var_names(n)));
    Json ys = Json::array();
    for (const auto& m : s.y) ys.push_back(Json{{"e", m.e}});
    return Json{{"B", matrix_to_json(s.b)}, {"x", std::move(xs)}, {"y", std::move(ys)}};
}

Seed seed_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("B") || !j.contains("x") || !j.contains("y"))
        throw std::invalid_argument("seed JSON must be {\"B\":..., \"x\":[...], \"y\":[...]}");
    Seed s;
    s.b = matrix_from_json(j["B"]);
    const int n = s.b.n;
    if (static_cast<int>(j["x"].size()) != n || static_cast<int>(j["y"].size()) != n)
        throw std::invalid_argument("seed JSON: component count differs from rank");
    for (const auto& pj : j["x"]) {
        LaurentPoly p = poly_from_json(pj);
        if (p.nvars() != 2 * n) throw std::invalid_argument("seed JSON: cluster variable has wrong variable count");
        s.x.push_back(std::move(p));
    }
    for (const auto& mj : j["y"]) {
        if (!mj.is_object() || !mj.contains("e") || !mj["e"].is_array() || static_cast<int>(mj["e"].size()) != n)
            throw std::invalid_argument("seed JSON: bad coefficient monomial");
        TropicalMonomial m = TropicalMonomial::one(n);
        for (int i = 0; i < n; ++i) m.e[static_cast<std::size_t>(i)] = mj["e"][static_cast<std::size_t>(i)].get<int>();
        s.y.push_back(std::move(m));
    }
    return s;
}

Json classification_to_json(const FiniteTypeClass& c) {
    Json j;
    switch (c.verdict) {
        case FiniteTypeClass::Verdict::Finite: j["verdict"] = "finite"; break;
        case FiniteTypeClass::Verdict::Infinite: j["verdict"] = "infinite"; break;
        case FiniteTypeClass::Verdict::Undecided: j["verdict"] = "undecided"; break;
    }
    j["label"] = c.verdict == FiniteTypeClass::Verdict::Finite ? Json(c.label) : Json(nullptr);
    j["witness"] = c.witness;
    return j;
}

Json report_to_json(const CheckReport& r, const IntMat& b, const std::vector<int>& word) {
    return Json{{"check", r.check}, {"B", matrix_to_json(b)}, {"word", word}, {"pass", r.pass}, {"failures", r.failures}};
}

} // namespace clusterkit
