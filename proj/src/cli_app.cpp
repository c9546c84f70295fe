#include "clusterkit/cli_app.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "clusterkit/json_io.hpp"
#include "clusterkit/rank2.hpp"

namespace clusterkit {

namespace {

constexpr std::size_t kFullEnumerationCap = 50000;
constexpr std::size_t kDefaultSeedCap = 14; // without --all-seeds

struct CliError : std::runtime_error {
    std::string code;
    CliError(std::string c, const std::string& message) : std::runtime_error(message), code(std::move(c)) {}
};

Json error_json(const std::string& code, const std::string& message) {
    return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

std::vector<int> parse_word_csv(const std::string& csv) {
    std::vector<int> word;
    if (csv.empty()) return word;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            word.push_back(v);
        } catch (const std::exception&) {
            throw CliError("parse-error", "invalid word entry '" + item + "'");
        }
    }
    return word;
}

std::vector<long long> parse_int_pair(const std::string& csv, const char* what) {
    std::stringstream stream(csv);
    std::string item;
    std::vector<long long> values;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CliError("parse-error", std::string("invalid ") + what + " entry '" + item + "'");
        }
    }
    if (values.size() != 2) throw CliError("parse-error", std::string(what) + " must have exactly two components");
    return values;
}

Json parse_json(const std::string& text, const std::string& origin) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw CliError("parse-error", "malformed JSON from " + origin);
    return j;
}

/// --matrix accepts inline JSON (leading '{') or a file path; with no flag
/// the walk-input object {"B": matrix, "word": [...]} is read from stdin.
struct MatrixInput {
    IntMat b;
    std::vector<int> word; // word found alongside the matrix, if any
};

MatrixInput load_matrix(const std::string& matrix_arg, std::istream& in) {
    Json j;
    if (matrix_arg.empty()) {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        if (buffer.str().empty()) throw CliError("usage-error", "no --matrix given and stdin is empty");
        j = parse_json(buffer.str(), "stdin");
    } else if (!matrix_arg.empty() && matrix_arg.front() == '{') {
        j = parse_json(matrix_arg, "--matrix");
    } else {
        std::ifstream file(matrix_arg);
        if (!file) throw CliError("usage-error", "cannot open matrix file '" + matrix_arg + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        j = parse_json(buffer.str(), matrix_arg);
    }

    MatrixInput input;
    try {
        if (j.is_object() && j.contains("B")) {
            input.b = matrix_from_json(j["B"]);
            if (j.contains("word")) {
                for (const auto& v : j["word"]) input.word.push_back(v.get<int>());
            }
        } else {
            input.b = matrix_from_json(j);
        }
    } catch (const std::invalid_argument& e) {
        throw CliError("parse-error", e.what());
    }
    if (!check_skew_symmetrizable(input.b))
        throw CliError("invalid-matrix", "matrix is not skew-symmetrizable");
    return input;
}

void check_word_range(const std::vector<int>& word, int n) {
    for (int k : word)
        if (k < 1 || k > n) throw CliError("out-of-range", "direction " + std::to_string(k) + " outside 1.." + std::to_string(n));
}

bool is_rank2_infinite(const IntMat& b) {
    if (b.n != 2) return false;
    long long prod = b(0, 1) * b(1, 0);
    if (prod < 0) prod = -prod;
    return prod >= 4;
}

void emit(std::ostream& out, const Json& j, bool pretty) {
    if (pretty) out << j.dump(2) << "\n";
    else out << j.dump() << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cluster-algebra seed mutation engine"};
    app.require_subcommand(1);
    bool pretty = false;
    bool json_flag = false; // compact JSON is already the default output
    app.add_flag("--pretty", pretty, "pretty-print JSON output");
    app.add_flag("--json", json_flag, "emit machine output (default)");

    std::string matrix_arg, word_arg, d_arg, f_arg, coeffs = "principal";
    long long b_param = 0, c_param = 0;
    int vertex = 0, max_word_length = 8, samples = 50;
    unsigned rng_seed = 20260808;
    int guard = kDefaultPairGuard;
    std::size_t cap = kFullEnumerationCap;
    bool all_seeds = false;

    auto add_matrix_word = [&](CLI::App* cmd, bool with_word) {
        cmd->add_option("--matrix", matrix_arg, "exchange matrix: inline JSON or file (default: stdin)");
        if (with_word) cmd->add_option("--word", word_arg, "comma-separated mutation directions, 1-based");
    };

    auto* cmd_mutate = app.add_subcommand("mutate", "mutate the exchange matrix along a word");
    add_matrix_word(cmd_mutate, true);
    auto* cmd_walk = app.add_subcommand("walk", "mutate the principal-coefficients seed along a word");
    add_matrix_word(cmd_walk, true);
    auto* cmd_vectors = app.add_subcommand("vectors", "C-, D-, F-, G-matrices at the end of a walk");
    add_matrix_word(cmd_vectors, true);
    auto* cmd_fpoly = app.add_subcommand("fpoly", "F-polynomials at the end of a walk");
    add_matrix_word(cmd_fpoly, true);
    auto* cmd_classify = app.add_subcommand("classify", "finite-type classification of the mutation class");
    add_matrix_word(cmd_classify, false);
    cmd_classify->add_option("--cap", cap, "bound on distinct matrices explored");
    auto* cmd_vfd = app.add_subcommand("verify-fd", "check F = [D]+ (endpoint, all seeds, or rank-2 window)");
    add_matrix_word(cmd_vfd, true);
    cmd_vfd->add_flag("--all-seeds", all_seeds, "enumerate the full exchange graph");
    cmd_vfd->add_option("--max-word-length", max_word_length, "rank-2 window half-width");
    auto* cmd_vdual = app.add_subcommand("verify-duality", "check the D/F transpose duality along walks");
    add_matrix_word(cmd_vdual, true);
    cmd_vdual->add_option("--samples", samples, "number of random words when no --word is given");
    cmd_vdual->add_option("--max-word-length", max_word_length, "random word length bound");
    cmd_vdual->add_option("--rng-seed", rng_seed, "random word generator seed");
    auto* cmd_vuniq = app.add_subcommand("verify-uniqueness", "check clusters are determined by f-vector multisets");
    add_matrix_word(cmd_vuniq, false);
    cmd_vuniq->add_flag("--all-seeds", all_seeds, "enumerate the full exchange graph");
    cmd_vuniq->add_option("--max-word-length", max_word_length, "rank-2 window half-width");
    bool dump_pairs = false;
    auto* cmd_greedy = app.add_subcommand("rank2-greedy", "Dyck-path expansion of a rank-2 variable");
    cmd_greedy->add_option("--b", b_param, "upper-right entry of [[0,b],[-c,0]]")->required();
    cmd_greedy->add_option("--c", c_param, "negated lower-left entry")->required();
    cmd_greedy->add_option("--d", d_arg, "denominator vector d1,d2")->required();
    cmd_greedy->add_option("--coeffs", coeffs, "principal|none")->check(CLI::IsMember({"principal", "none"}));
    cmd_greedy->add_option("--guard", guard, "bound on [d1]+ + [d2]+");
    cmd_greedy->add_flag("--dump-pairs", dump_pairs, "also list the compatible edge-index pairs");
    auto* cmd_restore = app.add_subcommand("rank2-restore", "F-polynomial with the given maximal degree vector");
    cmd_restore->add_option("--b", b_param, "upper-right entry of [[0,b],[-c,0]]")->required();
    cmd_restore->add_option("--c", c_param, "negated lower-left entry")->required();
    cmd_restore->add_option("--f", f_arg, "maximal degree vector f1,f2")->required();
    cmd_restore->add_option("--guard", guard, "bound on f1 + f2");
    auto* cmd_dmat = app.add_subcommand("rank2-dmatrix", "closed-form D-matrix on the rank-2 strip");
    cmd_dmat->add_option("--b", b_param, "upper-right entry of [[0,b],[-c,0]]")->required();
    cmd_dmat->add_option("--c", c_param, "negated lower-left entry")->required();
    cmd_dmat->add_option("--n", vertex, "strip vertex index (t_0 at 0)")->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("clusterkit");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help and friends
            out << app.help();
            return 0;
        }
        emit(out, error_json("usage-error", e.what()), pretty);
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_mutate->parsed() || cmd_walk->parsed() || cmd_vectors->parsed() || cmd_fpoly->parsed()) {
            MatrixInput input = load_matrix(matrix_arg, in);
            std::vector<int> word = word_arg.empty() && !input.word.empty() ? input.word : parse_word_csv(word_arg);
            check_word_range(word, input.b.n);
            if (cmd_mutate->parsed()) {
                emit(out, matrix_to_json(mutate_matrix(input.b, word)), pretty);
            } else if (cmd_walk->parsed()) {
                emit(out, seed_to_json(apply_word(initial_seed(input.b), word)), pretty);
            } else if (cmd_vectors->parsed()) {
                RecursionWalk walk(input.b);
                walk.apply(word);
                auto raw = [](const IntMat& m) { return matrix_to_json(m)["b"]; };
                emit(out,
                     Json{{"word", word},
                          {"C", raw(walk.c)},
                          {"D", raw(walk.d)},
                          {"F", raw(walk.f)},
                          {"G", raw(walk.g)}},
                     pretty);
            } else {
                Json polys = Json::array();
                for (const auto& f : F_polynomials(input.b, word)) polys.push_back(poly_to_json(f, y_var_names(input.b.n)));
                emit(out, Json{{"word", word}, {"F", std::move(polys)}}, pretty);
            }
            return 0;
        }

        if (cmd_classify->parsed()) {
            MatrixInput input = load_matrix(matrix_arg, in);
            emit(out, classification_to_json(finite_type_classification(input.b, cap)), pretty);
            return 0;
        }

        if (cmd_vfd->parsed()) {
            MatrixInput input = load_matrix(matrix_arg, in);
            CheckReport report;
            std::vector<int> word;
            if (!word_arg.empty() || !input.word.empty()) {
                word = word_arg.empty() ? input.word : parse_word_csv(word_arg);
                check_word_range(word, input.b.n);
                report = verify_fd(input.b, word);
            } else if (is_rank2_infinite(input.b)) {
                report = verify_fd_rank2_window(input.b, max_word_length);
            } else {
                report = verify_fd_all_seeds(input.b, all_seeds ? kFullEnumerationCap : kDefaultSeedCap);
                if (!report.pass && !report.failures.empty() && report.failures.front() == "enumeration cap exceeded")
                    throw CliError("cap-exceeded", "seed enumeration exceeded the cap; pass --all-seeds");
            }
            emit(out, report_to_json(report, input.b, word), pretty);
            return report.pass ? 0 : 1;
        }

        if (cmd_vdual->parsed()) {
            MatrixInput input = load_matrix(matrix_arg, in);
            CheckReport combined{"verify-duality"};
            std::vector<int> word;
            if (!word_arg.empty() || !input.word.empty()) {
                word = word_arg.empty() ? input.word : parse_word_csv(word_arg);
                check_word_range(word, input.b.n);
                combined = verify_duality(input.b, word);
            } else {
                std::mt19937 rng(rng_seed);
                std::uniform_int_distribution<int> length_dist(0, max_word_length);
                std::uniform_int_distribution<int> dir_dist(1, input.b.n);
                for (int s = 0; s < samples; ++s) {
                    std::vector<int> random_word(static_cast<std::size_t>(length_dist(rng)));
                    for (int& k : random_word) k = dir_dist(rng);
                    const CheckReport one = verify_duality(input.b, random_word);
                    if (!one.pass) {
                        combined.pass = false;
                        for (const auto& failure : one.failures) combined.failures.push_back(failure);
                    }
                }
            }
            emit(out, report_to_json(combined, input.b, word), pretty);
            return combined.pass ? 0 : 1;
        }

        if (cmd_vuniq->parsed()) {
            MatrixInput input = load_matrix(matrix_arg, in);
            UniquenessReport report;
            if (is_rank2_infinite(input.b)) {
                report = verify_uniqueness_rank2_window(input.b, max_word_length);
            } else {
                report = verify_uniqueness_finite(input.b, all_seeds ? kFullEnumerationCap : kDefaultSeedCap);
                if (!report.complete)
                    throw CliError("cap-exceeded", "seed enumeration exceeded the cap; pass --all-seeds");
            }
            emit(out,
                 Json{{"check", "verify-uniqueness"},
                      {"B", matrix_to_json(input.b)},
                      {"pass", report.pass},
                      {"clusters", report.clusters},
                      {"failures", report.collisions}},
                 pretty);
            return report.pass ? 0 : 1;
        }

        if (cmd_greedy->parsed() || cmd_restore->parsed() || cmd_dmat->parsed()) {
            if (b_param < 0 || c_param < 0) throw CliError("out-of-range", "b and c must be non-negative");
            const Rank2Params params{b_param, c_param};
            if (cmd_greedy->parsed()) {
                const auto d = parse_int_pair(d_arg, "--d");
                const std::array<long long, 2> dv{d[0], d[1]};
                Json poly;
                if (coeffs == "principal") {
                    std::vector<std::string> names{"x1", "x2", "y1", "y2"};
                    poly = poly_to_json(greedy_element_principal(dv, params, guard), names);
                } else {
                    std::vector<std::string> names{"x1", "x2"};
                    poly = poly_to_json(greedy_element(dv, params, guard), names);
                }
                if (dump_pairs) {
                    Json pairs = Json::array();
                    const int a1 = static_cast<int>(pos(dv[0])), a2 = static_cast<int>(pos(dv[1]));
                    for (const auto& pair : enumerate_compatible_pairs(a1, a2, params, guard))
                        pairs.push_back(Json{{"s1", pair.s1}, {"s2", pair.s2}});
                    emit(out, Json{{"poly", std::move(poly)}, {"pairs", std::move(pairs)}}, pretty);
                } else {
                    emit(out, poly, pretty);
                }
            } else if (cmd_restore->parsed()) {
                const auto f = parse_int_pair(f_arg, "--f");
                if (f[0] < 0 || f[1] < 0) throw CliError("out-of-range", "f must be non-negative");
                emit(out, poly_to_json(restore_F({f[0], f[1]}, params, guard), y_var_names(2)), pretty);
            } else {
                emit(out, Json{{"vertex", vertex}, {"D", matrix_to_json(rank2_D_closed_form(vertex, params))["b"]}}, pretty);
            }
            return 0;
        }
    } catch (const CliError& e) {
        emit(out, error_json(e.code, e.what()), pretty);
        err << e.what() << "\n";
        return 2;
    } catch (const SizeGuardExceeded& e) {
        emit(out, error_json("size-guard", e.what()), pretty);
        err << e.what() << "\n";
        return 2;
    } catch (const NonExactDivision& e) {
        emit(out, error_json("internal-error", e.what()), pretty);
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        emit(out, error_json("usage-error", e.what()), pretty);
        err << e.what() << "\n";
        return 2;
    }

    emit(out, error_json("usage-error", "no command"), pretty);
    return 2;
}

} // namespace clusterkit
