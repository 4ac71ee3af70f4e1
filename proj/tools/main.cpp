// Command-line front end: enumeration, generating functions, format
// conversion, the involutions, and the verification sweeps, all over the
// canonical JSON documents.

#include "CLI11.hpp"

#include "bktab/benderknuth.hpp"
#include "bktab/bijections.hpp"
#include "bktab/enumeration.hpp"
#include "bktab/json_io.hpp"
#include "bktab/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace bktab;

// Errors that indicate a bad invocation rather than bad input data.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::istringstream ss(text);
    std::string token;
    try {
        while (std::getline(ss, token, ',')) {
            if (token.empty()) continue;
            std::size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            parts.push_back(value);
        }
        return Partition(std::move(parts));
    } catch (const std::exception&) {
        throw UsageError("malformed shape '" + text + "'");
    }
}

json read_json(const std::string& path) {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return json::parse(in);
}

void print(const json& doc) {
    std::cout << doc.dump() << "\n";
}

int cmd_enumerate(const std::string& type, int n, const Partition& shape,
                  const std::string& format) {
    if (format == "count") {
        long long count = 0;
        if (type == "ssyt")
            enum_gt(n, shape, [&](const GTPattern&) { ++count; });
        else if (type == "king")
            enum_king(n, shape, [&](const KingPattern&) { ++count; });
        else
            enum_orthogonal(n, shape, [&](const OrthogonalPattern&) { ++count; });
        std::cout << count << "\n";
        return 0;
    }
    // One tableau document per line, in enumeration order.
    if (type == "ssyt")
        enum_gt(n, shape, [&](const GTPattern& p) { print(tableau_to_json(pattern_to_tableau(p))); });
    else if (type == "king")
        enum_king(n, shape,
                  [&](const KingPattern& p) { print(tableau_to_json(king_pattern_to_tableau(p))); });
    else
        enum_orthogonal(n, shape, [&](const OrthogonalPattern& p) {
            print(tableau_to_json(sundaram_pattern_to_tableau(p)));
        });
    return 0;
}

int cmd_poly(const std::string& family, int n, const Partition& shape, const std::string& format) {
    LaurentPolynomial f = family == "schur"        ? schur(n, shape)
                          : family == "symplectic" ? symplectic(n, shape)
                                                   : orthogonal(n, shape);
    if (format == "json")
        print(poly_to_json(f));
    else
        std::cout << to_string(f) << "\n";
    return 0;
}

int cmd_convert(const std::string& to, const std::string& format, const std::string& input) {
    const json doc = read_json(input);
    json out;
    std::string text;
    if (json_is_tableau(doc)) {
        const Tableau t = tableau_from_json(doc);
        if (to == "tableau") {
            out = tableau_to_json(t);
            text = render_tableau(t);
        } else {
            switch (t.kind()) {
                case TableauKind::ssyt: {
                    const GTPattern p = tableau_to_pattern(t);
                    out = pattern_to_json(p);
                    text = render_pattern(p);
                    break;
                }
                case TableauKind::king: {
                    const KingPattern p = king_tableau_to_pattern(t);
                    out = pattern_to_json(p);
                    text = render_pattern(p.pattern());
                    break;
                }
                case TableauKind::orthogonal: {
                    const OrthogonalPattern p = sundaram_tableau_to_pattern(t);
                    out = pattern_to_json(p);
                    text = render_pattern(p);
                    break;
                }
            }
        }
    } else {
        const ParsedPattern parsed = pattern_from_json(doc);
        if (to == "pattern") {
            std::visit([&](const auto& p) { out = pattern_to_json(p); }, parsed);
            if (const auto* gt = std::get_if<GTPattern>(&parsed))
                text = render_pattern(*gt);
            else if (const auto* king = std::get_if<KingPattern>(&parsed))
                text = render_pattern(king->pattern());
            else
                text = render_pattern(std::get<OrthogonalPattern>(parsed));
        } else {
            Tableau t = std::holds_alternative<GTPattern>(parsed)
                            ? pattern_to_tableau(std::get<GTPattern>(parsed))
                        : std::holds_alternative<KingPattern>(parsed)
                            ? king_pattern_to_tableau(std::get<KingPattern>(parsed))
                            : sundaram_pattern_to_tableau(std::get<OrthogonalPattern>(parsed));
            out = tableau_to_json(t);
            text = render_tableau(t);
        }
    }
    if (format == "json")
        print(out);
    else
        std::cout << text << "\n";
    return 0;
}

int cmd_bk(const std::string& kind, int j, bool trace, const std::string& format,
           const std::string& input) {
    const json doc = read_json(input);
    if (trace && kind != "c") throw UsageError("--trace requires --kind c");

    if (json_is_tableau(doc)) {
        if (trace) throw UsageError("--trace requires a pattern document");
        const Tableau t = tableau_from_json(doc);
        Tableau out;
        if (kind == "a") {
            const int m = t.kind() == TableauKind::ssyt ? t.n() : 2 * t.n();
            if (j < 1 || j >= m) throw UsageError("toggle letter out of range");
            out = bk_a_tableau(t, j);
        } else if (kind == "c") {
            if (t.kind() != TableauKind::king)
                throw std::invalid_argument("symplectic toggle expects a king tableau");
            if (j < 1 || j > t.n() - 1) throw UsageError("toggle index out of range");
            out = bk_c_tableau(t, j);
        } else {
            throw std::invalid_argument("the orthogonal toggle operates on pattern documents");
        }
        if (format == "json")
            print(tableau_to_json(out));
        else
            std::cout << render_tableau(out) << "\n";
        return 0;
    }

    const ParsedPattern parsed = pattern_from_json(doc);
    if (kind == "a") {
        const auto* p = std::get_if<GTPattern>(&parsed);
        if (!p) throw std::invalid_argument("the type A toggle expects a gt pattern document");
        if (j < 1 || j >= p->row_count()) throw UsageError("toggle row out of range");
        const GTPattern out = bk_a_pattern(*p, j);
        if (format == "json")
            print(pattern_to_json(out));
        else
            std::cout << render_pattern(out) << "\n";
        return 0;
    }
    if (kind == "c") {
        const auto* p = std::get_if<KingPattern>(&parsed);
        if (!p) throw std::invalid_argument("the symplectic toggle expects a king pattern document");
        if (j < 1 || j > p->n() - 1) throw UsageError("toggle index out of range");
        if (trace) {
            const BkCTrace tr = bk_c_pattern_traced(*p, j);
            json out;
            out["input"] = pattern_to_json(*p);
            out["steps"] = json::array({pattern_to_json(tr.step1), pattern_to_json(tr.step2),
                                        pattern_to_json(tr.step3), pattern_to_json(tr.step4)});
            out["subtracted"] = tr.subtracted;
            out["result"] = pattern_to_json(tr.result);
            print(out);
            return 0;
        }
        const KingPattern out = bk_c_pattern(*p, j);
        if (format == "json")
            print(pattern_to_json(out));
        else
            std::cout << render_pattern(out.pattern()) << "\n";
        return 0;
    }
    const auto* p = std::get_if<OrthogonalPattern>(&parsed);
    if (!p) throw std::invalid_argument("the orthogonal toggle expects an orthogonal pattern document");
    if (j < 0 || j > p->king().n() - 1) throw UsageError("toggle index out of range");
    const OrthogonalPattern out = bk_b(*p, j);
    if (format == "json")
        print(pattern_to_json(out));
    else
        std::cout << render_pattern(out) << "\n";
    return 0;
}

int cmd_verify(const std::string& check, int n, int max_size, int samples, std::uint64_t seed) {
    VerifyReport report;
    if (check == "involution")
        report = verify_involution(n, max_size);
    else if (check == "weight-action")
        report = verify_weight_action(n, max_size);
    else if (check == "symmetry")
        report = verify_symmetry(n, max_size);
    else if (check == "sum-identity")
        report = verify_sum_identity(n, max_size);
    else if (check == "character")
        report = verify_character(n, max_size);
    else if (check == "detrop")
        report = verify_detrop(n, samples, seed);
    else if (check == "support-obstruction")
        report = verify_support_obstruction(n, max_size);
    else
        report = verify_locality(n, max_size);
    print(report.to_json());
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tableaux, triangular patterns, their involutions and character polynomials"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "Stream a family of tableaux or count it");
    std::string enum_type, enum_shape, enum_format = "count";
    int enum_n = 0;
    enumerate->add_option("--type", enum_type, "Family: ssyt, king or orthogonal")
        ->required()
        ->check(CLI::IsMember({"ssyt", "king", "orthogonal"}));
    enumerate->add_option("--n", enum_n, "Alphabet size (letters or letter pairs)")->required();
    enumerate->add_option("--shape", enum_shape, "Comma-separated partition, e.g. 2,1");
    enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"count", "json"}));

    auto* poly = app.add_subcommand("poly", "Generating function of a family");
    std::string poly_family, poly_shape, poly_format = "text";
    int poly_n = 0;
    poly->add_option("--family", poly_family)
        ->required()
        ->check(CLI::IsMember({"schur", "symplectic", "orthogonal"}));
    poly->add_option("--n", poly_n)->required();
    poly->add_option("--shape", poly_shape, "Comma-separated partition");
    poly->add_option("--format", poly_format)->check(CLI::IsMember({"json", "text"}));

    auto* convert = app.add_subcommand("convert", "Convert between tableau and pattern documents");
    std::string convert_to, convert_format = "json", convert_input = "-";
    convert->add_option("--to", convert_to)
        ->required()
        ->check(CLI::IsMember({"pattern", "tableau"}));
    convert->add_option("--format", convert_format)->check(CLI::IsMember({"json", "text"}));
    convert->add_option("input", convert_input, "Input file, or - for stdin");

    auto* bk = app.add_subcommand("bk", "Apply a toggle to a pattern or tableau document");
    std::string bk_kind, bk_format = "json", bk_input = "-";
    int bk_j = 0;
    bool bk_trace = false;
    bk->add_option("--kind", bk_kind, "a (type A), b (orthogonal) or c (symplectic)")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c"}));
    bk->add_option("--j", bk_j, "Toggle index (0 allowed for kind b)")->required();
    bk->add_flag("--trace", bk_trace, "Emit the four intermediate patterns (kind c)");
    bk->add_option("--format", bk_format)->check(CLI::IsMember({"json", "text"}));
    bk->add_option("input", bk_input, "Input file, or - for stdin");

    auto* verify = app.add_subcommand("verify", "Run a bounded verification sweep");
    std::string verify_check;
    int verify_n = 3, verify_max_size = 5, verify_samples = 100;
    std::uint64_t verify_seed = 12345;
    verify->add_option("--check", verify_check)
        ->required()
        ->check(CLI::IsMember({"involution", "weight-action", "symmetry", "sum-identity",
                               "character", "detrop", "support-obstruction", "locality"}));
    verify->add_option("--n", verify_n, "Alphabet bound (default 3)");
    verify->add_option("--max-size", verify_max_size, "Largest shape size (default 5)");
    verify->add_option("--seed", verify_seed, "Random seed for detrop (default 12345)");
    verify->add_option("--samples", verify_samples, "Sample count for detrop (default 100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(enum_type, enum_n, parse_shape(enum_shape), enum_format);
        if (*poly)
            return cmd_poly(poly_family, poly_n, parse_shape(poly_shape), poly_format);
        if (*convert)
            return cmd_convert(convert_to, convert_format, convert_input);
        if (*bk)
            return cmd_bk(bk_kind, bk_j, bk_trace, bk_format, bk_input);
        if (*verify)
            return cmd_verify(verify_check, verify_n, verify_max_size, verify_samples, verify_seed);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
