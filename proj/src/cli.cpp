#include "finfree/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "finfree/error.hpp"
#include "finfree/families.hpp"
#include "finfree/ffp.hpp"
#include "finfree/haar.hpp"
#include "finfree/json_io.hpp"
#include "finfree/moments.hpp"

namespace finfree::cli {

namespace {

using json::Json;

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void emit_error(std::ostream& err, std::string_view code, const std::string& message) {
    Json j;
    j["error"] = std::string(code);
    j["message"] = message;
    err << j.dump() << '\n';
}

Matrix load_matrix(const std::string& path) { return json::matrix_from_json(json::read_file(path)); }
Polynomial load_polynomial(const std::string& path) { return json::polynomial_from_json(json::read_file(path)); }

std::pair<FamilyId, FamilyId> parse_family_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw Error(ErrorCode::invalid_argument, "--families expects two names separated by a comma");
    }
    return {parse_family(text.substr(0, comma)), parse_family(text.substr(comma + 1))};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact finite free convolution and finite free position toolkit", "finfree"};
    app.require_subcommand(1);
    app.allow_extras(false);

    std::string kind_text = "additive";
    std::string first_path;
    std::string second_path;
    std::string families_text;
    std::size_t trials = 200;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 100000;
    double tolerance = 0.1;
    bool monte_carlo = false;
    unsigned moment_count = 0;
    long entry_bound = 10;

    int exit_code = kExitOk;
    std::function<void()> action;

    auto add_kind = [&](CLI::App* sub) {
        sub->add_option("--kind", kind_text, "additive or multiplicative")
            ->check(CLI::IsMember({"additive", "multiplicative"}));
    };

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a matrix");
    charpoly->add_option("matrix", first_path)->required();
    charpoly->callback([&] { action = [&] { emit(out, json::to_json(char_poly(load_matrix(first_path)))); }; });

    auto* convolve = app.add_subcommand("convolve", "finite free convolution of two polynomials");
    add_kind(convolve);
    convolve->add_option("p", first_path)->required();
    convolve->add_option("q", second_path)->required();
    convolve->callback([&] {
        action = [&] {
            const Polynomial p = load_polynomial(first_path);
            const Polynomial q = load_polynomial(second_path);
            emit(out, json::to_json(parse_kind(kind_text) == Kind::additive ? boxplus(p, q) : boxtimes(p, q)));
        };
    });

    auto* check = app.add_subcommand("check-ffp", "decide whether two matrices are in finite free position");
    add_kind(check);
    check->add_option("A", first_path)->required();
    check->add_option("B", second_path)->required();
    check->callback([&] {
        action = [&] {
            const FfpReport report = check_ffp(load_matrix(first_path), load_matrix(second_path), parse_kind(kind_text));
            emit(out, json::to_json(report));
            if (!report.verdict) exit_code = kExitNotFfp;
        };
    });

    auto* balanced = app.add_subcommand("check-balanced", "principal minors and principally balanced test");
    balanced->add_option("matrix", first_path)->required();
    balanced->callback([&] {
        action = [&] {
            const Matrix a = load_matrix(first_path);
            Json j;
            j["principally_balanced"] = is_member(a, FamilyId::PrincipallyBalanced);
            j["minors"] = json::to_json(minor_table(a));
            emit(out, j);
        };
    });

    auto* cycles = app.add_subcommand("cycle-sums", "cycle sums c_I of a matrix");
    cycles->add_option("matrix", first_path)->required();
    cycles->callback([&] { action = [&] { emit(out, json::to_json(cycle_sums(load_matrix(first_path)))); }; });

    auto* expect = app.add_subcommand("expect", "expected characteristic polynomial over conjugations");
    add_kind(expect);
    expect->add_option("A", first_path)->required();
    expect->add_option("B", second_path)->required();
    expect->add_flag("--mc", monte_carlo, "Haar Monte-Carlo instead of exact signed permutations");
    auto* samples_opt = expect->add_option("--samples", samples, "Monte-Carlo sample count")->check(CLI::PositiveNumber);
    auto* seed_opt_expect = expect->add_option("--seed", seed, "Monte-Carlo seed");
    auto* tol_opt = expect->add_option("--tolerance", tolerance, "reported deviation threshold");
    expect->callback([&] {
        if (!monte_carlo && (samples_opt->count() + seed_opt_expect->count() + tol_opt->count()) > 0) {
            throw CLI::ValidationError("--samples/--seed/--tolerance", "only valid together with --mc");
        }
        if (monte_carlo && seed_opt_expect->count() == 0) throw CLI::RequiredError("--seed");
        action = [&] {
            const Matrix a = load_matrix(first_path);
            const Matrix b = load_matrix(second_path);
            const Kind kind = parse_kind(kind_text);
            if (monte_carlo) {
                emit(out, json::to_json(expected_charpoly_haar_mc(a, b, kind, {samples, seed, tolerance})));
                return;
            }
            Json j;
            j["kind"] = std::string(to_string(kind));
            j["expected"] = json::to_json(expected_charpoly_signed_perms(a, b, kind));
            j["convolution"] = json::to_json(kind == Kind::additive ? boxplus(char_poly(a), char_poly(b))
                                                                     : boxtimes(char_poly(a), char_poly(b)));
            j["identity_applies"] = expectation_identity_applies(a, b);
            if (!expectation_identity_applies(a, b)) {
                j["warning"] = "inputs are not both real symmetric; the average need not equal the convolution";
            }
            emit(out, j);
        };
    });

    auto* verify = app.add_subcommand("verify-pair", "sample and check a complementary pair of families");
    verify->add_option("--families", families_text, "e.g. diag,pb")->required();
    add_kind(verify);
    verify->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    verify->add_option("--n", dim)->required()->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed)->required();
    verify->add_option("--bound", entry_bound, "entry numerator/denominator bound")->check(CLI::PositiveNumber);
    verify->callback([&] {
        action = [&] {
            auto [f, g] = parse_family_pair(families_text);
            emit(out, json::to_json(verify_pair(f, g, parse_kind(kind_text), trials, seed, dim, {entry_bound})));
        };
    });

    auto* moments = app.add_subcommand("moments", "normalized trace moments m_1..m_k");
    moments->add_option("matrix", first_path)->required();
    moments->add_option("--k", moment_count, "number of moments (default n)")->check(CLI::PositiveNumber);
    moments->callback([&] {
        action = [&] { emit(out, json::to_json(matrix_moments(load_matrix(first_path), moment_count))); };
    });

    auto* cumulants = app.add_subcommand("cumulants", "finite free cumulants kappa_1..kappa_n");
    cumulants->add_option("matrix", first_path)->required();
    cumulants->callback([&] {
        action = [&] {
            emit(out, json::to_json(cumulants_from_moments(moments_from_coeffs(char_poly(load_matrix(first_path))))));
        };
    });

    auto* sum_moments = app.add_subcommand("sum-moments", "predicted moments of A+B for a pair in additive FFP");
    sum_moments->add_option("A", first_path)->required();
    sum_moments->add_option("B", second_path)->required();
    sum_moments->add_option("--k", moment_count, "number of moments (default n)")->check(CLI::PositiveNumber);
    sum_moments->callback([&] {
        action = [&] {
            const Matrix a = load_matrix(first_path);
            const Matrix b = load_matrix(second_path);
            emit(out, json::to_json(ffp_sum_moments(matrix_moments(a), matrix_moments(b), moment_count)));
        };
    });

    auto* rank = app.add_subcommand("rank-bound", "upper bound on the rank of a finite free variety");
    rank->add_option("--n", dim)->required()->check(CLI::PositiveNumber);
    rank->callback([&] {
        action = [&] {
            Json j;
            j["n"] = dim;
            j["rank_upper_bound"] = rank_upper_bound(dim).get_str();
            emit(out, j);
        };
    });

    auto* witness = app.add_subcommand("witness-ekl", "E_kl counterexample for a non-diagonal matrix");
    witness->add_option("matrix", first_path)->required();
    add_kind(witness);
    witness->callback([&] {
        action = [&] {
            const auto w = ekl_witness(load_matrix(first_path), parse_kind(kind_text));
            Json j;
            j["witness"] = w ? json::to_json(*w) : Json(nullptr);
            emit(out, j);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage", e.what());
        return kExitError;
    }

    try {
        action();
    } catch (const Error& e) {
        emit_error(err, to_string(e.code()), e.what());
        return kExitError;
    }
    return exit_code;
}

}  // namespace finfree::cli
