#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "loopchar/literals.hpp"
#include "loopchar/report.hpp"
#include "loopchar/runner.hpp"

using namespace loopchar;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInstability = 3;

DegreeVector parse_int_vector(const std::string& text, int rank, const char* what) {
    DegreeVector out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        require(!piece.empty(), ErrorCode::ParseError, std::string(what) + ": empty coordinate");
        out.push_back(static_cast<int>(std::strtol(piece.c_str(), nullptr, 10)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(out.size()) == 1 && rank > 1)
        out.assign(static_cast<size_t>(rank), out.front());
    require(static_cast<int>(out.size()) == rank, ErrorCode::ParseError,
            std::string(what) + " needs " + std::to_string(rank) + " coordinates");
    return out;
}

CartanData load_cartan(const std::string& type_name, const std::string& file) {
    require(type_name.empty() != file.empty(), ErrorCode::ParseError,
            "give exactly one of --type or --cartan-file");
    if (!type_name.empty()) return CartanData::from_catalog(type_name);
    std::ifstream in(file);
    require(in.good(), ErrorCode::ParseError, "cannot open cartan file " + file);
    nlohmann::json j;
    in >> j;
    require(j.contains("d"), ErrorCode::ParseError, "cartan file needs a \"d\" matrix");
    std::vector<std::vector<int>> d = j["d"].get<std::vector<std::vector<int>>>();
    return CartanData::validate(d);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        require(out.good(), ErrorCode::ParseError, "cannot open output file " + out_path);
        out << text;
    }
}

ModPolicy make_policy(std::uint64_t seed, const std::string& primes_text, int points) {
    ModPolicy policy;
    policy.seed = seed;
    policy.num_points = points;
    if (!primes_text.empty()) {
        policy.primes.clear();
        size_t start = 0;
        while (true) {
            size_t comma = primes_text.find(',', start);
            std::string piece = comma == std::string::npos
                                    ? primes_text.substr(start)
                                    : primes_text.substr(start, comma - start);
            policy.primes.push_back(std::strtoull(piece.c_str(), nullptr, 10));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return policy;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loopchar: exact shuffle-algebra characters and slope dimensions"};
    app.require_subcommand(1);

    std::string type_name, cartan_file, out_path, format = "json";
    std::string r_text, max_n_text, p_text, p1_text = "-inf", p2_text, mode_text = "exact";
    std::string space, word_text, minus_text, minus_poly, minus_n_text, floor_text = "0";
    long max_d = 0;
    std::uint64_t seed = 1;
    std::string primes_text;
    int points = 1;
    bool antipode = false, with_timings = false, no_cap_check = false;

    auto add_cartan_flags = [&](CLI::App* cmd) {
        cmd->add_option("--type", type_name, "catalog type (A1, A2, A3, B2, G2)");
        cmd->add_option("--cartan-file", cartan_file, "JSON file {\"d\": [[...]]}");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_flag("--timings", with_timings, "include per-cell timings in JSON reports");
        cmd->add_flag("--no-cap-check", no_cap_check,
                      "skip the caps+1 certification of constant terms");
    };

    auto* verify = app.add_subcommand("verify-theorem",
                                      "check the refined character formula over a window");
    add_cartan_flags(verify);
    verify->add_option("--r", r_text, "shift vector r (comma separated)")->required();
    verify->add_option("--max-n", max_n_text, "horizontal window bound")->required();
    verify->add_option("--max-d", max_d, "vertical window bound")->required();
    verify->add_option("--mode", mode_text, "exact | modular | both");
    verify->add_option("--seed", seed, "seed for modular q-points");
    verify->add_option("--primes", primes_text, "comma separated primes for modular mode");
    verify->add_option("--points", points, "q-points per prime in modular mode");
    add_common(verify);

    auto* dims = app.add_subcommand("dims", "dimension sweeps with formula verdicts");
    add_cartan_flags(dims);
    dims->add_option("--space", space, "slope-geq0 | b-subalgebra | band | word-span")->required();
    dims->add_option("--max-n", max_n_text, "horizontal window bound")->required();
    dims->add_option("--max-d", max_d, "vertical window bound");
    dims->add_option("--p", p_text, "slope vector, coordinates like \"1/2\" or \"1+1\xE2\x88\x9A"
                                    "2\"");
    dims->add_option("--p1", p1_text, "band lower slope (default -inf)");
    dims->add_option("--p2", p2_text, "band upper slope");
    dims->add_option("--letter-floor", floor_text, "per-color word letter floor (word-span)");
    add_common(dims);

    auto* pair = app.add_subcommand("pair", "evaluate one pairing exactly");
    add_cartan_flags(pair);
    pair->add_option("--word", word_text, "plus word literal \"e[i,d] ...\"")->required();
    pair->add_option("--minus", minus_text, "minus word literal \"f[i,d] ...\"");
    pair->add_option("--minus-poly", minus_poly, "minus numerator literal \"c*z[i,a]^k*...\"");
    pair->add_option("--minus-n", minus_n_text, "ambient degree of --minus-poly");
    pair->add_flag("--antipode", antipode, "pair against S(F) instead of F");
    add_common(pair);

    auto* roots_cmd = app.add_subcommand("roots", "positive roots of a finite-type datum");
    add_cartan_flags(roots_cmd);
    add_common(roots_cmd);

    auto* atable_cmd = app.add_subcommand("a-table", "a_{g,n} coefficients up to a bound");
    add_cartan_flags(atable_cmd);
    atable_cmd->add_option("--max-n", max_n_text, "bound")->required();
    add_common(atable_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        CartanData cartan = load_cartan(type_name, cartan_file);
        int rank = cartan.rank();
        QqField qq;

        if (verify->parsed()) {
            DegreeVector r = parse_int_vector(r_text, rank, "--r");
            DegreeVector n_max = parse_int_vector(max_n_text, rank, "--max-n");
            RunMode mode = parse_mode(mode_text);
            ModPolicy policy = make_policy(seed, primes_text, points);
            VerificationReport rep =
                run_verify_theorem(cartan, r, n_max, max_d, mode, policy, !no_cap_check);
            write_output(format == "csv" ? report_to_csv(rep) : report_to_json(rep, with_timings),
                         out_path);
            return rep.all_pass ? 0 : kExitMismatch;
        }

        if (dims->parsed()) {
            DegreeVector n_max = parse_int_vector(max_n_text, rank, "--max-n");
            VerificationReport rep;
            if (space == "slope-geq0") {
                rep = dims_slope_geq0(qq, cartan, n_max, max_d);
            } else if (space == "b-subalgebra") {
                require(!p_text.empty(), ErrorCode::ParseError, "--p is required");
                rep = b_dim_series(qq, cartan, parse_slope(p_text, rank), n_max);
            } else if (space == "band") {
                require(!p2_text.empty(), ErrorCode::ParseError, "--p2 is required");
                rep = band_dims(qq, cartan, parse_slope(p1_text, rank),
                                parse_slope(p2_text, rank), n_max, max_d);
            } else if (space == "word-span") {
                std::vector<int> floors = parse_int_vector(floor_text, rank, "--letter-floor");
                rep = word_span_report(qq, cartan, n_max, max_d, floors);
            } else {
                fail(ErrorCode::ParseError, "unknown --space " + space);
            }
            write_output(format == "csv" ? report_to_csv(rep) : report_to_json(rep, with_timings),
                         out_path);
            return rep.all_pass ? 0 : kExitMismatch;
        }

        if (pair->parsed()) {
            Word w = parse_word(word_text, rank);
            require(w.sign == Sign::Plus, ErrorCode::ParseError, "--word must use e letters");
            ShuffleElement<Qq> f;
            if (!minus_text.empty()) {
                Word mw = parse_word(minus_text, rank);
                require(mw.sign == Sign::Minus, ErrorCode::ParseError, "--minus must use f letters");
                f = word_to_element(qq, cartan, mw);
            } else {
                require(!minus_poly.empty() && !minus_n_text.empty(), ErrorCode::ParseError,
                        "give --minus or (--minus-poly with --minus-n)");
                DegreeVector n = parse_int_vector(minus_n_text, rank, "--minus-n");
                f.sign = Sign::Minus;
                f.hdeg = n;
                f.numer = parse_laurent(qq, VarLayout(n), minus_poly);
            }
            PairingOptions popts;
            popts.cap_check = !no_cap_check;
            Qq value = antipode ? pair_word_antipode(qq, cartan, w, f, popts)
                                : pair_word(qq, cartan, w, f, popts);
            write_output(value.to_string() + "\n", out_path);
            return 0;
        }

        if (roots_cmd->parsed()) {
            write_output(roots_to_json(positive_roots(cartan)), out_path);
            return 0;
        }

        if (atable_cmd->parsed()) {
            DegreeVector n_max = parse_int_vector(max_n_text, rank, "--max-n");
            write_output(atable_to_json(a_table(cartan, n_max)), out_path);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::CapInstability:
            case ErrorCode::AllSpecializationsBad:
                return kExitInstability;
            default:
                return kExitBadInput;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
