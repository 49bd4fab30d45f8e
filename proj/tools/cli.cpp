#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "filbert/verifier.hpp"

namespace filbert::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Flag combinations rejected before any computation.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FamilySpec make_family(const std::string& name, int r, bool r_given) {
    const Family f = family_from_name(name);
    if (family_uses_r(f)) {
        if (!r_given) throw UsageError("family \"" + name + "\" requires --r");
        if (f == Family::b && r < 1) throw UsageError("family b requires --r >= 1");
        if (f == Family::d && r < 2) throw UsageError("family d requires --r >= 2");
        return FamilySpec{f, r};
    }
    if (r_given) throw UsageError("--r applies to families b and d only");
    return FamilySpec{f, 1};
}

ordered_json rational_entries(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 1; j <= m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json poly_entries(const PolyMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 1; j <= m.cols(); ++j) row.push_back(m(i, j).coeff_strings());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string rational_csv(const RationalMatrix& m) {
    std::string out;
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            if (j > 1) out += ",";
            out += m(i, j).to_string();
        }
        out += "\n";
    }
    return out;
}

void emit(const std::string& payload, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw Error("cannot open output file \"" + output_path + "\"");
    file << payload;
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

ordered_json spec_header(const std::string& family, int n, bool r_given, int r,
                         bool variant_given, const std::string& variant) {
    ordered_json j;
    j["family"] = family;
    j["n"] = n;
    if (r_given) j["r"] = r;
    if (variant_given) j["sign_variant"] = variant;
    return j;
}

bool certificate_uses_r(CertificateId id) {
    return id == CertificateId::H_rec || id == CertificateId::T_symm || id == CertificateId::Y_tel;
}

bool certificate_uses_x(CertificateId id) {
    switch (id) {
        case CertificateId::M_zero:
        case CertificateId::filrec:
        case CertificateId::filsum:
        case CertificateId::pn1m:
        case CertificateId::G1:
        case CertificateId::G2:
        case CertificateId::G3: return true;
        default: return false;
    }
}

std::vector<long> parse_x_list(const std::string& csv) {
    std::vector<long> xs;
    std::stringstream ss(csv);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) continue;
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(piece, &pos);
        } catch (const std::exception&) {
            throw UsageError("--x expects a comma-separated list of integers");
        }
        if (pos != piece.size()) throw UsageError("--x expects a comma-separated list of integers");
        xs.push_back(v);
    }
    if (xs.empty()) throw UsageError("--x expects at least one integer");
    return xs;
}

struct Args {
    std::string family;
    int n = 1;
    int n_max = 0;
    int r = 0;
    bool r_given = false;
    int r_max = 0;
    std::string method = "closed";
    std::string sign_variant = "variant_j";
    bool sign_variant_given = false;
    std::string x;  // one integer for gen/inv, a comma list for certify
    bool x_given = false;
    std::string format = "json";
    std::string output;
    std::string conjecture;
    std::string cert = "all";
};

long parse_single_x(const std::string& s) {
    const auto xs = parse_x_list(s);
    if (xs.size() != 1) throw UsageError("--x takes a single integer here");
    return xs.front();
}

int run_gen(const Args& a, std::ostream& out) {
    const FamilySpec fam = make_family(a.family, a.r, a.r_given);
    RationalMatrix m;
    long x = 0;
    if (fam.family == Family::fibpoly) {
        if (!a.x_given) {
            throw UsageError("gen --family fibpoly needs --x (its entries are rational functions)");
        }
        x = parse_single_x(a.x);
        if (x < 1) throw UsageError("--x must be >= 1 for fibpoly matrices");
        m = build_fibpoly_hankel_at(a.n, Integer(x));
    } else {
        if (a.x_given) throw UsageError("--x applies to the fibpoly family only");
        m = build_reciprocal_hankel(fam, a.n);
    }
    if (a.format == "csv") {
        emit(rational_csv(m), a.output, out);
        return 0;
    }
    ordered_json j = spec_header(a.family, a.n, a.r_given, a.r, false, "");
    if (a.x_given) j["x"] = x;
    j["entries"] = rational_entries(m);
    emit(dump(j), a.output, out);
    return 0;
}

int run_inv(const Args& a, std::ostream& out) {
    const FamilySpec fam = make_family(a.family, a.r, a.r_given);
    if (a.sign_variant_given && fam.family != Family::d) {
        throw UsageError("--sign-variant applies to family d only");
    }
    const SignVariant variant = sign_variant_from_name(a.sign_variant);

    ordered_json j = spec_header(a.family, a.n, a.r_given, a.r,
                                 fam.family == Family::d, a.sign_variant);
    j["method"] = a.method;

    if (fam.family == Family::fibpoly) {
        long x = 0;
        if (a.x_given) {
            x = parse_single_x(a.x);
            if (x < 1) throw UsageError("--x must be >= 1 for fibpoly matrices");
        }
        if (a.method == "closed" && !a.x_given) {
            if (a.format == "csv") {
                throw UsageError("CSV is restricted to numeric matrices; fibpoly entries need JSON");
            }
            j["entries"] = poly_entries(assemble_poly_inverse(a.n));
            emit(dump(j), a.output, out);
            return 0;
        }
        RationalMatrix m;
        if (a.method == "closed") {
            const PolyMatrix v = assemble_poly_inverse(a.n);
            m = RationalMatrix(a.n, a.n);
            const Integer xv(x);
            for (int i = 1; i <= a.n; ++i)
                for (int jj = 1; jj <= a.n; ++jj) m(i, jj) = Rational(v(i, jj).eval(xv));
        } else {
            if (!a.x_given) throw UsageError("inv --family fibpoly --method bareiss needs --x");
            m = bareiss_inverse(build_fibpoly_hankel_at(a.n, Integer(x)));
        }
        j["x"] = x;
        if (a.format == "csv") {
            emit(rational_csv(m), a.output, out);
            return 0;
        }
        j["entries"] = rational_entries(m);
        emit(dump(j), a.output, out);
        return 0;
    }

    if (a.x_given) throw UsageError("--x applies to the fibpoly family only");
    const MatrixSpec spec{fam, a.n, variant};
    const RationalMatrix m = a.method == "closed"
                                 ? assemble_inverse(spec)
                                 : bareiss_inverse(build_reciprocal_hankel(fam, a.n));
    if (a.format == "csv") {
        emit(rational_csv(m), a.output, out);
        return 0;
    }
    j["entries"] = rational_entries(m);
    emit(dump(j), a.output, out);
    return 0;
}

int run_verify(const Args& a, std::ostream& out) {
    const FamilySpec fam = make_family(a.family, a.r, a.r_given);
    if (a.sign_variant_given && fam.family != Family::d) {
        throw UsageError("--sign-variant applies to family d only");
    }
    if (a.format == "csv") throw UsageError("verify reports are JSON only");
    const MatrixSpec spec{fam, a.n, sign_variant_from_name(a.sign_variant)};
    const VerificationReport rep = verify_inverse(spec);
    ordered_json j = spec_header(a.family, a.n, a.r_given, a.r,
                                 fam.family == Family::d, a.sign_variant);
    j["identity_holds"] = rep.identity_holds;
    if (rep.first_failure) {
        j["first_failure"] = {{"i", rep.first_failure->i},
                              {"m", rep.first_failure->m},
                              {"value", rep.first_failure->value}};
    }
    j["elapsed_ms"] = rep.elapsed.count();
    emit(dump(j), a.output, out);
    return rep.identity_holds ? 0 : 1;
}

int run_scan(const Args& a, std::ostream& out) {
    if (a.conjecture == "integrality") {
        if (a.sign_variant_given) {
            throw UsageError("--sign-variant applies to the fibonomial scan only");
        }
        const auto rows = integrality_scan(a.n_max, a.r_max);
        bool all_agree = true, all_divide = true;
        for (const auto& row : rows) {
            if (!row.agrees) all_agree = false;
            if (!row.denominators_divide_r) all_divide = false;
        }
        if (a.format == "csv") {
            std::string csv =
                "n,r,is_integral,max_denominator,predicted_integral,agrees,denominators_divide_r\n";
            for (const auto& row : rows) {
                csv += std::to_string(row.n) + "," + std::to_string(row.r) + "," +
                       (row.is_integral ? "true" : "false") + "," + row.max_denominator.to_string() +
                       "," + (row.predicted_integral ? "true" : "false") + "," +
                       (row.agrees ? "true" : "false") + "," +
                       (row.denominators_divide_r ? "true" : "false") + "\n";
            }
            emit(csv, a.output, out);
        } else {
            ordered_json j;
            j["conjecture"] = "integrality";
            j["n_max"] = a.n_max;
            j["r_max"] = a.r_max;
            ordered_json jrows = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json jr;
                jr["n"] = row.n;
                jr["r"] = row.r;
                jr["is_integral"] = row.is_integral;
                jr["max_denominator"] = row.max_denominator.to_string();
                jr["predicted_integral"] = row.predicted_integral;
                jr["agrees"] = row.agrees;
                jr["denominators_divide_r"] = row.denominators_divide_r;
                jrows.push_back(std::move(jr));
            }
            j["rows"] = std::move(jrows);
            j["all_agree"] = all_agree;
            j["all_denominators_divide_r"] = all_divide;
            emit(dump(j), a.output, out);
        }
        return (all_agree && all_divide) ? 0 : 1;
    }

    // fibonomial
    if (a.r_max < 2) throw UsageError("the fibonomial scan needs --r-max >= 2");
    const SignVariant variant = sign_variant_from_name(a.sign_variant);
    const auto rows = fibonomial_scan(a.n_max, a.r_max, variant);
    bool all_match = true;
    for (const auto& row : rows)
        if (!row.formula_matches) all_match = false;
    if (a.format == "csv") {
        std::string csv =
            "n,r,sign_variant,formula_matches,first_mismatch_i,first_mismatch_j,d_integral,"
            "b_integral,integrality_agrees\n";
        for (const auto& row : rows) {
            csv += std::to_string(row.n) + "," + std::to_string(row.r) + "," +
                   sign_variant_name(row.sign_variant) + "," +
                   (row.formula_matches ? "true" : "false") + ",";
            if (row.first_mismatch) {
                csv += std::to_string(row.first_mismatch->first) + "," +
                       std::to_string(row.first_mismatch->second);
            } else {
                csv += ",";
            }
            csv += std::string(",") + (row.d_integral ? "true" : "false") + "," +
                   (row.b_integral ? "true" : "false") + "," +
                   (row.integrality_agrees ? "true" : "false") + "\n";
        }
        emit(csv, a.output, out);
    } else {
        ordered_json j;
        j["conjecture"] = "fibonomial";
        j["n_max"] = a.n_max;
        j["r_max"] = a.r_max;
        j["sign_variant"] = a.sign_variant;
        ordered_json jrows = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json jr;
            jr["n"] = row.n;
            jr["r"] = row.r;
            jr["formula_matches"] = row.formula_matches;
            if (row.first_mismatch) {
                jr["first_mismatch"] = {row.first_mismatch->first, row.first_mismatch->second};
            }
            jr["d_integral"] = row.d_integral;
            jr["b_integral"] = row.b_integral;
            jr["integrality_agrees"] = row.integrality_agrees;
            jrows.push_back(std::move(jr));
        }
        j["rows"] = std::move(jrows);
        j["all_match"] = all_match;
        emit(dump(j), a.output, out);
    }
    return all_match ? 0 : 1;
}

int run_certify(const Args& a, std::ostream& out) {
    if (a.format == "csv") throw UsageError("certify reports are JSON only");
    std::vector<CertificateId> ids;
    if (a.cert == "all") {
        ids = all_certificates();
    } else {
        ids.push_back(certificate_from_name(a.cert));
    }
    const std::vector<long> xs = parse_x_list(a.x_given ? a.x : "1,2,3");

    bool all_hold = true;
    ordered_json list = ordered_json::array();
    for (CertificateId id : ids) {
        CertGrid grid = default_grid(id);
        if (a.n_max > 0) grid.n_max = a.n_max;
        if (a.r_max > 0) grid.r_max = a.r_max;
        const CertReport rep =
            check_certificate(id, grid, certificate_uses_x(id) ? xs : std::vector<long>{});
        if (!rep.holds()) all_hold = false;
        ordered_json jc;
        jc["id"] = certificate_name(id);
        jc["n_min"] = rep.grid.n_min;
        jc["n_max"] = rep.grid.n_max;
        if (certificate_uses_r(id)) {
            jc["r_min"] = rep.grid.r_min;
            jc["r_max"] = rep.grid.r_max;
        }
        if (certificate_uses_x(id)) jc["x_values"] = rep.x_values;
        jc["evaluations"] = rep.evaluations;
        jc["holds"] = rep.holds();
        jc["violation_count"] = rep.violation_count;
        ordered_json jv = ordered_json::array();
        for (const auto& v : rep.violations) {
            ordered_json one;
            one["identity"] = v.identity;
            ordered_json pt;
            for (const auto& [name, value] : v.point) pt[name] = value;
            one["point"] = std::move(pt);
            one["residual"] = v.residual;
            jv.push_back(std::move(one));
        }
        jc["violations"] = std::move(jv);
        jc["notes"] = rep.notes;
        list.push_back(std::move(jc));
    }
    ordered_json j;
    j["certificates"] = std::move(list);
    j["all_hold"] = all_hold;
    emit(dump(j), a.output, out);
    return all_hold ? 0 : 1;
}

int run_bench(const Args& a, std::ostream& out) {
    if (a.format == "csv") throw UsageError("bench reports are JSON only");
    const FamilySpec fam = make_family(a.family, a.r, a.r_given);
    if (fam.family == Family::fibpoly) throw UsageError("bench supports numeric families only");
    if (a.sign_variant_given && fam.family != Family::d) {
        throw UsageError("--sign-variant applies to family d only");
    }
    const MatrixSpec spec{fam, a.n, sign_variant_from_name(a.sign_variant)};

    const auto t0 = std::chrono::steady_clock::now();
    const RationalMatrix closed = assemble_inverse(spec);
    const auto t1 = std::chrono::steady_clock::now();
    const RationalMatrix oracle = bareiss_inverse(build_reciprocal_hankel(fam, a.n));
    const auto t2 = std::chrono::steady_clock::now();

    const bool equal = closed == oracle;
    ordered_json j = spec_header(a.family, a.n, a.r_given, a.r,
                                 fam.family == Family::d, a.sign_variant);
    j["closed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    j["bareiss_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t2 - t1).count();
    j["equal"] = equal;
    emit(dump(j), a.output, out);
    return equal ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact reciprocal Hankel matrices, their closed-form inverses, and the checks "
                 "that tie them together"};
    app.require_subcommand(1);
    Args a;

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", a.family, "fibonacci|fibpoly|hilbert|a|b|c|d")->required();
    };
    auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("--n", a.n, "matrix size")->required()->check(CLI::PositiveNumber);
    };
    auto add_r = [&](CLI::App* cmd) {
        cmd->add_option("--r", a.r, "parameter r (families b and d)")
            ->each([&](const std::string&) { a.r_given = true; });
    };
    auto add_variant = [&](CLI::App* cmd) {
        cmd->add_option("--sign-variant", a.sign_variant, "printed_k|variant_j|corrected (family d)")
            ->check(CLI::IsMember({"printed_k", "variant_j", "corrected"}))
            ->each([&](const std::string&) { a.sign_variant_given = true; });
    };
    auto add_x = [&](CLI::App* cmd, const char* help) {
        cmd->add_option("--x", a.x, help)->each([&](const std::string&) { a.x_given = true; });
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", a.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", a.output, "write to this file instead of stdout");
    };

    CLI::App* gen = app.add_subcommand("gen", "emit a reciprocal Hankel matrix");
    add_family(gen);
    add_n(gen);
    add_r(gen);
    add_x(gen, "evaluation point for fibpoly entries");
    add_format(gen);
    add_output(gen);

    CLI::App* inv = app.add_subcommand("inv", "emit an inverse matrix");
    add_family(inv);
    add_n(inv);
    add_r(inv);
    inv->add_option("--method", a.method, "closed|bareiss")
        ->check(CLI::IsMember({"closed", "bareiss"}));
    add_variant(inv);
    add_x(inv, "evaluation point for fibpoly entries");
    add_format(inv);
    add_output(inv);

    CLI::App* verify = app.add_subcommand("verify", "check a closed-form inverse exactly");
    add_family(verify);
    add_n(verify);
    add_r(verify);
    add_variant(verify);
    add_format(verify);
    add_output(verify);

    CLI::App* scan = app.add_subcommand("scan", "run a conjecture scan");
    scan->add_option("--conjecture", a.conjecture, "integrality|fibonomial")
        ->required()
        ->check(CLI::IsMember({"integrality", "fibonomial"}));
    scan->add_option("--n-max", a.n_max, "largest matrix size")
        ->required()
        ->check(CLI::PositiveNumber);
    scan->add_option("--r-max", a.r_max, "largest r")->required()->check(CLI::PositiveNumber);
    add_variant(scan);
    add_format(scan);
    add_output(scan);

    CLI::App* certify = app.add_subcommand("certify", "check proof certificates on exact grids");
    certify->add_option("--id", a.cert, "certificate id or \"all\"");
    certify->add_option("--n-max", a.n_max, "override the default n range")
        ->check(CLI::PositiveNumber);
    certify->add_option("--r-max", a.r_max, "override the default r range")
        ->check(CLI::PositiveNumber);
    add_x(certify, "comma-separated evaluation points (default 1,2,3)");
    add_format(certify);
    add_output(certify);

    CLI::App* bench = app.add_subcommand("bench", "time closed-form assembly against Bareiss");
    add_family(bench);
    add_n(bench);
    add_r(bench);
    add_variant(bench);
    add_format(bench);
    add_output(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(a, out);
        if (inv->parsed()) return run_inv(a, out);
        if (verify->parsed()) return run_verify(a, out);
        if (scan->parsed()) return run_scan(a, out);
        if (certify->parsed()) return run_certify(a, out);
        if (bench->parsed()) return run_bench(a, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n\n" << app.help();
    return 2;
}

}  // namespace filbert::cli
