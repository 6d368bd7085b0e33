// hullmass: command-line front end for exact hull-dimension counting,
// censuses, classification, and the constructive procedures.
//
// Conventions: --q is always the base parameter (Hermitian codes live over
// GF(q^2), symplectic codes over GF(q)); --n is the Hermitian length or the
// symplectic half-length (so symplectic codes have length 2n).
//
// Exit codes: 0 success; 1 usage/input error; 2 a verification subcommand
// found a formula/census mismatch.

#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hullmass/census.hpp"
#include "hullmass/code.hpp"
#include "hullmass/field.hpp"
#include "hullmass/formulas.hpp"
#include "hullmass/io.hpp"

using json = nlohmann::ordered_json;
using namespace hullmass;

namespace {

constexpr int kExitMismatch = 2;

Inner parse_inner(const std::string& s) {
    return s == "hermitian" ? Inner::hermitian : Inner::symplectic;
}

// Builds a field resolver honoring an optional --modulus override
// (comma-separated little-endian coefficients, constant term first).
io::FieldResolver make_resolver(const std::string& modulus_csv) {
    if (modulus_csv.empty()) return nullptr;
    return [modulus_csv](unsigned order) -> const Field& {
        static std::vector<std::unique_ptr<Field>> owned;
        std::vector<unsigned> coeffs;
        std::stringstream ss(modulus_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoul(tok));
        unsigned p = 2;
        while (order % p != 0) ++p;
        unsigned e = 0;
        for (unsigned v = order; v > 1; v /= p) ++e;
        owned.push_back(std::make_unique<Field>(p, e, std::move(coeffs)));
        return *owned.back();
    };
}

std::string real_str(const Real& x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::vector<std::string> matrix_rows(const Matrix& m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) row += ' ';
            row += std::to_string(m.at(i, j));
        }
        out.push_back(std::move(row));
    }
    return out;
}

void print_matrix(std::ostream& os, const Matrix& m) {
    for (const std::string& row : matrix_rows(m)) os << row << "\n";
}

struct Options {
    std::string format = "text";
    std::string modulus;
};

json query_json(const std::string& inner, unsigned q, unsigned n, unsigned k) {
    return json{{"inner", inner}, {"q", q}, {"n", n}, {"k", k}};
}

int run_mass(const Options& opt, const std::string& inner_s, unsigned q, unsigned n,
             unsigned k, unsigned ell) {
    formulas::CountReport r = formulas::hull_mass({parse_inner(inner_s), q, n, k, ell});
    if (opt.format == "json") {
        json out;
        out["query"] = query_json(inner_s, q, n, k);
        out["query"]["ell"] = ell;
        out["count"] = r.count.str();
        out["formula_id"] = r.formula_id;
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "inner,q,n,k,ell,count,formula_id\n"
                  << inner_s << ',' << q << ',' << n << ',' << k << ',' << ell << ','
                  << r.count.str() << ',' << r.formula_id << "\n";
    } else {
        std::cout << r.count.str() << "\n";
    }
    return 0;
}

int run_census(const Options& opt, const std::string& inner_s, unsigned q, unsigned n,
               unsigned k) {
    Inner inner = parse_inner(inner_s);
    std::size_t length = inner == Inner::hermitian ? n : 2 * n;
    census::CensusReport rep = census::hull_census(inner, q, length, k);
    if (opt.format == "json") {
        json out;
        out["query"] = query_json(inner_s, q, n, k);
        out["rows"] = json::array();
        for (const auto& [ell, count] : rep.counts) {
            BigInt formula = formulas::hull_mass(
                                 {inner, q, n, static_cast<unsigned>(k),
                                  static_cast<unsigned>(ell)})
                                 .count;
            out["rows"].push_back({{"ell", ell},
                                   {"enumerated", count.str()},
                                   {"formula", formula.str()},
                                   {"match", rep.formula_match.at(ell)}});
        }
        out["total"] = rep.total.str();
        out["all_match"] = rep.all_match();
        std::cout << out.dump(2) << "\n";
    } else {
        std::ostream& os = std::cout;
        if (opt.format == "csv")
            os << "ell,enumerated,formula,match\n";
        else
            os << "ell enumerated formula match\n";
        char sep = opt.format == "csv" ? ',' : ' ';
        for (const auto& [ell, count] : rep.counts) {
            BigInt formula = formulas::hull_mass({inner, q, n, static_cast<unsigned>(k),
                                                  static_cast<unsigned>(ell)})
                                 .count;
            os << ell << sep << count.str() << sep << formula.str() << sep
               << (rep.formula_match.at(ell) ? "match" : "MISMATCH") << "\n";
        }
        if (opt.format == "text")
            os << "total " << rep.total.str() << (rep.all_match() ? "" : "  (MISMATCH)")
               << "\n";
    }
    return rep.all_match() ? 0 : kExitMismatch;
}

int run_classify(const Options& opt, const std::string& inner_s, unsigned q, unsigned n,
                 unsigned k, unsigned ell) {
    Inner inner = parse_inner(inner_s);
    std::size_t length = inner == Inner::hermitian ? n : 2 * n;
    census::ClassificationReport rep = census::classify(inner, q, length, k, ell);
    if (opt.format == "json") {
        json out;
        out["classes"] = json::array();
        for (const auto& c : rep.classes)
            out["classes"].push_back({{"generator", matrix_rows(c.representative.generator())},
                                      {"aut_order", c.aut_order},
                                      {"class_size", c.class_size}});
        out["mass_lhs"] = rep.mass_lhs.str();
        out["mass_rhs"] = rep.mass_rhs.str();
        out["match"] = rep.match;
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "generator,aut_order,class_size\n";
        for (const auto& c : rep.classes) {
            std::string g;
            for (const std::string& row : matrix_rows(c.representative.generator())) {
                if (!g.empty()) g += "; ";
                g += row;
            }
            std::cout << '"' << g << "\"," << c.aut_order << ',' << c.class_size << "\n";
        }
    } else {
        std::cout << rep.classes.size() << " classes\n";
        for (std::size_t i = 0; i < rep.classes.size(); ++i) {
            const auto& c = rep.classes[i];
            std::cout << "class " << i + 1 << ": aut_order=" << c.aut_order
                      << " class_size=" << c.class_size << "\n";
            print_matrix(std::cout, c.representative.generator());
        }
        std::cout << "mass identity: " << rep.mass_lhs.str() << " = " << rep.mass_rhs.str()
                  << (rep.match ? " (match)" : " (MISMATCH)") << "\n";
    }
    return rep.match ? 0 : kExitMismatch;
}

int run_analyze(const Options& opt, const std::string& inner_s, const std::string& path) {
    Inner inner = parse_inner(inner_s);
    LinearCode c = io::load_code_file(path, make_resolver(opt.modulus));
    LinearCode::HullReport h = c.hull(inner);
    if (opt.format == "json") {
        json out;
        out["q"] = c.field().order();
        out["n"] = c.length();
        out["k"] = c.dim();
        out["inner"] = inner_s;
        out["hull_dim"] = h.hull_dim;
        out["is_lcd"] = h.hull_dim == 0;
        out["is_self_orthogonal"] = h.hull_dim == c.dim();
        out["hull_basis"] = matrix_rows(h.hull_basis);
        out["generator"] = matrix_rows(c.generator());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "q=" << c.field().order() << " n=" << c.length() << " k=" << c.dim()
                  << " inner=" << inner_s << "\n"
                  << "hull_dim " << h.hull_dim << "\n"
                  << "lcd " << (h.hull_dim == 0 ? "yes" : "no") << "\n"
                  << "self_orthogonal " << (h.hull_dim == c.dim() ? "yes" : "no") << "\n";
        if (h.hull_dim > 0) {
            std::cout << "hull basis:\n";
            print_matrix(std::cout, h.hull_basis);
        }
    }
    return 0;
}

int run_basis(const Options& opt, const std::string& inner_s, const std::string& path) {
    Inner inner = parse_inner(inner_s);
    LinearCode c = io::load_code_file(path, make_resolver(opt.modulus));
    Matrix b = inner == Inner::hermitian ? c.hermitian_normal_form() : c.symplectic_basis();
    if (opt.format == "json") {
        json out;
        out["q"] = c.field().order();
        out["n"] = c.length();
        out["k"] = c.dim();
        out["basis"] = matrix_rows(b);
        std::cout << out.dump(2) << "\n";
    } else {
        io::save_code(std::cout, b);
    }
    return 0;
}

int run_transporter(const Options& opt, const std::string& inner_s, const std::string& from,
                    const std::string& to) {
    Inner inner = parse_inner(inner_s);
    io::FieldResolver resolver = make_resolver(opt.modulus);
    LinearCode c1 = io::load_code_file(from, resolver);
    LinearCode c2 = io::load_code_file(to, resolver);
    Matrix q = LinearCode::transporter(c1, c2, inner);
    if (opt.format == "json") {
        json out;
        out["q"] = c1.field().order();
        out["rows"] = matrix_rows(q);
        std::cout << out.dump(2) << "\n";
    } else {
        print_matrix(std::cout, q);
    }
    return 0;
}

int run_limits(const Options& opt, const std::string& inner_s, unsigned q, unsigned ell,
               unsigned n, unsigned k, double tol) {
    Inner inner = parse_inner(inner_s);
    Real limit = formulas::limit_density(inner, q, ell, Real(tol));
    BigInt mass = formulas::hull_mass({inner, q, n, k, ell}).count;
    unsigned length = inner == Inner::hermitian ? n : 2 * n;
    unsigned order = inner == Inner::hermitian ? q * q : q;
    BigInt total = formulas::gaussian_binomial(length, k, order);
    Real ratio = mass.convert_to<Real>() / total.convert_to<Real>();
    Real diff = limit > ratio ? limit - ratio : ratio - limit;
    if (opt.format == "json") {
        json out;
        out["query"] = query_json(inner_s, q, n, k);
        out["query"]["ell"] = ell;
        out["limit"] = real_str(limit);
        out["finite_ratio"] = real_str(ratio);
        out["difference"] = real_str(diff);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "limit          " << real_str(limit) << "\n"
                  << "ratio at n=" << n << ",k=" << k << "  " << real_str(ratio) << "\n"
                  << "difference     " << real_str(diff) << "\n";
    }
    return 0;
}

int run_jacobi(const Options& opt, unsigned q, unsigned n) {
    formulas::JacobiCheck c = formulas::jacobi_sum_check(q, n);
    bool ok = c.lhs_zero_sum == c.rhs_zero && c.lhs_one_sum == c.rhs_one;
    if (opt.format == "json") {
        json out;
        out["q"] = q;
        out["n"] = n;
        out["lhs_zero_sum"] = c.lhs_zero_sum.str();
        out["rhs_zero"] = c.rhs_zero.str();
        out["lhs_one_sum"] = c.lhs_one_sum.str();
        out["rhs_one"] = c.rhs_one.str();
        out["match"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "a=0: character sum " << c.lhs_zero_sum.str() << ", closed form "
                  << c.rhs_zero.str() << "\n"
                  << "a=1: character sum " << c.lhs_one_sum.str() << ", closed form "
                  << c.rhs_one.str() << "\n"
                  << (ok ? "match" : "MISMATCH") << "\n";
    }
    return ok ? 0 : kExitMismatch;
}

int run_group(const Options& opt, const std::string& kind_s, unsigned n, unsigned q) {
    auto kind = kind_s == "unitary" ? formulas::GroupKind::unitary
                                    : formulas::GroupKind::symplectic;
    BigInt enumerated = 0;
    census::for_each_group_element(kind, n, q, [&](const Matrix&) { enumerated += 1; });
    BigInt formula = formulas::group_order(kind, n, q);
    bool ok = enumerated == formula;
    if (opt.format == "json") {
        json out;
        out["kind"] = kind_s;
        out["n"] = n;
        out["q"] = q;
        out["enumerated"] = enumerated.str();
        out["formula"] = formula.str();
        out["match"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "enumerated " << enumerated.str() << "\nformula    " << formula.str()
                  << "\n"
                  << (ok ? "match" : "MISMATCH") << "\n";
    }
    return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mass formulas, censuses and constructive procedures for linear "
                 "codes with prescribed Hermitian or symplectic hull dimension"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--modulus", opt.modulus,
                   "Override field modulus: comma-separated little-endian coefficients");

    std::string inner = "hermitian", kind = "unitary", file, from, to;
    unsigned q = 2, n = 2, k = 1, ell = 0;
    double tol = 1e-9;
    auto inner_check = CLI::IsMember({"hermitian", "symplectic"});

    auto* mass = app.add_subcommand("mass", "Evaluate the closed-form hull count");
    mass->add_option("--inner", inner)->required()->check(inner_check);
    mass->add_option("--q", q, "Base prime power")->required();
    mass->add_option("--n", n, "Length (hermitian) or half-length (symplectic)")->required();
    mass->add_option("--k", k, "Dimension")->required();
    mass->add_option("--ell", ell, "Hull dimension")->required();

    auto* cen = app.add_subcommand("census", "Enumerate all codes and compare to formulas");
    cen->add_option("--inner", inner)->required()->check(inner_check);
    cen->add_option("--q", q)->required();
    cen->add_option("--n", n)->required();
    cen->add_option("--k", k)->required();

    auto* cls = app.add_subcommand("classify",
                                   "Permutation-equivalence classes and the mass identity");
    cls->add_option("--inner", inner)->required()->check(inner_check);
    cls->add_option("--q", q)->required();
    cls->add_option("--n", n)->required();
    cls->add_option("--k", k)->required();
    cls->add_option("--ell", ell)->required();

    auto* ana = app.add_subcommand("analyze", "Hull report for a generator-matrix file");
    ana->add_option("--inner", inner)->required()->check(inner_check);
    ana->add_option("--file", file)->required();

    auto* bas = app.add_subcommand("basis",
                                   "Normal-form generator (hermitian) or symplectic basis");
    bas->add_option("--inner", inner)->required()->check(inner_check);
    bas->add_option("--file", file)->required();

    auto* tra = app.add_subcommand("transporter",
                                   "Form-preserving matrix mapping one LCD code to another");
    tra->add_option("--inner", inner)->required()->check(inner_check);
    tra->add_option("--from", from)->required();
    tra->add_option("--to", to)->required();

    auto* lim = app.add_subcommand("limits", "Asymptotic density vs a finite-size ratio");
    lim->add_option("--inner", inner)->required()->check(inner_check);
    lim->add_option("--q", q)->required();
    lim->add_option("--ell", ell)->required();
    lim->add_option("--n", n, "Finite size for the comparison ratio")->capture_default_str();
    lim->add_option("--k", k)->capture_default_str();
    lim->add_option("--tol", tol)->capture_default_str();

    auto* jac = app.add_subcommand("jacobi", "Verify the character-sum identities");
    jac->add_option("--q", q)->required();
    jac->add_option("--n", n)->required();

    auto* grp = app.add_subcommand("group", "Enumerate a matrix group and check its order");
    grp->add_option("--kind", kind)->required()->check(CLI::IsMember({"unitary", "symplectic"}));
    grp->add_option("--n", n)->required();
    grp->add_option("--q", q)->required();

    // let --format/--modulus appear after the subcommand name too
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (mass->parsed()) return run_mass(opt, inner, q, n, k, ell);
        if (cen->parsed()) return run_census(opt, inner, q, n, k);
        if (cls->parsed()) return run_classify(opt, inner, q, n, k, ell);
        if (ana->parsed()) return run_analyze(opt, inner, file);
        if (bas->parsed()) return run_basis(opt, inner, file);
        if (tra->parsed()) return run_transporter(opt, inner, from, to);
        if (lim->parsed()) return run_limits(opt, inner, q, ell, n, k, tol);
        if (jac->parsed()) return run_jacobi(opt, q, n);
        if (grp->parsed()) return run_group(opt, kind, n, q);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
