/*
 * Command-line front end: `verify` drives the property sweeps, `basis` builds
 * and certifies one candidate basis, `show` prints a single object. Text by
 * default, JSON with --json; exit status 0 exactly when everything checked
 * passed. QAFFINE_THREADS caps sweep workers.
 */

#include <qaffine/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

using nlohmann::json;
using namespace qaffine;

namespace {

mpq_class parse_rational(const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "' (expected p or p/r)");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    if (r == 0)
        throw std::invalid_argument("specialization values must be nonzero (got '" + text + "')");
    return r;
}

Normalization parse_norm(const std::string& name) {
    return name == "paper" ? Normalization::Product : Normalization::Unit;
}

std::string elem_text(const TensorElem& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [ij, c] : v.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_canonical_string(c) + ") v" + std::to_string(ij.first) + "(x)w" +
               std::to_string(ij.second);
    }
    return out;
}

json elem_json(const TensorElem& v) {
    json terms = json::array();
    for (const auto& [ij, c] : v.terms())
        terms.push_back({{"i", ij.first}, {"j", ij.second}, {"coeff", to_canonical_string(c)}});
    return terms;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyConfig {
    std::string scope;
    std::optional<std::int64_t> max_m, max_n;
    mpq_class q0 = 2, x0 = 3, y0 = 5;
    std::uint64_t seed = 20260815;
    bool as_json = false;
};

int run_verify(const VerifyConfig& cfg) {
    auto mm = [&](std::int64_t d) { return cfg.max_m.value_or(d); };
    auto mn = [&](std::int64_t d) { return cfg.max_n.value_or(d); };
    const bool all = cfg.scope == "all";

    std::vector<std::function<bool(const CheckSink&)>> checks;
    if (all || cfg.scope == "identities") {
        checks.push_back([&](const CheckSink& s) { return verify_factorial_identity(mm(20), s); });
        checks.push_back([&](const CheckSink& s) {
            return verify_classical_limit(mm(30), std::min<std::int64_t>(12, mm(30)), s);
        });
    }
    if (all || cfg.scope == "relations")
        checks.push_back(
            [&](const CheckSink& s) { return verify_defining_relations(mm(3), mn(3), s); });
    if (all || cfg.scope == "alpha") {
        checks.push_back([&](const CheckSink& s) { return verify_extremal_vectors(mm(5), s); });
        checks.push_back(
            [&](const CheckSink& s) { return verify_coproduct_powers(mm(4), mn(4), s); });
        checks.push_back([&](const CheckSink& s) { return verify_alpha_routes(mm(5), s); });
    }
    if (all || cfg.scope == "lemmas") {
        checks.push_back([&](const CheckSink& s) { return verify_lowering_lemmas(mm(5), s); });
        checks.push_back([&](const CheckSink& s) { return verify_sum_lemmas(12, 10, 10, s); });
    }
    if (all || cfg.scope == "determinant") {
        checks.push_back([&](const CheckSink& s) { return verify_determinants(mm(5), s); });
        checks.push_back([&](const CheckSink& s) {
            return verify_bases(mm(4), s, cfg.q0, cfg.x0, cfg.y0);
        });
    }
    if (all)
        checks.push_back(
            [&](const CheckSink& s) { return verify_scalar_properties(cfg.seed, 1000, s); });

    json records = json::array();
    std::size_t total = 0, failed = 0;
    CheckSink sink = [&](const CheckResult& r) {
        ++total;
        if (!r.pass) ++failed;
        if (cfg.as_json) {
            records.push_back({{"label", r.label}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
            std::cout << (r.pass ? "   ok " : " FAIL ") << r.label;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
        }
    };

    bool pass = true;
    for (const auto& check : checks) pass = check(sink) && pass;

    if (cfg.as_json) {
        json doc{{"command", "verify"},
                 {"scope", cfg.scope},
                 {"all_pass", pass},
                 {"checks_run", total},
                 {"checks_failed", failed},
                 {"checks", std::move(records)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        if (pass)
            std::cout << "all " << total << " checks passed\n";
        else
            std::cout << failed << " of " << total << " checks failed\n";
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// basis
// ---------------------------------------------------------------------------

int run_basis(std::int64_t m, std::int64_t n, const mpq_class& q0, const mpq_class& x0,
              const mpq_class& y0, bool dual, bool symbolic, const std::string& norm,
              bool as_json) {
    TensorModule M = TensorModule::symbolic(m, n);
    BasisReport r = symbolic ? certify_basis_symbolic(M, dual, parse_norm(norm))
                             : certify_basis(M, q0, x0, y0, dual, parse_norm(norm));
    const bool is_basis = r.rank == r.expected_rank;

    if (as_json) {
        json doc{{"m", m},
                 {"n", n},
                 {"family", dual ? "lambda" : "delta"},
                 {"dual", dual},
                 {"normalization", norm},
                 {"symbolic", symbolic},
                 {"criterion_pass", r.criterion_pass},
                 {"failing_j", r.failing_j},
                 {"rank", r.rank},
                 {"expected_rank", r.expected_rank},
                 {"basis", is_basis}};
        if (!symbolic) {
            doc["q"] = q0.get_str();
            doc["x"] = x0.get_str();
            doc["y"] = y0.get_str();
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "family: " << (dual ? "lambda (raising ladders)" : "delta (lowering ladders)")
                  << "\nnormalization: " << norm << "\n";
        if (symbolic)
            std::cout << "point: symbolic (rational function field)\n";
        else
            std::cout << "point: q = " << q0 << ", x = " << x0 << ", y = " << y0 << "\n";
        if (r.criterion_pass) {
            std::cout << "criterion: pass\n";
        } else {
            std::cout << "criterion: fail at";
            for (std::int64_t j : r.failing_j) {
                std::int64_t k = dual ? m + n - 2 * j : -(m + n) + 2 * j;
                std::cout << " j = " << j << " (y = x*q^" << k << ")";
            }
            std::cout << "\n";
        }
        std::cout << "rank: " << r.rank << " / " << r.expected_rank << "\n"
                  << "basis: " << (is_basis ? "yes" : "no") << "\n";
    }
    return is_basis && r.criterion_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// show
// ---------------------------------------------------------------------------

int show_vector(const std::string& object, std::int64_t m, std::int64_t n, std::int64_t l,
                const std::string& norm, bool as_json) {
    TensorModule M = TensorModule::symbolic(m, n);
    const ProductBound pb = norm == "paper" ? ProductBound::FromZero : ProductBound::FromOne;
    const TensorElem v = object == "omega" ? omega(M, l, pb) : phi_low(M, l, pb);
    const bool degenerate = v.is_zero();

    if (as_json) {
        json doc{{"object", object}, {"m", m},
                 {"n", n},           {"l", l},
                 {"normalization", norm}, {"degenerate", degenerate},
                 {"terms", elem_json(v)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << object << " m=" << m << " n=" << n << " l=" << l << " (" << norm
                  << " normalization)\n";
        if (degenerate)
            std::cout << "warning: the closed-form coefficients vanish here; "
                         "--norm unit gives the unit-leading variant\n";
        std::cout << elem_text(v) << "\n";
    }
    return 0;
}

int show_alpha(std::int64_t m, std::int64_t n, std::int64_t l, bool as_json) {
    Scalar a = alpha_closed(m, n, l);
    if (as_json) {
        json doc{{"object", "alpha"}, {"m", m}, {"n", n}, {"l", l},
                 {"value", to_canonical_string(a)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << to_canonical_string(a) << "\n";
    }
    return 0;
}

int show_matrix(std::int64_t m, std::int64_t n, std::int64_t l, const std::string& norm) {
    TensorModule M = TensorModule::symbolic(m, n);
    CoeffMatrix cm = delta_matrix(M, l, parse_norm(norm));
    json rows = json::array();
    for (const auto& row : cm.entries) {
        json r = json::array();
        for (const Scalar& s : row) r.push_back(to_canonical_string(s));
        rows.push_back(std::move(r));
    }
    json doc{{"object", "matrix"}, {"m", m}, {"n", n}, {"l", l},
             {"normalization", norm}, {"rows", std::move(rows)}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int show_det(std::int64_t m, std::int64_t n, std::int64_t l, const std::string& norm,
             bool as_json) {
    TensorModule M = TensorModule::symbolic(m, n);
    DeterminantReport r = determinant_report(M, l, parse_norm(norm));

    // factored form: the q-only cofactor, then each linear factor
    std::vector<std::pair<std::string, std::int64_t>> factors;
    factors.push_back({to_canonical_string(r.det / xy_factor_product(m, n, l)), 1});
    for (std::int64_t j = 0; j < l; ++j) {
        Scalar f = Scalar::y() - Scalar::x() * Scalar::q(-m - n + 2 * j);
        factors.push_back({to_canonical_string(f), l - j});
    }

    if (as_json) {
        json fj = json::array();
        for (const auto& [f, mult] : factors) fj.push_back({f, mult});
        json doc{{"object", "det"},
                 {"m", m},
                 {"n", n},
                 {"l", l},
                 {"normalization", norm},
                 {"det", to_canonical_string(r.det)},
                 {"closed_form", to_canonical_string(r.closed_form)},
                 {"prefactor", to_canonical_string(r.prefactor)},
                 {"factors", std::move(fj)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "det = " << to_canonical_string(r.det) << "\n"
                  << "closed_form = " << to_canonical_string(r.closed_form) << "\n"
                  << "prefactor = " << to_canonical_string(r.prefactor) << "\n"
                  << "factors:";
        for (const auto& [f, mult] : factors) std::cout << " (" << f << ")^" << mult;
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of a quantum affine tensor-product basis"};
    app.require_subcommand(1);

    // verify -----------------------------------------------------------------
    VerifyConfig vc;
    std::string vq = "2", vx = "3", vy = "5";
    std::int64_t vmax_m = 0, vmax_n = 0;
    CLI::App* verify = app.add_subcommand("verify", "run property sweeps");
    verify->add_option("scope", vc.scope, "relations|identities|lemmas|alpha|determinant|all")
        ->required()
        ->check(CLI::IsMember({"relations", "identities", "lemmas", "alpha", "determinant", "all"}));
    auto* om = verify->add_option("--max-m", vmax_m, "largest left highest weight");
    auto* on = verify->add_option("--max-n", vmax_n, "largest right highest weight");
    verify->add_option("--q", vq, "specialization q0 as p or p/r");
    verify->add_option("--x", vx, "specialization x0");
    verify->add_option("--y", vy, "specialization y0");
    verify->add_option("--seed", vc.seed, "seed for randomized scalar properties");
    verify->add_flag("--json", vc.as_json, "emit one JSON document");

    // basis ------------------------------------------------------------------
    std::int64_t bm = 0, bn = 0;
    std::string bq = "2", bx = "3", by = "5", bnorm = "unit";
    bool bdual = false, bsym = false, bjson = false;
    CLI::App* basis = app.add_subcommand("basis", "build and certify a candidate basis");
    basis->add_option("m", bm, "left highest weight")->required();
    basis->add_option("n", bn, "right highest weight")->required();
    basis->add_option("--q", bq, "q0 as p or p/r");
    basis->add_option("--x", bx, "x0");
    basis->add_option("--y", by, "y0");
    basis->add_flag("--dual", bdual, "certify the raising-ladder family");
    basis->add_flag("--symbolic", bsym, "rank over the rational function field");
    basis->add_option("--norm", bnorm, "seed normalization")
        ->check(CLI::IsMember({"paper", "unit"}));
    basis->add_flag("--json", bjson, "emit one JSON document");

    // show -------------------------------------------------------------------
    std::string sobj, snorm;
    std::vector<std::int64_t> sargs;
    bool sjson = false;
    CLI::App* show = app.add_subcommand("show", "print one object");
    show->add_option("object", sobj, "omega|phi|alpha|matrix|det")
        ->required()
        ->check(CLI::IsMember({"omega", "phi", "alpha", "matrix", "det"}));
    show->add_option("params", sargs, "m n l")->expected(3);
    show->add_option("--norm", snorm, "normalization (default: paper for omega/phi, else unit)")
        ->check(CLI::IsMember({"paper", "unit"}));
    show->add_flag("--json", sjson, "emit one JSON document");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (om->count() > 0) vc.max_m = vmax_m;
            if (on->count() > 0) vc.max_n = vmax_n;
            vc.q0 = parse_rational(vq);
            vc.x0 = parse_rational(vx);
            vc.y0 = parse_rational(vy);
            return run_verify(vc);
        }
        if (basis->parsed())
            return run_basis(bm, bn, parse_rational(bq), parse_rational(bx), parse_rational(by),
                             bdual, bsym, bnorm, bjson);
        if (show->parsed()) {
            const std::int64_t m = sargs.at(0), n = sargs.at(1), l = sargs.at(2);
            if (sobj == "omega" || sobj == "phi") {
                if (snorm.empty()) snorm = "paper";
                return show_vector(sobj, m, n, l, snorm, sjson);
            }
            if (snorm.empty()) snorm = "unit";
            if (sobj == "alpha") return show_alpha(m, n, l, sjson);
            if (sobj == "matrix") return show_matrix(m, n, l, snorm);
            return show_det(m, n, l, snorm, sjson);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
