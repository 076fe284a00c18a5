// Command-line front end: check positions, transform ideals, and print
// invariants, generic initial ideals, beta vectors and annihilator numbers
// for ideals given in the plain-text file format (see README).
//
// Exit codes: 0 = the queried property holds / the command succeeded,
//             1 = the property fails / the transformation did not finish,
//             2 = usage, parse or computation error.

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "genpos/generic.hpp"
#include "genpos/io.hpp"
#include "genpos/transform.hpp"

using json = nlohmann::ordered_json;
using namespace genpos;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IdealFile read_ideal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ideal_file(ss.str());
}

json term_json(const Term& t, const std::vector<std::string>& vars) {
    std::vector<int> e;
    for (int i = 1; i <= t.nvars(); ++i) e.push_back(t.exponent(i));
    return json{{"string", term_str(t, vars)}, {"exponents", e}};
}

json ideal_json(const MonomialIdeal& J, const std::vector<std::string>& vars) {
    json a = json::array();
    for (const auto& g : J.generators()) a.push_back(term_json(g, vars));
    return a;
}

json poly_list_json(const std::vector<Polynomial>& fs, const std::vector<std::string>& vars) {
    json a = json::array();
    for (const auto& f : fs) a.push_back(f.str(vars));
    return a;
}

// Position names accepted by `check` and `transform`.
enum class Special { None, Dqs, Noether, Borel, CwQs, CwStable, CwSs, BetaMax, GinPos };

struct Target {
    Special special = Special::None;
    PositionKind kind;       // when special == None
    bool needs_ell = false;  // scoped variants take --ell
};

Target parse_position(const std::string& name) {
    auto k = [](BaseKind b, ScopeKind s = ScopeKind::Full, bool pv = false) {
        Target t;
        t.kind.base = b;
        t.kind.scope = s;
        t.kind.p_variant = pv;
        t.needs_ell = s != ScopeKind::Full;
        return t;
    };
    if (name == "qs") return k(BaseKind::QuasiStable);
    if (name == "ell-qs") return k(BaseKind::QuasiStable, ScopeKind::Ell);
    if (name == "weak-ell-qs") return k(BaseKind::QuasiStable, ScopeKind::WeakEll);
    if (name == "stable") return k(BaseKind::Stable);
    if (name == "ell-stable") return k(BaseKind::Stable, ScopeKind::Ell);
    if (name == "weak-ell-stable") return k(BaseKind::Stable, ScopeKind::WeakEll);
    if (name == "ss") return k(BaseKind::StronglyStable);
    if (name == "ell-ss") return k(BaseKind::StronglyStable, ScopeKind::Ell);
    if (name == "weak-ell-ss") return k(BaseKind::StronglyStable, ScopeKind::WeakEll);
    if (name == "p-stable") return k(BaseKind::Stable, ScopeKind::Full, true);
    if (name == "strong-p-stable") return k(BaseKind::StronglyStable, ScopeKind::Full, true);
    Target t;
    if (name == "dqs") t.special = Special::Dqs;
    else if (name == "noether") t.special = Special::Noether;
    else if (name == "borel") t.special = Special::Borel;
    else if (name == "componentwise-qs") t.special = Special::CwQs;
    else if (name == "componentwise-stable") t.special = Special::CwStable;
    else if (name == "componentwise-ss") t.special = Special::CwSs;
    else if (name == "beta-max") t.special = Special::BetaMax;
    else if (name == "gin-position") t.special = Special::GinPos;
    else throw UsageError("unknown position name '" + name + "'");
    return t;
}

void validate_field(const Target& t, const FieldSpec& field, bool transforming) {
    if (t.special == Special::None && t.kind.p_variant && field.rationals())
        throw UsageError("the p-variants need a GF(p) coefficient field");
    if (transforming && t.special == Special::None && !t.kind.p_variant &&
        !field.rationals() && t.kind.base != BaseKind::QuasiStable)
        throw UsageError(
            "over GF(p) only p-admissible moves are available; use the "
            "'p-stable' or 'strong-p-stable' target instead");
}

struct CheckOutcome {
    bool holds = false;
    json report;
};

CheckOutcome run_check(const std::string& file, const Target& t, int ell, bool as_json) {
    auto doc = read_ideal(file);
    const auto& vars = doc.vars;
    MonomialIdeal lt = doc.ideal.leading_terms();

    CheckOutcome out;
    json& r = out.report;
    r["command"] = "check";
    r["file"] = file;
    r["field"] = doc.field.str();

    switch (t.special) {
        case Special::None: {
            PositionKind kind = t.kind;
            kind.ell = ell;
            auto res = check_position(lt, kind, doc.field);
            out.holds = res.holds;
            if (res.obstruction) {
                const auto& o = *res.obstruction;
                r["obstruction"] = {{"generator", term_json(o.generator, vars)},
                                    {"j", o.j},
                                    {"i", o.i},
                                    {"s", o.s},
                                    {"witness", term_json(o.witness, vars)}};
            }
            break;
        }
        case Special::Dqs: {
            auto res = dqs_test(lt);
            out.holds = res.holds;
            r["ell"] = res.ell;
            break;
        }
        case Special::Noether:
            out.holds = is_noether_position(lt);
            break;
        case Special::Borel:
            out.holds = is_borel_fixed(lt, doc.field);
            break;
        case Special::CwQs:
        case Special::CwStable:
        case Special::CwSs: {
            BaseKind b = t.special == Special::CwQs ? BaseKind::QuasiStable
                         : t.special == Special::CwStable ? BaseKind::Stable
                                                          : BaseKind::StronglyStable;
            auto res = componentwise_check_direct(doc.ideal, b);
            out.holds = res.holds;
            if (!res.holds) r["failing_degree"] = res.failing_degree;
            break;
        }
        case Special::BetaMax: {
            auto res = is_beta_maximal(doc.ideal);
            out.holds = res.holds;
            r["quasi_stable"] = res.quasi_stable;
            if (!res.holds && res.failing_degree >= 0) {
                r["failing_degree"] = res.failing_degree;
                r["beta_ideal"] = res.beta_ideal;
                r["beta_gin"] = res.beta_gin;
            }
            break;
        }
        case Special::GinPos:
            out.holds = is_gin_position(doc.ideal);
            break;
    }
    r["holds"] = out.holds;

    if (!as_json) {
        std::cout << file << ": " << (out.holds ? "holds" : "fails") << "\n";
        if (r.contains("obstruction"))
            std::cout << "  obstruction: move x" << r["obstruction"]["j"].get<int>()
                      << " -> x" << r["obstruction"]["i"].get<int>() << " on generator "
                      << r["obstruction"]["generator"]["string"].get<std::string>()
                      << ", missing witness "
                      << r["obstruction"]["witness"]["string"].get<std::string>() << "\n";
        if (r.contains("failing_degree"))
            std::cout << "  failing degree: " << r["failing_degree"].get<int>() << "\n";
    }
    return out;
}

int cmd_check(const std::vector<std::string>& files, const std::string& position, int ell,
              bool as_json, int jobs) {
    Target t = parse_position(position);
    if (t.needs_ell && ell < 0) throw UsageError("position '" + position + "' needs --ell");

    std::vector<CheckOutcome> outs(files.size());
    if (jobs > 1 && files.size() > 1) {
        std::vector<std::future<CheckOutcome>> futs;
        for (const auto& f : files)
            futs.push_back(std::async(std::launch::async, run_check, f, t, ell, true));
        for (size_t i = 0; i < futs.size(); ++i) outs[i] = futs[i].get();
        if (!as_json)
            for (size_t i = 0; i < files.size(); ++i)
                std::cout << files[i] << ": " << (outs[i].holds ? "holds" : "fails") << "\n";
    } else {
        for (size_t i = 0; i < files.size(); ++i)
            outs[i] = run_check(files[i], t, ell, as_json);
    }
    if (as_json) {
        if (outs.size() == 1) {
            std::cout << outs[0].report.dump(2) << "\n";
        } else {
            json a = json::array();
            for (const auto& o : outs) a.push_back(o.report);
            std::cout << a.dump(2) << "\n";
        }
    }
    for (const auto& o : outs)
        if (!o.holds) return 1;
    return 0;
}

int cmd_transform(const std::string& file, const std::string& position, int ell,
                  bool as_json, const TransformOptions& opt) {
    Target t = parse_position(position);
    if (t.needs_ell && ell < 0) throw UsageError("position '" + position + "' needs --ell");
    auto doc = read_ideal(file);
    validate_field(t, doc.field, true);
    const auto& vars = doc.vars;

    TransformResult res;
    bool verified = false;
    switch (t.special) {
        case Special::None: {
            PositionKind kind = t.kind;
            kind.ell = ell;
            res = transform_to_position(doc.ideal, kind, opt);
            if (res.success)
                verified =
                    check_position(res.transformed.leading_terms(), kind, doc.field).holds;
            break;
        }
        case Special::Noether:
            res = transform_to_noether(doc.ideal, opt);
            if (res.success) verified = is_noether_position(res.transformed.leading_terms());
            break;
        case Special::CwQs:
        case Special::CwStable:
        case Special::CwSs: {
            BaseKind b = t.special == Special::CwQs ? BaseKind::QuasiStable
                         : t.special == Special::CwStable ? BaseKind::Stable
                                                          : BaseKind::StronglyStable;
            res = transform_componentwise(doc.ideal, b, opt);
            if (res.success) verified = componentwise_check_direct(res.transformed, b).holds;
            break;
        }
        default:
            throw UsageError("'" + position + "' is not a transformation target");
    }

    json r;
    r["command"] = "transform";
    r["file"] = file;
    r["position"] = position;
    r["success"] = res.success;
    r["error"] = res.error;
    r["verified"] = verified;
    r["outer_iterations"] = res.outer_iterations;
    json moves = json::array();
    for (const auto& m : res.moves)
        moves.push_back({{"j", m.j}, {"i", m.i}, {"a", m.a.str()}});
    r["moves"] = moves;
    json mat = json::array();
    for (const auto& row : res.change.matrix()) {
        json jr = json::array();
        for (const auto& s : row) jr.push_back(s.str());
        mat.push_back(jr);
    }
    r["matrix"] = mat;
    if (res.success) {
        r["groebner_basis"] = poly_list_json(res.transformed.groebner_basis(), vars);
        r["leading_terms"] = ideal_json(res.transformed.leading_terms(), vars);
    }
    json trace = json::array();
    for (const auto& tup : res.ls_trace) {
        json jt = json::array();
        for (const auto& u : tup) jt.push_back(term_str(u, vars));
        trace.push_back(jt);
    }
    r["ls_trace"] = trace;

    if (as_json) {
        std::cout << r.dump(2) << "\n";
    } else if (!res.success) {
        std::cout << "transformation failed: " << res.error << "\n";
    } else {
        if (res.moves.empty()) std::cout << "already in position\n";
        for (const auto& m : res.moves)
            std::cout << "move: x" << m.j << " -> x" << m.j << " + " << m.a.str() << "*x"
                      << m.i << "\n";
        std::cout << "final leading terms:";
        MonomialIdeal final_lt = res.transformed.leading_terms();
        for (const auto& g : final_lt.generators()) std::cout << " " << term_str(g, vars);
        std::cout << "\nfinal Groebner basis:\n";
        for (const auto& f : res.transformed.groebner_basis())
            std::cout << "  " << f.str(vars) << "\n";
        std::cout << "target " << (verified ? "verified" : "NOT verified")
                  << " on the result\n";
    }
    return res.success ? 0 : 1;
}

int cmd_invariants(const std::string& file, bool as_json) {
    auto doc = read_ideal(file);
    auto inv = ideal_invariants(doc.ideal);
    json r;
    r["command"] = "invariants";
    r["file"] = file;
    r["quasi_stable"] = inv.has_value();
    if (inv) {
        r["dimension"] = inv->dimension;
        r["depth"] = inv->depth;
        r["regularity"] = inv->regularity;
        auto pb = polynomial_pommaret_basis(doc.ideal);
        if (pb.finite) r["pommaret_basis"] = poly_list_json(pb.basis, doc.vars);
    }
    if (as_json) {
        std::cout << r.dump(2) << "\n";
    } else if (!inv) {
        std::cout << "not quasi-stable: no finite Pommaret basis, invariants unavailable "
                     "(transform to 'qs' first)\n";
    } else {
        std::cout << "dimension: " << inv->dimension << "\ndepth: " << inv->depth
                  << "\nregularity: " << inv->regularity << "\n";
        if (r.contains("pommaret_basis")) {
            std::cout << "Pommaret basis:\n";
            for (const auto& s : r["pommaret_basis"])
                std::cout << "  " << s.get<std::string>() << "\n";
        }
    }
    return inv ? 0 : 2;
}

int cmd_gin(const std::string& file, bool as_json) {
    auto doc = read_ideal(file);
    auto g = generic_initial_ideal(doc.ideal);
    json r;
    r["command"] = "gin";
    r["file"] = file;
    r["generators"] = ideal_json(g.gin, doc.vars);
    r["ledger_size"] = g.ledger.size();
    r["method"] = g.method;
    if (as_json) {
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "gin:";
        for (const auto& u : g.gin.generators()) std::cout << " " << term_str(u, doc.vars);
        std::cout << "\nmethod: " << g.method << "\nledger size: " << g.ledger.size()
                  << "\n";
    }
    return 0;
}

int cmd_beta(const std::string& file, int degree, bool all, bool as_json) {
    auto doc = read_ideal(file);
    MonomialIdeal lt = doc.ideal.leading_terms();
    if (lt.is_zero()) throw std::runtime_error("the zero ideal has no beta vectors");
    int lo = degree, hi = degree;
    if (all) {
        lo = lt.generators().front().degree();
        for (const auto& u : lt.generators()) lo = std::min(lo, u.degree());
        auto inv = monomial_invariants(lt);
        hi = inv ? inv->regularity : lt.max_gen_degree();
    } else if (degree < 0) {
        throw UsageError("beta needs --degree q or --all");
    }
    json r;
    r["command"] = "beta";
    r["file"] = file;
    json vecs = json::array();
    for (int q = lo; q <= hi; ++q)
        vecs.push_back({{"degree", q}, {"beta", beta_vector(lt, q)}});
    r["vectors"] = vecs;
    if (as_json) {
        std::cout << r.dump(2) << "\n";
    } else {
        for (const auto& v : r["vectors"]) {
            std::cout << "beta_" << v["degree"].get<int>() << " = (";
            bool first = true;
            for (const auto& b : v["beta"]) {
                std::cout << (first ? "" : ", ") << b.get<long>();
                first = false;
            }
            std::cout << ")\n";
        }
    }
    return 0;
}

int cmd_annihilators(const std::string& file, bool generic, bool as_json) {
    auto doc = read_ideal(file);
    auto an = generic ? generic_annihilator_numbers(doc.ideal)
                      : annihilator_numbers(doc.ideal);
    json r;
    r["command"] = "annihilators";
    r["file"] = file;
    r["generic"] = generic;
    r["quasi_stable"] = an.quasi_stable;
    if (an.quasi_stable) {
        r["regularity"] = an.regularity;
        r["depth"] = an.depth;
        r["alpha"] = an.alpha;
    }
    if (as_json) {
        std::cout << r.dump(2) << "\n";
    } else if (!an.quasi_stable) {
        std::cout << "not quasi-stable: annihilator numbers unavailable (transform to "
                     "'qs' first, or use --generic)\n";
    } else {
        std::cout << "regularity: " << an.regularity << "\ndepth: " << an.depth << "\n";
        for (size_t i = 0; i < an.alpha.size(); ++i) {
            std::cout << "alpha[" << i << "] =";
            for (long v : an.alpha[i]) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return an.quasi_stable ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stability-position toolkit for homogeneous polynomial ideals"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    // check
    auto* check = app.add_subcommand("check", "test an ideal for a position");
    std::vector<std::string> check_files;
    std::string check_pos;
    int check_ell = -1, jobs = 1;
    check->add_option("file", check_files, "ideal file(s)")->required();
    check->add_option("--position", check_pos, "position name")->required();
    check->add_option("--ell", check_ell, "scope parameter for the ell-variants");
    check->add_option("--jobs", jobs, "parallel workers for multi-file batches");

    // transform
    auto* transform = app.add_subcommand("transform", "move an ideal into a position");
    std::string tr_file, tr_pos;
    int tr_ell = -1;
    TransformOptions opt;
    bool seed_set = false;
    transform->add_option("file", tr_file, "ideal file")->required();
    transform->add_option("--position", tr_pos, "target position")->required();
    transform->add_option("--ell", tr_ell, "scope parameter for the ell-variants");
    transform->add_option("--max-outer", opt.max_outer, "outer iteration cap");
    transform->add_option("--max-inner", opt.max_inner, "inner iteration cap");
    transform->add_flag("--random-a", opt.random_a, "draw move coefficients from a seeded RNG");
    auto* seed_opt = transform->add_option("--seed", opt.seed, "RNG seed (with --random-a)");
    seed_opt->each([&](const std::string&) { seed_set = true; });

    // invariants / gin / beta / annihilators
    auto* invariants = app.add_subcommand("invariants", "dimension, depth, regularity");
    std::string inv_file;
    invariants->add_option("file", inv_file, "ideal file")->required();

    auto* gin = app.add_subcommand("gin", "generic initial ideal");
    std::string gin_file;
    gin->add_option("file", gin_file, "ideal file")->required();

    auto* beta = app.add_subcommand("beta", "beta vectors by degree");
    std::string beta_file;
    int beta_degree = -1;
    bool beta_all = false;
    beta->add_option("file", beta_file, "ideal file")->required();
    beta->add_option("--degree", beta_degree, "single degree q");
    beta->add_flag("--all", beta_all, "all degrees up to the regularity");

    auto* ann = app.add_subcommand("annihilators", "annihilator number table");
    std::string ann_file;
    bool ann_generic = false;
    ann->add_option("file", ann_file, "ideal file")->required();
    ann->add_flag("--generic", ann_generic, "annihilator numbers of the gin");

    // let the global --json appear after the subcommand name too
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (seed_set && !opt.random_a) throw UsageError("--seed needs --random-a");
        if (*check) return cmd_check(check_files, check_pos, check_ell, as_json, jobs);
        if (*transform) return cmd_transform(tr_file, tr_pos, tr_ell, as_json, opt);
        if (*invariants) return cmd_invariants(inv_file, as_json);
        if (*gin) return cmd_gin(gin_file, as_json);
        if (*beta) return cmd_beta(beta_file, beta_degree, beta_all, as_json);
        if (*ann) return cmd_annihilators(ann_file, ann_generic, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
