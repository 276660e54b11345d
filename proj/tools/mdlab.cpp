// Command-line front end: multigraded invariants of determinantal, Schubert,
// binomial-edge and homogenized-linear ideals, plus the verification battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 desk-scale limit exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include <mdlab/binedge.hpp>
#include <mdlab/closure.hpp>
#include <mdlab/core.hpp>
#include <mdlab/determinantal.hpp>
#include <mdlab/groebner.hpp>
#include <mdlab/schubert.hpp>
#include <mdlab/symfunc.hpp>
#include <mdlab/verify.hpp>

using json = nlohmann::json;
using namespace mdlab;

namespace {

json poly_json(const Polynomial& p) {
    // stable canonical form: variables sorted, terms sorted by the default
    // order, coefficients as exact numerator/denominator strings
    std::vector<Variable> vars = p.support();
    json jvars = json::array();
    for (const auto& v : vars) jvars.push_back(to_string(v));
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    TermOrder ord = TermOrder::lex();
    std::sort(ts.begin(), ts.end(),
              [&ord](auto* a, auto* b) { return ord.greater(a->first, b->first); });
    json jterms = json::array();
    for (const auto* t : ts) {
        json exps = json::array();
        for (const auto& v : vars) exps.push_back(t->first.exponent(v));
        jterms.push_back(json::array(
            {exps, t->second.get_num().get_str(), t->second.get_den().get_str()}));
    }
    return json{{"vars", jvars}, {"terms", jterms}, {"text", to_string(p)}};
}

// Symmetric polynomials print in the monomial-symmetric basis, dominant
// partitions first.
std::string render_symmetric(const Polynomial& p, int n) {
    if (p.is_zero()) return "0";
    if (!is_symmetric(p, n)) return to_string(p);
    auto expansion = expand_monomial_basis(p, n);
    std::string s;
    for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
        if (!s.empty()) s += " + ";
        if (it->second != 1) s += rat_str(it->second) + "*";
        s += "m_{" + to_string(it->first) + "}";
    }
    return s;
}

struct Output {
    bool as_json = false;
    bool with_timings = false;  // timings vary run to run; JSON stays
                                // byte-identical for a seed unless asked for
    json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void text(const std::string& line) {
        if (!as_json) std::cout << line << "\n";
    }
    void finish(const std::string& command) {
        if (!as_json) return;
        j["command"] = command;
        if (!j.contains("seed")) j["seed"] = nullptr;  // set only by commands that draw randomness
        j["timings"] = json::object();
        if (with_timings)
            j["timings"]["total_secs"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << j.dump(2) << "\n";
    }
};

IdealFile load_ideal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot open ideal file " + path);
    return parse_ideal_file(in);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file " + path);
    return parse_graph_file(in);
}

int cmd_multidegree(int m, int n, int t, const std::string& route, Output& out) {
    DetSpec spec(m, n, t);
    out.j["inputs"] = {{"m", m}, {"n", n}, {"t", t}, {"route", route}};
    std::map<std::string, DetRoute> routes{{"closed", DetRoute::closed},
                                           {"schur", DetRoute::schur},
                                           {"paths", DetRoute::paths}};
    std::vector<std::string> wanted;
    if (route == "all")
        wanted = {"closed", "schur", "paths"};
    else if (routes.count(route))
        wanted = {route};
    else
        throw CLI::ValidationError("--route must be closed|schur|paths|all");

    std::vector<Polynomial> values;
    json jres;
    for (const auto& r : wanted) {
        MultidegreeData d = det_multidegree(spec, routes.at(r));
        values.push_back(d.poly());
        jres[r] = poly_json(d.poly());
        out.text(r + ": " + render_symmetric(d.poly(), n));
    }
    bool agree = true;
    for (const auto& v : values) agree = agree && v == values.front();
    MultidegreeData d0 = MultidegreeData::from_poly(values.front(), n);
    jres["agree"] = agree;
    jres["multiplicity"] = d0.ordinary_multiplicity();
    jres["multiplicity_free"] = d0.is_multiplicity_free();
    jres["cartwright_sturmfels"] = classify_cs(spec);
    out.j["results"] = jres;
    out.text(std::string("routes agree: ") + (agree ? "yes" : "NO"));
    out.text("multiplicity: " + std::to_string(d0.ordinary_multiplicity()) +
             ", multiplicity-free: " + (d0.is_multiplicity_free() ? "yes" : "no") +
             ", Cartwright-Sturmfels: " + (classify_cs(spec) ? "yes" : "no"));
    out.finish("multidegree");
    return agree ? 0 : 1;
}

int cmd_schur(const std::string& lambda, int n, Output& out) {
    Partition lam = parse_partition(lambda);
    Polynomial s = schur(lam, n);
    out.j["inputs"] = {{"lambda", to_string(lam)}, {"n", n}};
    out.j["results"] = {{"schur", poly_json(s)}};
    out.text("s_{" + to_string(lam) + "} in " + std::to_string(n) +
             " variables: " + render_symmetric(s, n));
    out.finish("schur");
    return 0;
}

int cmd_kostka(const std::string& lambda, const std::string& mu, bool tableaux, Output& out) {
    Partition lam = parse_partition(lambda);
    Partition m = parse_partition(mu);
    long k = kostka(lam, m);
    out.j["inputs"] = {{"lambda", to_string(lam)}, {"mu", to_string(m)}};
    out.j["results"] = {{"kostka", k}};
    out.text("K_{" + to_string(lam) + "; " + to_string(m) + "} = " + std::to_string(k));
    if (tableaux) {
        json jt = json::array();
        for (const auto& t : enumerate_ssyt(lam, m.parts())) {
            jt.push_back(t.rows);
            out.text(to_string(t));
        }
        out.j["results"]["tableaux"] = jt;
    }
    out.finish("kostka");
    return 0;
}

int cmd_schubert(const std::string& word, Output& out) {
    Permutation w = parse_permutation(word);
    auto diagram = rothe_diagram(w);
    auto essential = essential_set(w);
    Polynomial s = schubert_polynomial(w);
    bool multfree = true;
    for (const auto& [mm, c] : s.terms())
        if (c != 1) multfree = false;

    json jd = json::array(), je = json::array();
    for (auto [i, j] : diagram) jd.push_back({i, j});
    for (auto [i, j] : essential) je.push_back({i, j});
    out.j["inputs"] = {{"permutation", to_string(w)}};
    out.j["results"] = {{"diagram", jd},
                        {"essential", je},
                        {"vexillary", is_vexillary(w)},
                        {"cs", is_cs_schubert(w)},
                        {"cdg_predicted", cdg_diagonal_gb_predicted(w)},
                        {"multiplicity_free", multfree},
                        {"inversions", w.inversions()},
                        {"schubert_polynomial", poly_json(s)}};

    auto cells = [](const std::set<Cell>& cs) {
        std::string t = "{";
        for (auto [i, j] : cs) {
            if (t.size() > 1) t += ", ";
            t += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        return t + "}";
    };
    out.text("permutation " + to_string(w) + " (" + std::to_string(w.inversions()) +
             " inversions)");
    out.text("Rothe diagram:  " + cells(diagram));
    out.text("essential set:  " + cells(essential));
    out.text(std::string("vexillary: ") + (is_vexillary(w) ? "yes" : "no") +
             ", Cartwright-Sturmfels: " + (is_cs_schubert(w) ? "yes" : "no") +
             ", CDG diagonal GB predicted: " + (cdg_diagonal_gb_predicted(w) ? "yes" : "no"));
    out.text("Schubert polynomial: " + to_string(s));
    out.finish("schubert");
    return 0;
}

int cmd_binedge(const std::string& graphFile, std::uint64_t seed, int cap, Output& out) {
    Graph g = load_graph(graphFile);
    MonomialIdeal pred = predicted_gin(g);
    out.j["inputs"] = {{"graph", graphFile}, {"vertices", g.size()}};
    out.j["seed"] = seed;

    Rng rng(seed);
    std::set<long> used;
    std::vector<Rational> alpha;
    while (static_cast<int>(alpha.size()) < g.size()) {
        long v = rng.uniform(0, 1000000);
        if (used.insert(v).second) alpha.push_back(rat(v));
    }
    bool gbOk = verify_gb(g, alpha, TermOrder::lex());
    MonomialIdeal viaGin = gin(binomial_edge_ideal(g), TermOrder::lex(), 2, rng.next() | 1);
    bool ginOk = viaGin == pred;

    // HF agreement between prediction and a direct initial ideal
    GroebnerBasis direct =
        buchberger(IdealPresentation(f_generators(g, alpha), g.grading()), TermOrder::lex());
    bool hfOk = true;
    std::vector<int> a(g.size(), 0);
    auto rec = [&](auto&& self, int col, int left) -> void {
        if (col == g.size()) {
            if (multigraded_hf(pred, g.grading(), a) !=
                multigraded_hf(direct.initial(), g.grading(), a))
                hfOk = false;
            return;
        }
        for (int v = 0; v <= left && hfOk; ++v) {
            a[col] = v;
            self(self, col + 1, left - v);
            a[col] = 0;
        }
    };
    rec(rec, 0, cap);

    json jgens = json::array();
    for (const auto& mm : pred.generators()) jgens.push_back(to_string(mm));
    out.j["results"] = {{"predicted_gin", jgens},
                        {"squarefree", pred.is_squarefree()},
                        {"f_set_groebner", gbOk},
                        {"gin_matches", ginOk},
                        {"hf_agreement", hfOk}};
    out.text("seed: " + std::to_string(seed));
    out.text("predicted gin: " + to_string(pred));
    out.text(std::string("F-set is a Groebner basis: ") + (gbOk ? "yes" : "NO"));
    out.text(std::string("randomized gin matches: ") + (ginOk ? "yes" : "NO"));
    out.text(std::string("Hilbert functions agree up to |a| <= ") + std::to_string(cap) + ": " +
             (hfOk ? "yes" : "NO"));
    out.finish("binedge");
    return (gbOk && ginOk && hfOk) ? 0 : 1;
}

int cmd_gin(const std::string& idealFile, int trials, std::uint64_t seed,
            const std::string& orderFlag, Output& out) {
    IdealFile f = load_ideal(idealFile);
    TermOrder ord = f.order;
    if (orderFlag == "lex")
        ord = TermOrder::lex();
    else if (orderFlag == "degrevlex")
        ord = TermOrder::degrevlex();
    else if (!orderFlag.empty())
        throw CLI::ValidationError("--order must be lex or degrevlex");
    IdealPresentation I(f.generators, f.grading, true);
    MonomialIdeal J = gin(I, ord, trials, seed);
    out.j["inputs"] = {{"ideal", idealFile}, {"trials", trials}};
    out.j["seed"] = seed;
    json jgens = json::array();
    for (const auto& mm : J.generators()) jgens.push_back(to_string(mm));
    out.j["results"] = {{"gin", jgens},
                        {"squarefree", J.is_squarefree()},
                        {"borel_fixed", is_borel_fixed(J, f.grading)}};
    out.text("seed: " + std::to_string(seed));
    for (const auto& mm : J.generators()) out.text(to_string(mm));
    out.text(std::string("squarefree: ") + (J.is_squarefree() ? "yes" : "no"));
    out.finish("gin");
    return 0;
}

int cmd_homogenize(const std::string& idealFile, Output& out) {
    IdealFile f = load_ideal(idealFile);
    for (int j = 1; j <= f.grading.ncols(); ++j)
        if (f.grading.contains(xvar(0, j)))
            throw std::invalid_argument("homogenize: ideal file must not declare homrow");
    auto ctx = HomogenizationContext::over(f.grading);
    IdealPresentation H = homogenize_ideal(f.generators, ctx);
    out.j["inputs"] = {{"ideal", idealFile}};
    json jgens = json::array();
    for (const auto& p : H.generators) jgens.push_back(poly_json(p));
    out.j["results"] = {{"homogenized", jgens}};
    for (const auto& p : H.generators) out.text(to_string(p));
    out.finish("homogenize");
    return 0;
}

int cmd_zstar(const std::string& idealFile, Output& out) {
    IdealFile f = load_ideal(idealFile);
    IdealPresentation J(f.generators, f.grading, false);
    IdealPresentation star = zstar_linear(J);
    out.j["inputs"] = {{"ideal", idealFile}};
    json jgens = json::array();
    for (const auto& p : star.generators) jgens.push_back(poly_json(p));
    out.j["results"] = {{"zstar", jgens}};
    if (star.generators.empty()) out.text("0");
    for (const auto& p : star.generators) out.text(to_string(p));
    out.finish("zstar");
    return 0;
}

int cmd_verify(const std::string& which, std::uint64_t seed, Output& out) {
    verify::Battery battery;
    battery.seed = seed;
    std::vector<verify::CriterionResult> results;
    if (which == "all")
        results = verify::run_all(battery);
    else
        results.push_back(verify::run_one(battery, std::stoi(which)));
    bool all = true;
    json jr = json::array();
    out.j["seed"] = seed;
    out.text("seed: " + std::to_string(seed));
    for (const auto& r : results) {
        all = all && r.pass;
        jr.push_back({{"id", r.id},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"detail", r.detail},
                      {"secs", r.seconds}});
        char line[512];
        std::snprintf(line, sizeof line, "%s criterion %2d: %s (%.2fs) %s",
                      r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                      r.detail.c_str());
        out.text(line);
    }
    for (const auto& lineText : battery.info) out.text("INFO " + lineText);
    json jinfo = json::array();
    for (const auto& lineText : battery.info) jinfo.push_back(lineText);
    out.j["results"] = {{"criteria", jr}, {"info", jinfo}, {"all_pass", all}};
    out.finish("verify");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigraded invariants of determinantal, Schubert, binomial-edge and "
                 "homogenized-linear ideals"};
    app.require_subcommand(1);

    Output out;
    int m = 4, n = 4, t = 3, trials = 2, cap = 6;
    std::uint64_t seed = 1;
    std::string route = "all", lambda, mu, word, graphFile, idealFile, orderFlag, which = "all";
    bool tableaux = false;

    auto* md = app.add_subcommand("multidegree", "multidegree of a generic determinantal ring");
    md->add_option("--m", m, "rows")->required();
    md->add_option("--n", n, "columns")->required();
    md->add_option("--t", t, "minor size")->required();
    md->add_option("--route", route, "closed|schur|paths|all");
    md->add_flag("--json", out.as_json);
    md->add_flag("--timings", out.with_timings);

    auto* sc = app.add_subcommand("schur", "Schur polynomial by Jacobi-Trudi");
    sc->add_option("--lambda", lambda, "partition, e.g. 2,2")->required();
    sc->add_option("--n", n, "variable count")->required();
    sc->add_flag("--json", out.as_json);
    sc->add_flag("--timings", out.with_timings);

    auto* ko = app.add_subcommand("kostka", "Kostka number and tableaux");
    ko->add_option("--lambda", lambda, "shape")->required();
    ko->add_option("--mu", mu, "content")->required();
    ko->add_flag("--tableaux", tableaux, "list the tableaux");
    ko->add_flag("--json", out.as_json);
    ko->add_flag("--timings", out.with_timings);

    auto* su = app.add_subcommand("schubert", "Schubert determinantal data");
    auto* an = su->add_subcommand("analyze", "diagram, classifications, Schubert polynomial");
    an->add_option("word", word, "permutation in one-line notation")->required();
    an->add_flag("--json", out.as_json);
    an->add_flag("--timings", out.with_timings);
    su->require_subcommand(1);

    auto* be = app.add_subcommand("binedge", "binomial edge ideal checks");
    be->add_option("--graph", graphFile, "graph file")->required();
    be->add_option("--seed", seed, "random seed");
    be->add_option("--cap", cap, "HF agreement degree cap");
    be->add_flag("--json", out.as_json);
    be->add_flag("--timings", out.with_timings);

    auto* gi = app.add_subcommand("gin", "multigraded generic initial ideal");
    gi->add_option("--ideal", idealFile, "ideal file")->required();
    gi->add_option("--trials", trials, "independent random trials");
    gi->add_option("--seed", seed, "random seed");
    gi->add_option("--order", orderFlag, "lex|degrevlex (overrides the file)");
    gi->add_flag("--json", out.as_json);
    gi->add_flag("--timings", out.with_timings);

    auto* ho = app.add_subcommand("homogenize", "multigraded homogenization of an ideal");
    ho->add_option("--ideal", idealFile, "ideal file over the base grid")->required();
    ho->add_flag("--json", out.as_json);
    ho->add_flag("--timings", out.with_timings);

    auto* zs = app.add_subcommand("zstar", "largest multigraded subideal of a linear ideal");
    zs->add_option("--ideal", idealFile, "ideal file with linear generators")->required();
    zs->add_flag("--json", out.as_json);
    zs->add_flag("--timings", out.with_timings);

    auto* ve = app.add_subcommand("verify", "run acceptance criteria");
    ve->add_option("which", which, "all or a criterion number 1..13");
    ve->add_option("--seed", seed, "random seed");
    ve->add_flag("--json", out.as_json);
    ve->add_flag("--timings", out.with_timings);

    try {
        app.parse(argc, argv);
        if (md->parsed()) return cmd_multidegree(m, n, t, route, out);
        if (sc->parsed()) return cmd_schur(lambda, n, out);
        if (ko->parsed()) return cmd_kostka(lambda, mu, tableaux, out);
        if (su->parsed()) return cmd_schubert(word, out);
        if (be->parsed()) return cmd_binedge(graphFile, seed, cap, out);
        if (gi->parsed()) return cmd_gin(idealFile, trials, seed, orderFlag, out);
        if (ho->parsed()) return cmd_homogenize(idealFile, out);
        if (zs->parsed()) return cmd_zstar(idealFile, out);
        if (ve->parsed()) return cmd_verify(which, seed, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DeskScaleExceeded& e) {
        std::cerr << "DESK-SCALE-EXCEEDED: " << e.what() << "\n";
        return 3;
    } catch (const NonGenericError& e) {
        std::cerr << "NON-GENERIC: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
