// Command-line front end: class-group constants, quadratic-field data,
// progression constants, and the counting experiments.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "irred/experiment.hpp"
#include "irred/json_io.hpp"

using namespace irred;
using nlohmann::json;

namespace {

QIInteger parse_alpha(const QuadField& k, const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--alpha expects x,y");
    long long x = std::stoll(s.substr(0, comma));
    long long y = std::stoll(s.substr(comma + 1));
    // x,y name the element (x + y sqrt(d))/2 when d = 1 mod 4 (half-integer
    // coordinates, the usual way those elements are written), and x + y
    // sqrt(d) otherwise
    long long dm4 = ((k.d() % 4) + 4) % 4;
    if (dm4 == 1) {
        if (((x - y) % 2 + 2) % 2 != 0)
            throw CLI::ValidationError("--alpha needs x = y (mod 2) for d = 1 (mod 4)");
        return {(x - y) / 2, y};
    }
    return {x, y};
}

QIIdeal parse_modulus(const QuadField& k, const std::string& s) {
    std::vector<long long> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        parts.push_back(std::stoll(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (parts.size() == 1) return integer_ideal(k, parts[0]);
    if (parts.size() == 3) {
        QIIdeal m{parts[0], parts[1], parts[2]};
        // round-trip through the HNF builder to validate
        QIIdeal check = gcd_ideal(k, m, m);
        if (!(check == m)) throw CLI::ValidationError("--modulus triple is not a valid HNF ideal");
        return m;
    }
    throw CLI::ValidationError("--modulus expects n or a,b,c");
}

std::vector<long long> parse_grid(const std::string& s) {
    std::vector<long long> grid;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        grid.push_back(std::llround(std::stod(s.substr(pos, comma - pos))));
        pos = comma + 1;
    }
    return grid;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        f << text << "\n";
    }
}

json group_report(const FiniteAbelianGroup& g, uint64_t seed) {
    ClassOrdering ord = canonical_ordering(g);
    DavenportResult dav = davenport(g);
    TypeSet irr = enumerate_irreducible_types(ord);
    TypeSet tmax = maximal_types(ord);
    PolynomialP p = build_p(tmax);
    MaximizationResult m = maximize_on_simplex(p, p.h, seed);

    json jp = json::array();
    for (const auto& mono : p.monomials)
        jp.push_back({{"exponents", mono.exponents},
                      {"num", mono.coefficient.num()},
                      {"den", mono.coefficient.den()}});
    json witness = json::array();
    for (const auto& e : dav.witness) witness.push_back(e.coords);
    return {{"group", to_json(g)},
            {"ordering", to_json(ord)},
            {"D", dav.D},
            {"davenport_witness", witness},
            {"irreducible_types", to_json(irr)},
            {"maximal_types", to_json(tmax)},
            {"P", jp},
            {"M", m.m},
            {"maximization", to_json(m)}};
}

int emit_or_all(const json& j, const std::string& emit, const std::string& out) {
    if (emit.empty()) {
        write_output(j.dump(2), out);
        return 0;
    }
    if (!j.contains(emit)) {
        std::cerr << "unknown --emit field: " << emit << "\n";
        return 1;
    }
    const json& v = j.at(emit);
    if (v.is_number_float()) {
        char buf[64];
        snprintf(buf, sizeof buf, "%.10g", v.get<double>());
        write_output(buf, out);
    } else {
        write_output(v.dump(), out);
    }
    return 0;
}

int run_verify() {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    };

    bool group_ok = true;
    for (long long n = 1; n <= 8 && group_ok; ++n)
        for (const auto& inv : abelian_groups_of_order(n)) {
            FiniteAbelianGroup g = make_group(inv);
            ClassOrdering ord = canonical_ordering(g);
            if (ord.class_at(g.order()) != identity_element(g)) group_ok = false;
            for (long long i = 1; i <= g.order(); ++i)
                if (add(g, ord.class_at(i), inverse(g, ord.class_at(i))) != identity_element(g))
                    group_ok = false;
        }
    check("group laws and canonical orderings (h <= 8)", group_ok);

    bool dav_ok = true;
    for (long long n = 2; n <= 8; ++n)
        if (davenport(make_group({n})).D != n) dav_ok = false;
    if (davenport(make_group({2, 4})).D != 5) dav_ok = false;
    check("davenport closed forms", dav_ok);

    bool opt_ok = true;
    for (long long n = 2; n <= 4; ++n) {
        for (const auto& inv : abelian_groups_of_order(n)) {
            ClassOrdering ord = canonical_ordering(make_group(inv));
            PolynomialP p = build_p(maximal_types(ord));
            MaximizationResult m = maximize_on_simplex(p, p.h);
            if (m.kkt_residual > 1e-8) opt_ok = false;
        }
    }
    check("optimizer stationarity (h <= 4)", opt_ok);

    bool hnf_ok = true;
    QuadField k23(-23);
    auto primes = enumerate_prime_ideals(k23, 100);
    for (size_t i = 0; i < primes.size() && hnf_ok; ++i)
        for (size_t j = i; j < primes.size(); ++j) {
            QIIdeal ab = multiply(k23, primes[i].ideal, primes[j].ideal);
            if (ideal_norm(ab) != primes[i].norm * primes[j].norm) hnf_ok = false;
        }
    check("HNF products multiplicative (d=-23)", hnf_ok);

    QIInteger alpha{0, 1};
    QIIdeal m3 = integer_ideal(k23, 3);
    bool dual_ok = scan::progression_element_scan(k23, 1500, m3, alpha, scan::Mode::Parallel) ==
                   scan::progression_ideal_scan(k23, 1500, m3, alpha, scan::Mode::Parallel);
    check("dual-path progression count (d=-23, x=1500)", dual_ok);

    std::cout << (failures == 0 ? "verification passed" : "verification FAILED") << "\n";
    return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constants of irreducible factorization in imaginary quadratic fields"};
    app.require_subcommand(1);

    std::string invariants_s, emit, out, alpha_s, modulus_s, xgrid_s, format = "json", gamma_s;
    long long d = 0;
    long long x_single = 0;
    double big_x = 0.0;
    uint64_t seed = 20240913;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--emit", emit, "emit a single field of the JSON output");
        sub->add_option("--out", out, "write output to a file instead of stdout");
        sub->add_option("--seed", seed, "seed for the optimizer restarts");
        sub->add_option("--format", format, "json or csv");
    };

    CLI::App* group = app.add_subcommand("group", "constants of an abstract class group");
    group->add_option("--invariants", invariants_s, "invariant factors, e.g. 2,4")->required();
    add_common(group);

    CLI::App* field = app.add_subcommand("field", "class group data of Q(sqrt(d))");
    field->add_option("--d", d, "negative squarefree d")->required();
    long long primes_to = 0;
    field->add_option("--primes", primes_to, "stream prime ideals of norm <= X as JSON lines");
    add_common(field);

    CLI::App* constants = app.add_subcommand("constants", "factorization constants for given inputs");
    constants->add_option("--d", d, "negative squarefree d");
    constants->add_option("--invariants", invariants_s, "invariant factors of an abstract group");
    constants->add_option("--modulus", modulus_s, "modulus ideal: n or a,b,c");
    constants->add_option("--alpha", alpha_s, "progression base element x,y");
    add_common(constants);

    CLI::App* count = app.add_subcommand("count", "counting experiments");
    count->add_option("--d", d, "negative squarefree d")->required();
    count->add_option("--xgrid", xgrid_s, "comma-separated grid, e.g. 1e4,1e5");
    count->add_option("--modulus", modulus_s, "modulus ideal");
    count->add_option("--alpha", alpha_s, "progression base element");
    count->add_option("--x", x_single, "single bound for maxnu");
    count->add_option("--bigx", big_x, "X for the extremal construction");
    count->add_option("--gamma", gamma_s, "simplex point for the extremal construction");
    add_common(count);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    add_common(verify);

    CLI::App* report = app.add_subcommand("report", "merge experiment reports");
    std::vector<std::string> report_files;
    report->add_option("files", report_files, "JSON report files to merge");
    add_common(report);

    CLI11_PARSE(app, argc, argv);

    try {
        if (group->parsed()) {
            std::vector<long long> inv;
            if (!invariants_s.empty() && invariants_s != "1")
                inv = parse_grid(invariants_s);
            return emit_or_all(group_report(make_group(inv), seed), emit, out);
        }

        if (field->parsed()) {
            QuadField k(d);
            if (primes_to > 0) {
                std::ofstream fout;
                std::ostream* os = &std::cout;
                if (!out.empty()) {
                    fout.open(out);
                    os = &fout;
                }
                for_each_prime_ideal(k, primes_to,
                                     [&](const PrimeIdealRec& r) { *os << to_json(r) << "\n"; });
                return 0;
            }
            json forms = json::array();
            for (long long i = 1; i <= k.class_number(); ++i) {
                const QuadForm& f = k.class_form(i);
                forms.push_back({f.a, f.b, f.c});
            }
            json j{{"d", k.d()},
                   {"disc", k.disc()},
                   {"h", k.class_number()},
                   {"w", k.unit_count()},
                   {"D", k.davenport_constant()},
                   {"class_group", to_json(k.class_group())},
                   {"ordering", to_json(k.ordering())},
                   {"forms", forms}};
            return emit_or_all(j, emit, out);
        }

        if (constants->parsed()) {
            if (d == 0 && !invariants_s.empty()) {
                std::vector<long long> inv = parse_grid(invariants_s);
                return emit_or_all(group_report(make_group(inv), seed), emit, out);
            }
            QuadField k(d);
            if (modulus_s.empty() || alpha_s.empty())
                return emit_or_all(group_report(k.class_group(), seed), emit, out);
            QIIdeal m = parse_modulus(k, modulus_s);
            QIInteger alpha = parse_alpha(k, alpha_s);
            QIIdeal g = gcd_ideal(k, principal_ideal(k, alpha), m);
            TypeVec tau_prime = ideal_type(k, g);
            if (!is_weakly_coprime_type(k.ordering(), tau_prime)) {
                json j{{"degenerate", true},
                       {"tau_prime", tau_prime},
                       {"g", to_json(g)},
                       {"note", "alpha and modulus are not weakly relatively prime"}};
                return emit_or_all(j, emit, out);
            }
            ProgressionInstance inst;
            inst.ordering = &k.ordering();
            inst.tau_prime = tau_prime;
            inst.norm_g = ideal_norm(g);
            inst.phi = ray_phi(k, make_ray_modulus(k, scan::ideal_quotient_exact(k, m, g)));
            ProgressionConstants c = progression_constants(inst);
            json j{{"C_prime", to_json(c.c_prime)},
                   {"L", c.L},
                   {"type_sum", to_json(c.type_sum)},
                   {"tau_prime", tau_prime},
                   {"norm_g", inst.norm_g},
                   {"phi", to_json(inst.phi)},
                   {"g", to_json(g)}};
            return emit_or_all(j, emit, out);
        }

        if (count->parsed()) {
            QuadField k(d);
            std::string kind = emit.empty() ? "landau" : emit;
            ExperimentReport rep;
            if (kind == "landau") {
                rep = landau_check(k, parse_grid(xgrid_s));
            } else if (kind == "mertens") {
                MertensTable t = mertens_by_class(k, parse_grid(xgrid_s));
                write_output(to_json(t).dump(2), out);
                return 0;
            } else if (kind == "progression") {
                rep = progression_experiment(k, parse_modulus(k, modulus_s),
                                             parse_alpha(k, alpha_s), parse_grid(xgrid_s));
            } else if (kind == "maxnu") {
                rep = max_nu_experiment(k, x_single);
            } else if (kind == "extremal") {
                std::vector<long long> gg = parse_grid(gamma_s);
                SimplexPoint gamma(gg.begin(), gg.end());
                ExtremalIdeal e = build_extremal_ideal(k, big_x, gamma);
                json j{{"ideal", to_json(e.ideal)},
                       {"norm", ideal_norm(e.ideal)},
                       {"omega", e.omega},
                       {"nu", nu(k, e.ideal)}};
                write_output(j.dump(2), out);
                return 0;
            } else {
                std::cerr << "unknown experiment: " << kind << "\n";
                return 1;
            }
            rep.seed = seed;
            if (format == "csv")
                write_output(report_to_csv(rep), out);
            else
                write_output(to_json(rep).dump(2), out);
            return 0;
        }

        if (verify->parsed()) return run_verify();

        if (report->parsed()) {
            json merged = json::array();
            for (const std::string& path : report_files) {
                std::ifstream f(path);
                if (!f) {
                    std::cerr << "cannot open " << path << "\n";
                    return 1;
                }
                merged.push_back(json::parse(f));
            }
            if (format == "csv") {
                std::string csv = "experiment,label,x,observed,predicted,ratio\n";
                for (const json& r : merged) {
                    for (const json& s : r.at("series")) {
                        const auto& xs = r.at("x_grid");
                        for (size_t i = 0; i < xs.size(); ++i) {
                            csv += r.at("experiment").get<std::string>() + "," +
                                   s.at("label").get<std::string>() + "," +
                                   std::to_string(xs[i].get<long long>());
                            auto cell = [&](const char* key) {
                                const json& arr = s.at(key);
                                csv += ",";
                                if (i < arr.size()) csv += std::to_string(arr[i].get<double>());
                            };
                            cell("observed");
                            cell("predicted");
                            cell("ratio");
                            csv += "\n";
                        }
                    }
                }
                write_output(csv, out);
            } else {
                write_output(merged.dump(2), out);
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
