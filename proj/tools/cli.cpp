#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli.hpp"
#include "isocensus/census.hpp"
#include "isocensus/report_io.hpp"

namespace isocensus::cli {

using nlohmann::json;

int exit_code(error_code c)
{
    switch (c) {
    case error_code::bound_exceeded:
    case error_code::budget_exhausted:
    case error_code::torsion_not_found:
        return exit_bound;
    case error_code::io:
        return exit_io;
    default:
        return exit_validation;
    }
}

std::vector<std::pair<std::string, std::string>> read_config(std::string const & path)
{
    std::istringstream in(read_file(path));
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(error_code::invalid_argument, "config line without '=': " + line);
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

namespace {

json matrix_json(zmat const & A)
{
    json rows = json::array();
    for (unsigned i = 0; i < A.rows; i++) {
        json r = json::array();
        for (unsigned j = 0; j < A.cols; j++)
            r.push_back(A(i, j));
        rows.push_back(r);
    }
    return rows;
}

/* options given in the config file are appended unless the command line has them */
std::vector<std::string> merge_config(std::vector<std::string> args)
{
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); i++) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + i);
            break;
        }
    }
    if (!path)
        return args;
    auto present = [&](std::string const & flag) {
        return std::any_of(args.begin(), args.end(), [&](std::string const & a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    };
    for (auto const & [k, v] : read_config(*path)) {
        std::string flag = "--" + k;
        if (present(flag))
            continue;
        if (v == "true") {
            args.push_back(flag);
        } else if (v != "false") {
            args.push_back(flag);
            std::istringstream vs(v);
            std::string tok;
            while (vs >> tok)
                args.push_back(tok);
        }
    }
    return args;
}

struct context {
    std::string format = "json";
    std::string output;
    /* filled by the active subcommand */
    std::function<void()> action;
    std::string payload;
};

void require_json(context const & c, char const * cmd)
{
    if (c.format != "json")
        fail(error_code::invalid_argument, std::string(cmd) + " supports only json output");
}

std::string emit_reports(context const & c, std::vector<census_report> const & reports)
{
    return c.format == "csv" ? emit_csv(reports) : emit_json(reports);
}

} // namespace

int run(std::vector<std::string> args, std::ostream & out, std::ostream & err)
{
    auto report_error = [&](std::string const & code, std::string const & msg, int status) {
        err << canonical_dump(json{{"error", {{"code", code}, {"message", msg}}}});
        return status;
    };
    context ctx;
    CLI::App app{"Isogeny class census for products of elliptic curves over finite fields",
                 "isogeny_census"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", ctx.output, "write output to this file instead of stdout");
    app.add_option("--config", "key=value file with default flags (flags win)");

    /* ---- count-lagrangians */
    i64 ell = 2;
    unsigned m = 1;
    i64 bound = default_symplectic_bound;
    auto * lag = app.add_subcommand("count-lagrangians", "maximal isotropic subgroups of A[ell^m]");
    lag->add_option("--ell", ell)->required();
    lag->add_option("--m", m)->required();
    lag->add_option("--bound", bound, "limit on ell^(4m)");
    lag->callback([&] {
        ctx.action = [&] {
            require_json(ctx, "count-lagrangians");
            if (!is_prime(ell) || m < 1)
                fail(error_code::invalid_argument, "need prime ell and m >= 1");
            auto M = make_symplectic_module(ell, m);
            auto L = enumerate_lagrangians(M, bound);
            i64 t1 = 0, graphs = 0;
            for (auto const & H : L) {
                auto ty = classify_type(H, M);
                t1 += ty.tag == isotropy_type::kind::product;
                graphs += ty.graph.has_value();
            }
            i64 total = static_cast<i64>(L.size());
            ctx.payload = canonical_dump({{"kind", "lagrangian_count"},
                                          {"ell", ell},
                                          {"m", m},
                                          {"count", total},
                                          {"type1", t1},
                                          {"type2", total - t1},
                                          {"graph_planes", graphs},
                                          {"formula", lagrangian_count_formula(ell, m)}});
        };
    });

    /* ---- classify-frobenius */
    i64 t = 0, q = 5;
    unsigned n = 1;
    std::string model = "companion";
    i64 ca = -1, cb = -1, disc = 0;
    auto * cf = app.add_subcommand("classify-frobenius", "action of pi^n on E[ell^m]");
    cf->add_option("--t", t, "trace of Frobenius over F_q");
    cf->add_option("--q", q)->required();
    cf->add_option("--n", n);
    cf->add_option("--ell", ell)->required();
    cf->add_option("--m", m)->required();
    cf->add_option("--model", model)->check(CLI::IsMember({"companion", "order", "curve"}));
    cf->add_option("--a", ca, "curve coefficient (field index) for the curve model");
    cf->add_option("--b", cb, "curve coefficient (field index) for the curve model");
    cf->add_option("--disc", disc, "order discriminant for the order model");
    cf->callback([&] {
        ctx.action = [&] {
            require_json(ctx, "classify-frobenius");
            if (!is_prime(ell) || m < 1 || n < 1)
                fail(error_code::invalid_argument, "need prime ell, m >= 1 and n >= 1");
            auto pp = make_prime_power(q);
            if (ell == pp.p)
                fail(error_code::invalid_argument, "ell must differ from p");
            frobenius_matrix fm;
            if (model == "curve") {
                if (ca < 0 || cb < 0)
                    fail(error_code::invalid_argument, "the curve model needs --a and --b");
                auto E = make_curve(make_field(pp.p, pp.k), ca, cb);
                t = trace_of_frobenius(E);
                fm = explicit_frobenius_matrix(E, n, ell, m);
            }
            auto fd = make_frobenius_data(t, q, n);
            if (model == "companion")
                fm = companion_matrix(fd, ell, m);
            else if (model == "order")
                fm = order_model_matrix(fd, ell, m, disc);
            auto c = classify(fm);
            zmod_ring R(ell, m);
            json j{{"kind", "frobenius_class"},
                   {"model", model},
                   {"t", t},
                   {"q", q},
                   {"n", n},
                   {"ell", ell},
                   {"m", m},
                   {"t_n", fd.t_n},
                   {"delta_n", fd.delta_n},
                   {"matrix", matrix_json(fm.entries)},
                   {"trace", R.red(fm.entries(0, 0) + fm.entries(1, 1))},
                   {"det", det2(fm.entries, R.n)},
                   {"tag", std::string(to_string(c.tag))},
                   {"case", std::string(case_label(c.tag))},
                   {"r", c.r},
                   {"rational", c.rational_eigenvalues},
                   {"scalar_level", c.scalar_level}};
            j["lambda"] = c.lambda ? json(*c.lambda) : json(nullptr);
            j["mu"] = c.mu ? json(*c.mu) : json(nullptr);
            j["horizontal"] =
                c.tag == frobenius_tag::non_semisimple ? json(nullptr) : json(horizontal_count(c));
            ctx.payload = canonical_dump(j);
        };
    });

    /* ---- count-reps */
    std::string form = "four_squares";
    i64 rn = 0, limit = default_representation_limit;
    auto * cr = app.add_subcommand("count-reps", "representation numbers of quaternary forms");
    cr->add_option("--form", form)->check(CLI::IsMember({"four_squares", "hurwitz_p2", "maximal_p3"}));
    cr->add_option("--n", rn)->required();
    cr->add_option("--limit", limit);
    cr->callback([&] {
        ctx.action = [&] {
            require_json(ctx, "count-reps");
            auto f = form_by_name(form);
            ctx.payload = canonical_dump({{"kind", "representation_count"},
                                          {"form", form},
                                          {"n", rn},
                                          {"det", f.det()},
                                          {"r", count_representations(f, rn, limit)}});
        };
    });

    /* ---- count-norm */
    i64 d = 1;
    auto * cn = app.add_subcommand("count-norm", "ideals of given norm in a quadratic order");
    cn->add_option("--disc", disc)->required();
    cn->add_option("--d", d)->required();
    cn->callback([&] {
        ctx.action = [&] {
            require_json(ctx, "count-norm");
            json prof = json::array();
            for (auto const & e : factorization_profile(disc, d))
                prof.push_back({{"prime", e.prime},
                                {"exponent", e.exponent},
                                {"splitting", std::string(to_string(e.tag))}});
            ctx.payload = canonical_dump({{"kind", "norm_count"},
                                          {"disc", disc},
                                          {"d", d},
                                          {"count", count_norm_d(disc, d)},
                                          {"cyclic", count_cyclic_norm_d(disc, d)},
                                          {"units", unit_count(disc)},
                                          {"profile", prof}});
        };
    });

    /* ---- class-number */
    auto * ch = app.add_subcommand("class-number", "class numbers of imaginary quadratic orders");
    ch->add_option("--disc", disc)->required();
    ch->callback([&] {
        ctx.action = [&] {
            require_json(ctx, "class-number");
            ctx.payload = canonical_dump({{"kind", "class_number"},
                                          {"disc", disc},
                                          {"h", class_number(disc)},
                                          {"hurwitz", to_json(hurwitz_class_number(disc))},
                                          {"kronecker", kronecker_class_number(disc)}});
        };
    });

    /* ---- ec-census */
    std::vector<unsigned> ns;
    std::optional<i64> et;
    double tau = 0.25;
    i64 ebound = static_cast<i64>(default_enumeration_bound);
    auto * ec = app.add_subcommand("ec-census", "curves geometrically isogenous to E over F_(q^n)");
    ec->add_option("--q", q)->required();
    ec->add_option("--n", ns)->required();
    ec->add_option("--a", ca);
    ec->add_option("--b", cb);
    ec->add_option("--t", et, "select the first curve over F_q with this trace");
    ec->add_option("--tau", tau);
    ec->add_option("--bound", ebound);
    ec->callback([&] {
        ctx.action = [&] {
            std::vector<census_report> reps;
            for (unsigned nn : ns) {
                ec_params P;
                P.q = q;
                P.n = nn;
                P.a = ca;
                P.b = cb;
                P.t = et;
                P.tau = tau;
                P.bound = static_cast<u64>(ebound);
                reps.push_back(ec_census(P));
            }
            ctx.payload = emit_reports(ctx, reps);
        };
    });

    /* ---- surface-census */
    surface_params sp;
    std::vector<i64> ells;
    std::vector<unsigned> ms;
    std::string filter = "coprime", templates = "standard";
    std::size_t budget = sp.space.budget;
    bool trivial = false;
    auto * sc = app.add_subcommand("surface-census", "Waterhouse classes of stable Lagrangians");
    sc->add_option("--q", sp.q)->required();
    sc->add_option("--t", sp.t)->required();
    sc->add_option("--t-ss", sp.t_ss);
    sc->add_option("--n", ns)->required();
    sc->add_option("--ell", ells)->required();
    sc->add_option("--m", ms)->required();
    sc->add_option("--filter", filter)->check(CLI::IsMember({"coprime", "non-coprime", "all"}));
    sc->add_option("--templates", templates)->check(CLI::IsMember({"standard", "full"}));
    sc->add_option("--budget", budget);
    sc->add_option("--c1", sp.bracket_n1, "constant of the N1 bracket");
    sc->add_option("--c2", sp.bracket_n2, "constant of the N2 bracket");
    sc->add_option("--disc", sp.disc, "discriminant of End(E)");
    sc->add_flag("--trivial-ring", trivial, "identity-only ring (no merging)");
    sc->callback([&] {
        ctx.action = [&] {
            std::vector<census_report> reps;
            sp.filter = parse_n_filter(filter);
            sp.space.mode = parse_template_mode(templates);
            sp.space.budget = budget;
            sp.trivial_ring = trivial;
            for (unsigned nn : ns)
                for (i64 l : ells)
                    for (unsigned mm : ms) {
                        sp.n = nn;
                        sp.ell = l;
                        sp.m = mm;
                        reps.push_back(surface_census(sp));
                    }
            ctx.payload = emit_reports(ctx, reps);
        };
    });

    /* ---- predict */
    i64 disc_k = 0, disc_order = 0;
    auto * pr = app.add_subcommand("predict", "predicted isogeny class size over F_(q^n)");
    pr->add_option("--t", t)->required();
    pr->add_option("--q", q)->required();
    pr->add_option("--n", n)->required();
    pr->add_option("--disc-k", disc_k);
    pr->add_option("--disc-order", disc_order);
    pr->add_option("--filter", filter)->check(CLI::IsMember({"coprime", "non-coprime", "all"}));
    pr->callback([&] {
        ctx.action = [&] {
            require_json(ctx, "predict");
            auto fd = make_frobenius_data(t, q, n);
            auto p = predicted_ec_size(fd, disc_k, disc_order);
            json growth = json::array();
            for (auto const & g : ramified_growth_report(t, q, p.disc_K, 1, n, parse_n_filter(filter)))
                growth.push_back({{"ell", g.ell}, {"n", g.n}, {"valuation", g.valuation}});
            ctx.payload = canonical_dump({{"kind", "prediction"},
                                          {"t", t},
                                          {"q", q},
                                          {"n", n},
                                          {"t_n", fd.t_n},
                                          {"delta_n", p.delta_n},
                                          {"disc_K", p.disc_K},
                                          {"disc_order", p.disc_order},
                                          {"unramified_part", p.unramified},
                                          {"class_number", p.class_number},
                                          {"predicted", p.predicted},
                                          {"sqrt_delta", p.sqrt_delta},
                                          {"ramified_growth", growth}});
        };
    });

    /* ---- verdict */
    std::string report_path, stratum;
    auto * vd = app.add_subcommand("verdict", "theorem verdicts for saved reports");
    vd->add_option("--report", report_path, "census report JSON file");
    vd->add_option("--stratum", stratum, "print the conjectured exponent of a stratum");
    vd->add_option("--tau", tau);
    vd->callback([&] {
        ctx.action = [&] {
            require_json(ctx, "verdict");
            if (report_path.empty() == stratum.empty())
                fail(error_code::invalid_argument, "give exactly one of --report and --stratum");
            if (!stratum.empty()) {
                ctx.payload = canonical_dump({{"kind", "conjecture"},
                                              {"stratum", stratum},
                                              {"exponent", to_json(conjectured_exponent(stratum))}});
                return;
            }
            auto reps = parse_reports(read_file(report_path));
            json vs = json::array();
            for (auto const & r : reps) {
                json v = to_json(theorem_verdict(r, tau));
                v["report"] = to_json(r);
                vs.push_back(v);
            }
            ctx.payload = canonical_dump({{"kind", "verdicts"}, {"verdicts", vs}});
        };
    });

    try {
        args = merge_config(std::move(args));
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        ctx.action();
        if (ctx.output.empty())
            out << ctx.payload;
        else
            write_file(ctx.output, ctx.payload);
        return exit_ok;
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return exit_ok;
    } catch (CLI::CallForAllHelp const &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (CLI::ParseError const & e) {
        return report_error("usage", e.what(), exit_validation);
    } catch (error const & e) {
        return report_error(std::string(to_string(e.code())), e.what(), exit_code(e.code()));
    }
}

} // namespace isocensus::cli
