#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "circa/json_io.hpp"
#include "circa/lab.hpp"

namespace {

using namespace circa;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct Options {
    long precision = 30;
    std::uint64_t budget = 100000;
    std::string output;
};

std::ostream& out_stream(const Options& opt, std::ofstream& file) {
    if (opt.output.empty()) return std::cout;
    file.open(opt.output);
    if (!file) throw std::invalid_argument("cannot open output file '" + opt.output + "'");
    return file;
}

void emit(const Options& opt, const std::string& text) {
    std::ofstream file;
    std::ostream& os = out_stream(opt, file);
    os << text;
    os.flush();
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

std::vector<std::uint64_t> parse_set(const std::string& csv) {
    std::vector<std::uint64_t> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stoull(item));
    }
    if (values.empty()) throw std::invalid_argument("empty set literal '" + csv + "'");
    return values;
}

std::shared_ptr<Enumerator> make_enumerator(const std::string& set_csv,
                                            const std::string& program_path) {
    if (!set_csv.empty() && !program_path.empty())
        throw std::invalid_argument("give either --set or --program, not both");
    if (!set_csv.empty())
        return std::make_shared<Enumerator>(Enumerator::finite(parse_set(set_csv)));
    if (!program_path.empty()) return enumerator_from_json(load_json(program_path));
    throw std::invalid_argument("need --set or --program");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run(int argc, char** argv) {
    CLI::App app{
        "circa: exact computable reals, certified trigonometric series, radial waves,\n"
        "and budgeted semidecision procedures. Every certified value is printed as an\n"
        "interval {lo, hi, bits} with exact decimal endpoints; no bare floats."};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("CIRCA_PRECISION")) opt.precision = std::atol(env);
    app.add_option("--precision", opt.precision,
                   "certified output width target 2^-precision (env CIRCA_PRECISION)")
        ->capture_default_str();
    app.add_option("--budget", opt.budget, "step/round budget for semidecision commands")
        ->capture_default_str();
    app.add_option("-o,--output", opt.output, "write output to a file instead of stdout");

    // --- eval ---------------------------------------------------------
    auto* eval_cmd = app.add_subcommand(
        "eval", "evaluate a trigonometric polynomial at rational t.\n"
                "Input: --poly JSON {degree, bits, cos:[{lo,hi,bits}...], sin:[...]}");
    std::string eval_poly, eval_t;
    eval_cmd->add_option("--poly", eval_poly, "polynomial JSON file")->required();
    eval_cmd->add_option("--t", eval_t, "rational or decimal argument")->required();

    // --- sup ----------------------------------------------------------
    auto* sup_cmd = app.add_subcommand("sup", "certified sup-norm of a trigonometric polynomial");
    std::string sup_poly;
    bool sup_deriv = false;
    sup_cmd->add_option("--poly", sup_poly, "polynomial JSON file")->required();
    sup_cmd->add_flag("--derivative", sup_deriv, "take the derivative first");

    // --- ua-build -----------------------------------------------------
    auto* ua_cmd = app.add_subcommand(
        "ua-build", "build the partial sum u_m = sum 2^-phi(n) p_n for an enumerated set");
    std::string ua_set, ua_program, ua_eval;
    unsigned ua_m = 1;
    ua_cmd->add_option("--set", ua_set, "finite set literal, e.g. \"1,3\"");
    ua_cmd->add_option("--program", ua_program, "enumerator program JSON file");
    ua_cmd->add_option("--m", ua_m, "number of terms")->required();
    ua_cmd->add_option("--eval", ua_eval, "also evaluate u_m at this rational t");

    // --- compile-sigma1 -------------------------------------------------
    auto* cs_cmd = app.add_subcommand(
        "compile-sigma1",
        "compile a Sigma_1 representation into u_m and certify ||u_m'||_inf");
    std::string cs_set, cs_program;
    unsigned cs_m = 1;
    cs_cmd->add_option("--set", cs_set, "finite set literal");
    cs_cmd->add_option("--program", cs_program, "enumerator program JSON file");
    cs_cmd->add_option("--m", cs_m, "number of terms")->required();

    // --- dseq -----------------------------------------------------------
    auto* dseq_cmd = app.add_subcommand(
        "dseq", "Poisson lower-bound sequence d_n for ||u'||_inf (CSV: n,d_lo,d_hi)");
    std::string dseq_poly, dseq_set, dseq_program;
    unsigned dseq_m = 1, dseq_nmax = 8;
    dseq_cmd->add_option("--poly", dseq_poly, "polynomial JSON file");
    dseq_cmd->add_option("--set", dseq_set, "finite set literal (builds u_m first)");
    dseq_cmd->add_option("--program", dseq_program, "enumerator program JSON file");
    dseq_cmd->add_option("--m", dseq_m, "terms when building from a set");
    dseq_cmd->add_option("--n-max", dseq_nmax, "last index n (starts at 2)");

    // --- wave -----------------------------------------------------------
    auto* wave_cmd = app.add_subcommand(
        "wave", "radial wave solution at the origin, u(t,0) = q(t) + t q'(t).\n"
                "Profile JSON: {knots:[rat...], pieces:[[rat...]...], scale, pi_power},\n"
                "knots in units of pi");
    std::string wave_profile, wave_t, wave_sweep;
    wave_cmd->add_option("--profile", wave_profile, "profile JSON file")->required();
    wave_cmd->add_option("--t", wave_t, "rational time");
    wave_cmd->add_option("--sweep", wave_sweep, "CSV sweep t0:t1:steps instead of one t");

    // --- wave-check -------------------------------------------------------
    auto* wc_cmd = app.add_subcommand(
        "wave-check", "compare the closed form against the spherical-mean quadrature oracle");
    std::string wc_profile, wc_t;
    double wc_h = 1.0 / 128;
    wc_cmd->add_option("--profile", wc_profile, "profile JSON file")->required();
    wc_cmd->add_option("--t", wc_t, "rational time")->required();
    wc_cmd->add_option("--h", wc_h, "time-difference step")->capture_default_str();

    // --- semidecide ---------------------------------------------------------
    auto* semi_cmd = app.add_subcommand(
        "semidecide", "run a positivity/threshold semidecider under a step budget");
    std::string semi_x, semi_below;
    bool semi_positive = false;
    semi_cmd->add_option("--x", semi_x, "rational input x")->required();
    semi_cmd->add_flag("--positive", semi_positive, "semidecide x > 0");
    semi_cmd->add_option("--below", semi_below, "semidecide x < c for this rational c");

    // --- search-bound ----------------------------------------------------
    auto* search_cmd = app.add_subcommand(
        "search-bound",
        "dovetailing dyadic search for upper bounds of a computable x; emits the\n"
        "event log [{round, event: spawn|halt|emit, value}]");
    std::string search_x;
    search_cmd->add_option("--x", search_x, "rational x in [0,1)")->required();

    // --- enum-run ----------------------------------------------------------
    auto* enum_cmd = app.add_subcommand("enum-run", "step an enumerator under a budget");
    std::string enum_set, enum_program;
    enum_cmd->add_option("--set", enum_set, "finite set literal");
    enum_cmd->add_option("--program", enum_program, "enumerator program JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (opt.precision < 1) throw std::invalid_argument("precision must be >= 1");
    if (opt.budget < 1) throw std::invalid_argument("budget must be >= 1");
    const long prec = opt.precision;

    if (eval_cmd->parsed()) {
        TrigPoly p = trigpoly_from_json(load_json(eval_poly));
        Interval v = p.eval(Rational::from_string(eval_t), prec);
        emit(opt, dump(interval_to_json(v, prec)));
        return kExitOk;
    }

    if (sup_cmd->parsed()) {
        TrigPoly p = trigpoly_from_json(load_json(sup_poly));
        if (sup_deriv) p = p.derivative();
        emit(opt, dump(interval_to_json(p.sup_norm(prec), prec)));
        return kExitOk;
    }

    if (ua_cmd->parsed()) {
        auto e = make_enumerator(ua_set, ua_program);
        BlockSum u = block_partial_sum(*e, ua_m, opt.budget);
        json j{{"terms", u.exponents.size()}, {"saturated", u.saturated}};
        j["exponents"] = u.exponents;
        if (!ua_eval.empty()) {
            Interval v = u.poly.eval(Rational::from_string(ua_eval), prec);
            j["value"] = interval_to_json(v, prec);
        } else {
            j["poly"] = trigpoly_to_json(u.poly, prec);
        }
        emit(opt, dump(j));
        return kExitOk;
    }

    if (cs_cmd->parsed()) {
        auto e = make_enumerator(cs_set, cs_program);
        BlockSum u = compile_sigma1(*e, cs_m, opt.budget);
        Interval dsup = u.poly.derivative().sup_norm(prec);
        json j{{"terms", u.exponents.size()},
               {"saturated", u.saturated},
               {"derivative_sup", interval_to_json(dsup, prec)},
               {"poly", trigpoly_to_json(u.poly, prec)}};
        j["exponents"] = u.exponents;
        emit(opt, dump(j));
        return kExitOk;
    }

    if (dseq_cmd->parsed()) {
        TrigPoly p;
        if (!dseq_poly.empty()) {
            p = trigpoly_from_json(load_json(dseq_poly));
        } else {
            auto e = make_enumerator(dseq_set, dseq_program);
            p = block_partial_sum(*e, dseq_m, opt.budget).poly;
        }
        std::ostringstream csv;
        csv << "n,d_lo,d_hi\n";
        for (unsigned n = 2; n <= dseq_nmax; ++n) {
            Interval d = poisson_lower_bound(p, n, prec);
            csv << n << "," << d.lo().to_decimal() << "," << d.hi().to_decimal() << "\n";
        }
        emit(opt, csv.str());
        return kExitOk;
    }

    if (wave_cmd->parsed()) {
        RadialProfile q = profile_from_json(load_json(wave_profile));
        if (!wave_sweep.empty()) {
            auto c1 = wave_sweep.find(':');
            auto c2 = wave_sweep.find(':', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw std::invalid_argument("--sweep needs t0:t1:steps");
            Rational t0 = Rational::from_string(wave_sweep.substr(0, c1));
            Rational t1 = Rational::from_string(wave_sweep.substr(c1 + 1, c2 - c1 - 1));
            long steps = std::stol(wave_sweep.substr(c2 + 1));
            if (steps < 1 || t1 <= t0) throw std::invalid_argument("bad sweep range");
            std::ostringstream csv;
            csv << "t,u_lo,u_hi\n";
            for (long i = 0; i <= steps; ++i) {
                Rational t = t0 + (t1 - t0) * Rational(i, steps);
                if (t.sign() <= 0) continue;
                Interval v = q.wave_at_origin(t, prec);
                csv << *t.to_decimal() << "," << v.lo().to_decimal() << ","
                    << v.hi().to_decimal() << "\n";
            }
            emit(opt, csv.str());
            return kExitOk;
        }
        if (wave_t.empty()) throw std::invalid_argument("need --t or --sweep");
        Interval v = q.wave_at_origin(Rational::from_string(wave_t), prec);
        emit(opt, dump(interval_to_json(v, prec)));
        return kExitOk;
    }

    if (wc_cmd->parsed()) {
        RadialProfile q = profile_from_json(load_json(wc_profile));
        const Rational t = Rational::from_string(wc_t);
        Interval closed = q.wave_at_origin(t, prec);
        double oracle = kirchhoff_quadrature_refined(q, t.to_double(), {0.0, 0.0, 0.0}, wc_h);
        double mid = closed.mid().to_double();
        json j{{"closed_form", interval_to_json(closed, prec)},
               {"oracle", oracle},
               {"oracle_certified", false},
               {"difference", oracle - mid}};
        emit(opt, dump(j));
        return kExitOk;
    }

    if (semi_cmd->parsed()) {
        if (semi_positive == !semi_below.empty())
            throw std::invalid_argument("choose exactly one of --positive / --below C");
        CReal x = CReal::constant(Rational::from_string(semi_x));
        SteppedMachine m = semi_positive
                               ? semidecide_positive(x)
                               : semidecide_below(x, Rational::from_string(semi_below));
        for (std::uint64_t i = 0; i < opt.budget && !m.halted(); ++i) m.step();
        if (m.halted()) {
            emit(opt, dump(json{{"status", "halted"}, {"steps", *m.halted_at()}}));
            return kExitOk;
        }
        emit(opt, dump(json{{"status", "running"}, {"steps", m.steps_taken()}}));
        return kExitBudget;
    }

    if (search_cmd->parsed()) {
        const Rational x = Rational::from_string(search_x);
        if (x.sign() < 0 || x >= Rational(1))
            throw std::invalid_argument("search-bound: x must lie in [0, 1)");
        CReal cx = CReal::constant(x);
        SearchResult r = dyadic_bound_search(
            [&cx](const Rational& lambda) { return upper_bound_detector(cx, lambda); },
            opt.budget);
        emit(opt, dump(search_log_to_json(r)));
        return r.bounds.empty() ? kExitBudget : kExitOk;
    }

    if (enum_cmd->parsed()) {
        auto e = make_enumerator(enum_set, enum_program);
        std::vector<std::uint64_t> emitted = e->step(opt.budget);
        json j{{"emitted", emitted},
               {"steps", e->steps_taken()},
               {"exhausted", e->exhausted()},
               {"partial_sum", e->partial_sum_at_step(e->steps_taken()).to_string()}};
        emit(opt, dump(j));
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const circa::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
