// Command-line surface for the Fuchsian ODE toolkit: singularity analysis,
// Frobenius bases, connection/monodromy matrices, constant recognition,
// series-to-ODE guessing, the Ising model layer and the explicit fixtures.
//
// Exit codes: 0 success, 2 precondition violation or malformed input,
// 3 precision unreachable, 4 unresolved/none result.

#include "CLI11.hpp"
#include "json.hpp"

#include "fuchs/constants.hpp"
#include "fuchs/fixtures.hpp"
#include "fuchs/guess.hpp"
#include "fuchs/ising.hpp"
#include "fuchs/json_io.hpp"
#include "fuchs/monodromy.hpp"
#include "fuchs/recognize.hpp"
#include "fuchs/singular.hpp"
#include "fuchs/transport.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace fuchs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitUnresolved = 4;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << j.dump(2) << "\n";
}

LocalPoint parse_point(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo") return LocalPoint::infinity();
    return LocalPoint::at(rat_from_string(s));
}

std::vector<BigComplex> parse_waypoints(const std::vector<std::string>& specs, long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    std::vector<BigComplex> out;
    for (const auto& s : specs) {
        // "re" or "re,im" with decimal or rational entries
        auto comma = s.find(',');
        auto parse1 = [&](const std::string& t) {
            if (t.find('/') != std::string::npos) return BigFloat(rat_from_string(t), bits);
            return BigFloat::parse(t, digits + 15);
        };
        if (comma == std::string::npos)
            out.push_back(BigComplex(parse1(s), BigFloat(bits)));
        else
            out.push_back(BigComplex(parse1(s.substr(0, comma)), parse1(s.substr(comma + 1))));
    }
    return out;
}

json point_json(const SingularPoint& p) {
    json j;
    j["location"] = p.str();
    switch (p.kind()) {
        case SingularPoint::Kind::Rational:
            j["kind"] = "rational";
            j["value"] = p.rat().get_str();
            break;
        case SingularPoint::Kind::Infinity:
            j["kind"] = "infinity";
            break;
        case SingularPoint::Kind::Algebraic: {
            j["kind"] = "algebraic";
            json mp = json::array();
            for (const Rat& c : p.alg().min_poly.coeffs()) mp.push_back(c.get_str());
            j["min_poly"] = mp;
            j["enclosure"] = {p.alg().enclosure.re.str(30), p.alg().enclosure.im.str(30)};
            j["exact_exponent_arithmetic"] = p.exact_exponent_arithmetic();
            break;
        }
    }
    return j;
}

json exponents_json(const ExponentSet& e) {
    json j;
    json rs = json::array();
    for (const auto& [r, m] : e.rational)
        rs.push_back({{"value", r.get_str()}, {"multiplicity", m}});
    j["rational"] = rs;
    json is = json::array();
    for (const auto& z : e.irrational) is.push_back({z.re.str(25), z.im.str(25)});
    j["irrational"] = is;
    return j;
}

int cmd_analyze(const std::string& ode_path, long digits, const std::string& out) {
    FuchsianODE ode = io::ode_from_json_file(ode_path);
    json rep;
    rep["command"] = "analyze";
    rep["ode"] = json::parse(io::ode_to_json(ode));
    auto fr = is_fuchsian(ode);
    rep["fuchsian"] = fr.fuchsian;
    json pts = json::array();
    for (const SingularPoint& p : singular_points(ode)) {
        json jp = point_json(p);
        try {
            jp["exponents"] = exponents_json(indicial_exponents(ode, p, digits));
            jp["regular"] = true;
        } catch (const std::domain_error&) {
            jp["regular"] = false;
        }
        if (p.is_rational()) {
            try {
                jp["apparent"] = is_apparent(ode, p);
            } catch (...) {
                jp["apparent"] = nullptr;
            }
        }
        pts.push_back(jp);
    }
    rep["singular_points"] = pts;
    emit(rep, out);
    return kExitOk;
}

int cmd_frobenius(const std::string& ode_path, const std::string& point, long terms,
                  const std::string& out) {
    FuchsianODE ode = io::ode_from_json_file(ode_path);
    LocalBasis basis = local_basis(ode, parse_point(point), terms);
    emit(json::parse(io::basis_to_json(basis)), out);
    return kExitOk;
}

int cmd_connect(const std::string& ode_path, const std::string& from, const std::string& to,
                long digits, const std::vector<std::string>& via, const std::string& out) {
    FuchsianODE ode = io::ode_from_json_file(ode_path);
    LocalPoint p = parse_point(from), q = parse_point(to);
    ConnectionMatrix C = via.empty() && !p.infinite && !q.infinite
                             ? connect(ode, p, q, digits)
                             : path_connect(ode, p, q, parse_waypoints(via, digits), digits);
    emit(json::parse(io::connection_to_json(C, digits)), out);
    return kExitOk;
}

int cmd_monodromy(const std::string& ode_path, const std::string& base,
                  const std::vector<std::string>& points,
                  const std::vector<std::string>& via_inf, long digits,
                  const std::string& out) {
    FuchsianODE ode = io::ode_from_json_file(ode_path);
    LocalPoint b = parse_point(base);
    std::vector<LoopSpec> loops;
    for (const auto& ps : points) {
        LoopSpec spec;
        spec.point = parse_point(ps);
        if (spec.point.infinite) spec.waypoints = parse_waypoints(via_inf, digits);
        loops.push_back(spec);
    }
    auto gens = monodromy_generators(ode, b, loops, digits);
    json rep;
    rep["command"] = "monodromy";
    rep["base"] = b.str();
    json jg = json::array();
    for (const auto& g : gens) {
        json one;
        one["loop"] = g.loop_point.str();
        json rows = json::array();
        for (size_t i = 0; i < g.matrix.rows(); ++i) {
            json row = json::array();
            for (size_t k = 0; k < g.matrix.cols(); ++k)
                row.push_back({g.matrix.at(i, k).re.str(digits), g.matrix.at(i, k).im.str(digits)});
            rows.push_back(row);
        }
        one["matrix"] = rows;
        jg.push_back(one);
    }
    rep["generators"] = jg;
    std::vector<size_t> order(gens.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto pr = product_relation(gens, order);
    rep["product_relation_residual"] = pr.residual.str(6);
    rep["best_cyclic_shift"] = pr.best_shift;
    emit(rep, out);
    return kExitOk;
}

int cmd_guess(const std::string& series_path, unsigned max_order, unsigned max_degree,
              const std::string& method, const std::string& out) {
    guess::SeriesData s = guess::load_series(series_path);
    guess::GuessOptions opt;
    opt.max_order = max_order;
    opt.max_degree = max_degree;
    opt.method = (method == "exact") ? guess::Method::Exact : guess::Method::Modular;
    auto res = guess::guess_ode(s, opt);
    if (!res) {
        json rep;
        rep["command"] = "guess";
        rep["result"] = "none";
        emit(rep, out);
        return kExitUnresolved;
    }
    json rep = json::parse(io::ode_to_json(res->ode));
    rep["verified_through"] = res->verified_through;
    rep["minimal_order_certificate"] = res->minimal_order_certificate;
    emit(rep, out);
    return kExitOk;
}

int cmd_recognize(const std::string& matrix_path, const std::vector<std::string>& basis_names,
                  long digits, const std::string& out) {
    long mdigits = digits;
    CMatrix M = io::matrix_from_json_file(matrix_path, &mdigits);
    if (digits <= 0) digits = mdigits;
    recognize::ConstantBasis basis(basis_names, digits);
    auto rec = recognize::recognize_matrix(M, basis, digits);
    json rep;
    rep["command"] = "recognize";
    rep["basis"] = basis_names;
    rep["digits"] = digits;
    json cells = json::array();
    for (size_t i = 0; i < rec.cells.size(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < rec.cells[i].size(); ++j) {
            const auto& c = rec.cells[i][j];
            if (!c.resolved) {
                row.push_back(nullptr);
                continue;
            }
            json coeffs = json::array();
            for (const Rat& q : c.coeffs) coeffs.push_back(q.get_str());
            row.push_back(coeffs);
        }
        cells.push_back(row);
    }
    rep["cells"] = cells;
    json unresolved = json::array();
    for (auto [i, j] : rec.unresolved) unresolved.push_back({i, j});
    rep["unresolved"] = unresolved;
    emit(rep, out);
    return rec.unresolved.empty() ? kExitOk : kExitUnresolved;
}

int cmd_constants(const std::string& eval_name, long digits, bool crosscheck,
                  const std::string& out) {
    json rep;
    rep["command"] = "constants";
    if (crosscheck) {
        auto cc = constants::i3_crosscheck(digits);
        json rs = json::array();
        for (const auto& r : cc.residuals)
            rs.push_back({{"forms", r.first + "/" + r.second}, {"residual", r.residual.str(6)}});
        rep["crosscheck"] = rs;
        rep["reference_digits_match"] = cc.wu_reference_match;
        rep["barnes_g"] = cc.barnes_g;
        emit(rep, out);
        return kExitOk;
    }
    BigComplex v = constants::eval_constant(eval_name, digits);
    rep["name"] = eval_name;
    rep["digits"] = digits;
    rep["value"] = v.re.str(digits);
    emit(rep, out);
    return kExitOk;
}

int cmd_ising_nickel(unsigned n, const std::string& out) {
    json rep;
    rep["command"] = "ising nickel";
    rep["n"] = n;
    json pts = json::array();
    for (const auto& p : ising::nickel_singularities(n)) {
        json jp;
        jp["infinite"] = p.at_infinity;
        if (!p.at_infinity) {
            jp["w"] = {p.w.re.str(30), p.w.im.str(30)};
            if (p.w_rational) jp["w_exact"] = p.w_rational->get_str();
            json sa = json::array();
            for (const auto& s : p.s_abs) sa.push_back(s.str(25));
            jp["s_abs"] = sa;
        }
        json mk = json::array();
        for (auto [m, k] : p.mk) mk.push_back({m, k});
        jp["mk"] = mk;
        pts.push_back(jp);
    }
    rep["points"] = pts;
    emit(rep, out);
    return kExitOk;
}

int cmd_fixtures(const std::string& which, bool check, long digits, const std::string& out) {
    json rep;
    rep["command"] = "fixtures " + which;
    if (which == "chi3") {
        if (check) {
            auto r = fixtures::chi3_fixture_checks();
            json ids = json::array();
            for (const auto& c : r.identities) {
                json jc;
                jc["name"] = c.name;
                jc["holds"] = c.holds;
                if (!c.holds) jc["witness"] = c.witness;
                ids.push_back(jc);
            }
            rep["identities"] = ids;
            rep["power_identity_holds_for_N"] = r.power_identity_holds_for;
            emit(rep, out);
            return r.all_hold() ? kExitOk : kExitUnresolved;
        }
        SymbolicMatrix M = fixtures::chi3_monodromy(1);
        json rows = json::array();
        for (size_t i = 0; i < 6; ++i) {
            json row = json::array();
            for (size_t j = 0; j < 6; ++j) row.push_back(M.at(i, j).str());
            rows.push_back(row);
        }
        rep["matrix"] = rows;
        emit(rep, out);
        return kExitOk;
    }
    if (which == "c014") {
        auto exact = fixtures::c014_exact();
        auto names = fixtures::c014_basis_names();
        json rows = json::array();
        for (size_t i = 0; i < 6; ++i) {
            json row = json::array();
            for (size_t j = 0; j < 6; ++j) {
                json cell = json::array();
                for (size_t k = 0; k < names.size(); ++k)
                    cell.push_back(exact[i][j][k].get_str());
                row.push_back(cell);
            }
            rows.push_back(row);
        }
        rep["basis"] = names;
        rep["coefficients"] = rows;
        if (digits > 0) {
            CMatrix M = fixtures::c014_numeric(digits);
            json nrows = json::array();
            for (size_t i = 0; i < 6; ++i) {
                json row = json::array();
                for (size_t j = 0; j < 6; ++j) row.push_back(M.at(i, j).re.str(digits));
                nrows.push_back(row);
            }
            rep["numeric"] = nrows;
        }
        emit(rep, out);
        return kExitOk;
    }
    throw std::invalid_argument("fixtures: unknown fixture " + which);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuchsian ODE analysis: local bases, connection and monodromy "
                 "matrices, constant recognition, series guessing"};
    app.require_subcommand(1);

    std::string ode_path, series_path, matrix_path, point, from, to, base, out;
    std::string eval_name, method = "modular", fixture = "chi3";
    std::vector<std::string> via, points, basis_names;
    long digits = 50, terms = 20;
    unsigned max_order = 12, max_degree = 60, nickel_n = 1;
    bool check = false, crosscheck = false;

    auto* analyze = app.add_subcommand("analyze", "singular points, exponents, Fuchs test");
    analyze->add_option("--ode", ode_path, "ODE JSON file")->required();
    analyze->add_option("--digits", digits, "working precision");
    analyze->add_option("--out", out, "output path (stdout otherwise)");

    auto* frob = app.add_subcommand("frobenius", "local Frobenius basis dump");
    frob->add_option("--ode", ode_path)->required();
    frob->add_option("--point", point, "expansion point: rational or inf")->required();
    frob->add_option("--terms", terms, "truncation order");
    frob->add_option("--out", out);

    auto* conn = app.add_subcommand("connect", "connection matrix between two points");
    conn->add_option("--ode", ode_path)->required();
    conn->add_option("--from", from)->required();
    conn->add_option("--to", to)->required();
    conn->add_option("--digits", digits);
    conn->add_option("--via", via, "waypoints re[,im] (repeatable)");
    conn->add_option("--out", out);

    auto* mono = app.add_subcommand("monodromy", "monodromy generators in one basis");
    mono->add_option("--ode", ode_path)->required();
    mono->add_option("--base", base)->required();
    mono->add_option("--points", points, "loop points (repeatable)")->required();
    mono->add_option("--via-inf", via, "waypoints for the loop at infinity");
    mono->add_option("--digits", digits);
    mono->add_option("--out", out);

    auto* guess_cmd = app.add_subcommand("guess", "minimal ODE from a power series");
    guess_cmd->add_option("--series", series_path, "series file: lines 'k p/q'")->required();
    guess_cmd->add_option("--max-order", max_order);
    guess_cmd->add_option("--max-degree", max_degree);
    guess_cmd->add_option("--method", method)->check(CLI::IsMember({"modular", "exact"}));
    guess_cmd->add_option("--out", out);

    auto* rec = app.add_subcommand("recognize", "recognize matrix entries over a constant basis");
    rec->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    rec->add_option("--basis", basis_names, "basis member names")->required()->delimiter(',');
    rec->add_option("--digits", digits);
    rec->add_option("--out", out);

    auto* cons = app.add_subcommand("constants", "evaluate named constants");
    cons->add_option("--eval", eval_name, "constant name");
    cons->add_option("--digits", digits);
    cons->add_flag("--crosscheck", crosscheck, "I3+ closed-form crosscheck report");
    cons->add_option("--out", out);

    auto* ising_cmd = app.add_subcommand("ising", "Ising susceptibility layer");
    auto* nickel = ising_cmd->add_subcommand("nickel", "Nickel singularity candidates");
    nickel->add_option("--n", nickel_n, "chi^(2n+1) index")->required();
    nickel->add_option("--out", out);
    auto* iseries = ising_cmd->add_subcommand("series", "chi~^(n) series coefficients");
    iseries->add_option("--n", nickel_n, "component n in {1,2,3}")->required();
    iseries->add_option("--order", terms, "truncation order");
    iseries->add_option("--out", out, "series file path")->required();

    auto* fix = app.add_subcommand("fixtures", "explicit reference fixtures");
    fix->add_option("fixture", fixture, "chi3 or c014")->required();
    fix->add_flag("--check", check, "run the chi3 identity battery");
    fix->add_option("--digits", digits, "numeric rendering digits for c014");
    fix->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(ode_path, digits, out);
        if (*frob) return cmd_frobenius(ode_path, point, terms, out);
        if (*conn) return cmd_connect(ode_path, from, to, digits, via, out);
        if (*mono) return cmd_monodromy(ode_path, base, points, via, digits, out);
        if (*guess_cmd) return cmd_guess(series_path, max_order, max_degree, method, out);
        if (*rec) return cmd_recognize(matrix_path, basis_names, digits, out);
        if (*cons) {
            if (!crosscheck && eval_name.empty())
                throw std::invalid_argument("constants: need --eval or --crosscheck");
            return cmd_constants(eval_name, digits, crosscheck, out);
        }
        if (*ising_cmd) {
            if (*nickel) return cmd_ising_nickel(nickel_n, out);
            if (*iseries) {
                guess::save_series(ising::chi_tilde_series(nickel_n, terms), out);
                return kExitOk;
            }
            throw std::invalid_argument("ising: need a subcommand (nickel or series)");
        }
        if (*fix) return cmd_fixtures(fixture, check, digits, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        if (msg.find("precision unreachable") != std::string::npos) return kExitPrecision;
        if (msg.find("need more terms") != std::string::npos) return kExitUnresolved;
        return kExitPrecondition;
    }
    return kExitOk;
}
