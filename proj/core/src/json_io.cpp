#include "fuchs/json_io.hpp"

#include "json.hpp"

#include <fstream>
#include <stdexcept>

namespace fuchs {
namespace io {

using nlohmann::json;

std::string ode_to_json(const FuchsianODE& ode) {
    json j;
    j["order"] = ode.order();
    j["variable"] = ode.variable();
    json coeffs = json::array();
    for (const Poly& p : ode.coeffs()) {
        json cs = json::array();
        for (const Rat& q : p.coeffs()) cs.push_back(rat_to_string(q));
        coeffs.push_back(cs);
    }
    j["coeffs"] = coeffs;
    return j.dump(2);
}

FuchsianODE ode_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("ODE JSON parse error: ") + e.what());
    }
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::runtime_error("ODE JSON: missing coeffs array");
    std::vector<Poly> coeffs;
    for (const auto& cs : j["coeffs"]) {
        std::vector<Rat> c;
        for (const auto& s : cs) c.push_back(rat_from_string(s.get<std::string>()));
        coeffs.push_back(Poly(std::move(c)));
    }
    std::string var = j.value("variable", "w");
    FuchsianODE ode(std::move(coeffs), var);
    if (j.contains("order") && j["order"].get<unsigned>() != ode.order())
        throw std::runtime_error("ODE JSON: declared order disagrees with coefficients");
    return ode;
}

FuchsianODE ode_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ODE file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return ode_from_json(text);
}

void ode_to_json_file(const FuchsianODE& ode, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write ODE file: " + path);
    out << ode_to_json(ode) << "\n";
}

std::string connection_to_json(const ConnectionMatrix& C, long digits) {
    json j;
    j["from"] = C.from.str();
    j["to"] = C.to.str();
    j["digits"] = digits;
    j["precision_estimate"] = C.precision_estimate;
    j["condition"] = C.condition.str(4);
    json rows = json::array();
    for (size_t i = 0; i < C.entries.rows(); ++i) {
        json row = json::array();
        for (size_t k = 0; k < C.entries.cols(); ++k) {
            const BigComplex& z = C.entries.at(i, k);
            row.push_back(json::array({z.re.str(digits), z.im.str(digits)}));
        }
        rows.push_back(row);
    }
    j["entries"] = rows;
    json path = json::array();
    for (const BigComplex& z : C.path)
        path.push_back(json::array({z.re.str(20), z.im.str(20)}));
    j["path"] = path;
    return j.dump(2);
}

CMatrix matrix_from_json(const std::string& text, long* digits_out) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("matrix JSON parse error: ") + e.what());
    }
    long digits = j.value("digits", 50L);
    if (digits_out) *digits_out = digits;
    const auto& rows = j.at("entries");
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    CMatrix M(r, c, bits_for_digits(digits + 10));
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < c; ++k) {
            const auto& cell = rows[i][k];
            M.at(i, k) = BigComplex(BigFloat::parse(cell[0].get<std::string>(), digits + 10),
                                    BigFloat::parse(cell[1].get<std::string>(), digits + 10));
        }
    return M;
}

CMatrix matrix_from_json_file(const std::string& path, long* digits_out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return matrix_from_json(text, digits_out);
}

std::string basis_to_json(const LocalBasis& basis) {
    json j;
    j["point"] = basis.point.str();
    j["order"] = basis.order;
    j["truncation"] = basis.truncation;
    j["ordering"] = basis.ordering_rule;
    json sols = json::array();
    for (const LocalSolution& s : basis.solutions) {
        json js;
        js["exponent"] = rat_to_string(s.exponent);
        js["log_degree"] = s.log_degree;
        json table = json::array();
        for (const auto& row : s.table) {
            json jr = json::array();
            for (const Rat& q : row) jr.push_back(rat_to_string(q));
            table.push_back(jr);
        }
        js["coefficients"] = table;
        sols.push_back(js);
    }
    j["solutions"] = sols;
    return j.dump(2);
}

}  // namespace io
}  // namespace fuchs
