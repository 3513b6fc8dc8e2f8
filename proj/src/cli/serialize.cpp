#include "gogmagog/cli/serialize.hpp"

#include "gogmagog/polyring/errors.hpp"

#include <sstream>

namespace gogmagog::cli {

json poly_json(const ParamPoly& p) {
    json out = json::array();
    for (const auto& [k, c] : p.sorted_terms()) {
        if (!k.x_is_zero()) throw DomainError("poly_json: polynomial still carries x variables");
        json ex = json::object();
        for (int s = 0; s < kParamSlots; ++s)
            if (k[s] != 0) ex[std::string(param_name(s))] = k[s];
        out.push_back({{"exponents", ex}, {"coeff", c.get_str()}});
    }
    return out;
}

ParamPoly poly_from_json(const json& j) {
    ParamPoly p;
    for (const auto& term : j) {
        Key k;
        for (const auto& [name, e] : term.at("exponents").items()) {
            int s = param_slot_from_name(name);
            if (s < 0) throw MalformedExpression("poly_from_json: unknown parameter " + name);
            k.set(s, e.get<int>());
        }
        p.add_term(k, BigInt(term.at("coeff").get<std::string>()));
    }
    return p;
}

json triangle_json(const TriangularArray& t) {
    json rows = json::array(), cols = json::array();
    for (int i = 1; i <= t.n; ++i) {
        rows.push_back(t.row(i));
        cols.push_back(t.row_columns(i));
    }
    return {{"rows", rows}, {"columns", cols}};
}

json stats_json(const StatVector& s) {
    return {{"inv", s.inv},
            {"inv_prime", s.inv_prime},
            {"inv_J", s.inv_J},
            {"inv_prime_I", s.inv_prime_I},
            {"minima", s.minima},
            {"maxima", s.maxima},
            {"top_minima", s.top_minima},
            {"top_maxima", s.top_maxima},
            {"bottom_minima", s.bottom_minima},
            {"bottom_maxima", s.bottom_maxima},
            {"top_entry", s.top_entry},
            {"bottom_row", s.bottom_row},
            {"bottom_right_is_max", s.bottom_right_is_max},
            {"bottom_left_is_min", s.bottom_left_is_min},
            {"minus_ones", s.minus_ones}};
}

json matrix_json(const IntMatrix& a) { return json(a); }

json eisenstein_json(const Eisenstein& z) { return {{"a", z.a.get_str()}, {"b", z.b.get_str()}}; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

std::string poly_csv(const ParamPoly& p) {
    std::ostringstream os;
    os << "monomial,coeff\n";
    for (const auto& [k, c] : p.sorted_terms()) os << csv_escape(monomial_string(k)) << "," << c.get_str() << "\n";
    return os.str();
}

}  // namespace gogmagog::cli
