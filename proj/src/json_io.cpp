#include "circa/json_io.hpp"

#include <stdexcept>

namespace circa {

json interval_to_json(const Interval& iv, long bits) {
    return json{{"lo", iv.lo().to_decimal()}, {"hi", iv.hi().to_decimal()}, {"bits", bits}};
}

Interval interval_from_json(const json& j) {
    auto lo = Dyadic::parse_decimal(j.at("lo").get<std::string>());
    auto hi = Dyadic::parse_decimal(j.at("hi").get<std::string>());
    if (!lo || !hi) throw std::invalid_argument("interval JSON: endpoints must be dyadic decimals");
    return Interval(*lo, *hi);
}

json creal_eval_to_json(const CReal& x, unsigned n) {
    // |mid - x| <= 2^-(n+1) (oracle) + 2^-(n+3) (rounding) <= 2^-n
    const Rational a = x.approx(n + 1);
    const Dyadic mid = Dyadic::floor_of(a, static_cast<long>(n) + 3);
    return json{{"approx", mid.to_decimal()},
                {"error_bound", "2^-" + std::to_string(n)}};
}

json trigpoly_to_json(const TrigPoly& p, long bits) {
    json cos = json::array(), sin = json::array();
    const unsigned n = static_cast<unsigned>(bits > 0 ? bits : 1);
    for (unsigned k = 0; k <= p.degree(); ++k) {
        cos.push_back(interval_to_json(p.cos_coeff(k).enclosure(n), bits));
        if (k >= 1) sin.push_back(interval_to_json(p.sin_coeff(k).enclosure(n), bits));
    }
    return json{{"degree", p.degree()}, {"bits", bits}, {"cos", cos}, {"sin", sin}};
}

TrigPoly trigpoly_from_json(const json& j) {
    const unsigned degree = j.at("degree").get<unsigned>();
    TrigPoly p(degree);
    const json& cos = j.at("cos");
    const json& sin = j.at("sin");
    if (cos.size() != degree + 1 || sin.size() != degree)
        throw std::invalid_argument("trig poly JSON: coefficient arrays do not match degree");
    for (unsigned k = 0; k <= degree; ++k) {
        Interval iv = interval_from_json(cos.at(k));
        p.set_cos(k, CReal::constant(iv.mid().to_rational()));
        if (k >= 1) {
            Interval sv = interval_from_json(sin.at(k - 1));
            p.set_sin(k, CReal::constant(sv.mid().to_rational()));
        }
    }
    return p;
}

std::string rational_to_json_string(const Rational& q) { return q.to_string(); }
Rational rational_from_json_string(const std::string& s) { return Rational::from_string(s); }

json profile_to_json(const RadialProfile& q) {
    json knots = json::array(), pieces = json::array();
    knots.push_back(rational_to_json_string(q.pieces().front().lo));
    for (const auto& pc : q.pieces()) {
        knots.push_back(rational_to_json_string(pc.hi));
        json coeffs = json::array();
        for (const Rational& c : pc.coeffs) coeffs.push_back(rational_to_json_string(c));
        pieces.push_back(coeffs);
    }
    return json{{"knots", knots},
                {"pieces", pieces},
                {"scale", rational_to_json_string(q.scale())},
                {"pi_power", q.pi_power()}};
}

RadialProfile profile_from_json(const json& j) {
    const json& knots = j.at("knots");
    const json& pieces = j.at("pieces");
    if (knots.size() != pieces.size() + 1 || pieces.empty())
        throw std::invalid_argument("profile JSON: need n+1 knots for n pieces");
    std::vector<RadialProfile::Piece> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        RadialProfile::Piece pc;
        pc.lo = rational_from_json_string(knots.at(i).get<std::string>());
        pc.hi = rational_from_json_string(knots.at(i + 1).get<std::string>());
        for (const auto& c : pieces.at(i))
            pc.coeffs.push_back(rational_from_json_string(c.get<std::string>()));
        out.push_back(std::move(pc));
    }
    Rational scale = rational_from_json_string(j.at("scale").get<std::string>());
    unsigned pi_power = j.at("pi_power").get<unsigned>();
    return RadialProfile(std::move(out), std::move(scale), pi_power);
}

std::shared_ptr<Enumerator> enumerator_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    const json& body = j.at("body");
    if (type == "finite") {
        std::vector<std::uint64_t> values;
        for (const auto& v : body) values.push_back(v.get<std::uint64_t>());
        return std::make_shared<Enumerator>(Enumerator::finite(std::move(values)));
    }
    if (type == "progression") {
        return std::make_shared<Enumerator>(Enumerator::progression(
            body.at("first").get<std::uint64_t>(), body.at("step").get<std::uint64_t>()));
    }
    if (type == "vm") {
        std::vector<std::string> code;
        for (const auto& line : body.at("code")) code.push_back(line.get<std::string>());
        RegisterProgram prog =
            RegisterProgram::parse(body.at("registers").get<unsigned>(), code);
        return std::make_shared<Enumerator>(Enumerator::machine(std::move(prog)));
    }
    throw std::invalid_argument("enumerator JSON: unknown type '" + type + "'");
}

json search_log_to_json(const SearchResult& r) {
    json events = json::array();
    for (const SearchEvent& e : r.log) {
        const char* kind = e.kind == SearchEvent::Kind::spawn  ? "spawn"
                           : e.kind == SearchEvent::Kind::halt ? "halt"
                                                               : "emit";
        // search values are dyadic by construction
        events.push_back(json{{"round", e.round},
                              {"event", kind},
                              {"value", *e.value.to_decimal()}});
    }
    json bounds = json::array();
    for (const Rational& b : r.bounds) bounds.push_back(*b.to_decimal());
    return json{{"events", events}, {"bounds", bounds}, {"rounds", r.rounds_used}};
}

}  // namespace circa
