#include "ising/series.hpp"

#include <json.hpp>

namespace ising {

RatSeries binomial_series_in(const RatSeries& s, const Rat& a, int order) {
    if (s.order() > 0 && !s[0].is_zero())
        throw domain_error("binomial_series_in: series must have zero constant term");
    RatSeries base = s.truncated(order);
    RatSeries acc = RatSeries::constant(Rat(1), order);
    RatSeries result = RatSeries::constant(Rat(1), order);
    // Term k: C(a, k) s^k; s^k starts at v^k so the loop terminates.
    for (int k = 1; k < order; ++k) {
        acc *= base;
        if (acc.is_zero()) break;
        result += acc.scaled(Rat::binomial(a, k));
    }
    return result;
}

RatSeries one_minus_v_pow(const Rat& a, int order) {
    RatSeries r(order);
    for (int k = 0; k < order; ++k)
        r.at(k) = Rat::binomial(a, k) * (k % 2 ? Rat(-1) : Rat(1));
    return r;
}

RatSeries hyp2f1_series(const Rat& a, const Rat& b, const Rat& c, int order) {
    return hyp_pfq_series({a, b}, {c}, order);
}

RatSeries hyp_pfq_series(const std::vector<Rat>& upper, const std::vector<Rat>& lower, int order) {
    for (const auto& l : lower)
        if (l.is_integer() && l.sign() <= 0)
            throw domain_error("hyp_pfq_series: lower parameter is a nonpositive integer");
    RatSeries r(order);
    if (order == 0) return r;
    Rat term(1);
    r.at(0) = term;
    for (int k = 1; k < order; ++k) {
        Rat km1(static_cast<long>(k) - 1);
        for (const auto& u : upper) term *= u + km1;
        for (const auto& l : lower) term /= l + km1;
        term /= Rat(static_cast<long>(k));
        r.at(k) = term;
    }
    return r;
}

PolySeries lift_to_poly(const RatSeries& s) {
    PolySeries r(s.order());
    for (int i = 0; i < s.order(); ++i) r.at(i) = RatPoly(s[i]);
    return r;
}

RatSeries poly_series_at(const PolySeries& s, const Rat& lambda_sq) {
    RatSeries r(s.order());
    for (int i = 0; i < s.order(); ++i) r.at(i) = s[i].eval(lambda_sq);
    return r;
}

Real eval_series(const RatSeries& s, const Real& v) {
    Real acc(0L, v.precision());
    for (int i = s.order(); i-- > 0;) {
        acc *= v;
        if (!s[i].is_zero()) acc += Real(s[i], v.precision());
    }
    return acc;
}

std::string series_var_name(SeriesVar v) {
    switch (v) {
        case SeriesVar::t: return "t";
        case SeriesVar::x: return "x";
        case SeriesVar::q: return "q";
    }
    return "t";
}

SeriesVar series_var_from_name(const std::string& name) {
    if (name == "t") return SeriesVar::t;
    if (name == "x") return SeriesVar::x;
    if (name == "q") return SeriesVar::q;
    throw domain_error("unknown series variable '" + name + "'");
}

Real RationalSeries::eval(const Real& v) const {
    Real poly = eval_series(coeffs, v);
    if (offset.is_zero()) return poly;
    return pow(v, Real(offset, v.precision())) * poly;
}

std::string RationalSeries::to_json(int indent) const {
    nlohmann::json j;
    j["schema"] = "ising-exact/1";
    j["variable"] = series_var_name(variable);
    j["offset"] = offset.str();
    j["order"] = order().str();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs.coeffs()) arr.push_back(c.str());
    j["coeffs"] = arr;
    return j.dump(indent);
}

RationalSeries RationalSeries::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RationalSeries rs;
    rs.variable = series_var_from_name(j.at("variable").get<std::string>());
    rs.offset = Rat(j.at("offset").get<std::string>());
    std::vector<Rat> cs;
    for (const auto& c : j.at("coeffs")) cs.emplace_back(c.get<std::string>());
    rs.coeffs = RatSeries(std::move(cs));
    return rs;
}

} // namespace ising
