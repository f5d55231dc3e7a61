#include "effbound/report.hpp"

#include "effbound/error.hpp"

namespace effbound {

namespace {

Json curve_names(const SurfaceModel& model, const std::vector<std::size_t>& idx)
{
    Json out = Json::array();
    for (std::size_t i : idx)
        out.push_back(model.curves().at(i).name);
    return out;
}

std::vector<std::size_t> curve_indices(const SurfaceModel& model, const Json& j)
{
    std::vector<std::size_t> out;
    for (const auto& n : j) {
        const auto name = n.get<std::string>();
        std::size_t i = 0;
        while (i < model.curve_count() && model.curves()[i].name != name)
            ++i;
        if (i == model.curve_count())
            throw Error(Errc::UnknownCurveName, "report names unknown curve '" + name + "'");
        out.push_back(i);
    }
    return out;
}

Json integers(const IntVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

Integer read_integer(const Json& j)
{
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q))
        throw Error(Errc::ParseError, "expected an integer, got " + j.get<std::string>());
    return q.get_num();
}

IntVector read_integers(const Json& j)
{
    IntVector out;
    for (const auto& x : j)
        out.push_back(read_integer(x));
    return out;
}

Json rationals(const RatVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(encode(x));
    return out;
}

Rational read_rational(const Json& j)
{
    Rational q;
    decode(j, q);
    return q;
}

RatVector read_rationals(const Json& j)
{
    RatVector out;
    for (const auto& x : j)
        out.push_back(read_rational(x));
    return out;
}

std::string combination(const SurfaceModel& model, const std::vector<std::size_t>& curves, const IntVector& coeffs)
{
    std::vector<std::string> names;
    for (std::size_t i : curves)
        names.push_back(model.curves()[i].name);
    return linear_expression(names, to_rational(coeffs));
}

Json encode_obstruction(const SurfaceModel& model, const std::vector<std::size_t>& curves, const Obstruction& o)
{
    return {{"expr", combination(model, curves, o.coefficients)},
            {"coefficients", integers(o.coefficients)},
            {"divisor", encode(model, o.divisor)},
            {"value", encode(o.value)}};
}

Obstruction decode_obstruction(const SurfaceModel& model, const Json& j)
{
    Obstruction o;
    o.coefficients = read_integers(j.at("coefficients"));
    decode(model, j.at("divisor"), o.divisor);
    o.value = read_rational(j.at("value"));
    return o;
}

} // namespace

Json encode(const Rational& q)
{
    return {{"exact", to_string(q)}, {"decimal", to_decimal(q)}};
}

Json encode(const ExtendedRational& q)
{
    if (q.infinite)
        return {{"exact", "+inf"}, {"decimal", "+inf"}};
    return encode(q.value);
}

void decode(const Json& j, Rational& q)
{
    q = parse_rational(j.at("exact").get<std::string>());
}

void decode(const Json& j, ExtendedRational& q)
{
    if (j.at("exact").get<std::string>() == "+inf")
        q = ExtendedRational::plus_infinity();
    else
        q = ExtendedRational::finite(read_rational(j));
}

Json encode(const SurfaceModel& model, const DivisorClass& d)
{
    Json coords = Json::array();
    for (const auto& x : d.coords())
        coords.push_back(to_string(x));
    return {{"expr", format_divisor(model, d)}, {"coords", std::move(coords)}};
}

void decode(const SurfaceModel& model, const Json& j, DivisorClass& d)
{
    RatVector coords;
    for (const auto& x : j.at("coords"))
        coords.push_back(parse_rational(x.get<std::string>()));
    if (coords.size() != model.rank())
        throw Error(Errc::RankMismatch, "divisor in report has wrong rank");
    d = DivisorClass(std::move(coords));
}

Json encode(const SurfaceModel& model, const ZariskiDecomposition& z)
{
    return {{"positive", encode(model, z.positive)},
            {"negative", encode(model, z.negative)},
            {"support", curve_names(model, z.support)},
            {"coefficients", rationals(z.coefficients)}};
}

void decode(const SurfaceModel& model, const Json& j, ZariskiDecomposition& z)
{
    decode(model, j.at("positive"), z.positive);
    decode(model, j.at("negative"), z.negative);
    z.support = curve_indices(model, j.at("support"));
    z.coefficients = read_rationals(j.at("coefficients"));
}

Json encode(const SurfaceModel& model, const FundamentalCycle& z)
{
    return {{"component", curve_names(model, z.component)},
            {"cycle", combination(model, z.component, z.coefficients)},
            {"coefficients", integers(z.coefficients)},
            {"multiplicity", to_string(z.multiplicity)},
            {"genus", to_string(z.genus)},
            {"laufer_steps", z.laufer_steps}};
}

void decode(const SurfaceModel& model, const Json& j, FundamentalCycle& z)
{
    z.component = curve_indices(model, j.at("component"));
    z.coefficients = read_integers(j.at("coefficients"));
    z.multiplicity = read_integer(j.at("multiplicity"));
    z.genus = read_integer(j.at("genus"));
    z.laufer_steps = j.at("laufer_steps").get<std::size_t>();
}

Json encode(const SurfaceModel& model, const ObstructionSet& s)
{
    Json divisors = Json::array();
    for (const auto& o : s.divisors)
        divisors.push_back(encode_obstruction(model, s.exceptional, o));
    Json out = {{"exceptional", curve_names(model, s.exceptional)},
                {"level", encode(s.level)},
                {"count", s.divisors.size()},
                {"divisors", std::move(divisors)}};
    out["witness_minimum"] =
        s.witness_minimum ? encode_obstruction(model, s.exceptional, *s.witness_minimum) : Json(nullptr);
    return out;
}

void decode(const SurfaceModel& model, const Json& j, ObstructionSet& s)
{
    s.exceptional = curve_indices(model, j.at("exceptional"));
    s.level = read_rational(j.at("level"));
    s.divisors.clear();
    for (const auto& o : j.at("divisors"))
        s.divisors.push_back(decode_obstruction(model, o));
    s.witness_minimum.reset();
    if (!j.at("witness_minimum").is_null())
        s.witness_minimum = decode_obstruction(model, j.at("witness_minimum"));
}

Json encode(const SurfaceModel& model, const TauResult& t)
{
    Json out = {{"value", encode(t.value)}};
    out["witness"] = nullptr;
    if (t.witness) {
        Json w = {{"coefficients", integers(t.witness->coefficients)},
                  {"divisor", encode(model, t.witness->divisor)},
                  {"value", encode(t.witness->value)}};
        out["witness"] = std::move(w);
    }
    return out;
}

void decode(const SurfaceModel& model, const Json& j, TauResult& t)
{
    decode(j.at("value"), t.value);
    t.witness.reset();
    if (!j.at("witness").is_null())
        t.witness = decode_obstruction(model, j.at("witness"));
}

Json encode(const SurfaceModel& model, const CorrectionDivisor& e)
{
    return {{"k", e.k},
            {"curves", curve_names(model, e.curves)},
            {"sigma", integers(e.sigma)},
            {"det_abs", to_string(e.det_abs)},
            {"coefficients", integers(e.coefficients)},
            {"expr", combination(model, e.curves, e.coefficients)},
            {"divisor", encode(model, e.divisor)}};
}

void decode(const SurfaceModel& model, const Json& j, CorrectionDivisor& e)
{
    e.k = j.at("k").get<int>();
    e.curves = curve_indices(model, j.at("curves"));
    e.sigma = read_integers(j.at("sigma"));
    e.det_abs = read_integer(j.at("det_abs"));
    e.coefficients = read_integers(j.at("coefficients"));
    decode(model, j.at("divisor"), e.divisor);
}

Json encode(const SurfaceModel& model, const SeparatingDivisor& s)
{
    Json pieces = Json::array();
    for (const auto& p : s.pieces)
        pieces.push_back({{"component", curve_names(model, p.component)},
                          {"fundamental_cycle_used", p.fundamental_cycle_used},
                          {"coefficients", integers(p.coefficients)},
                          {"expr", combination(model, p.component, p.coefficients)}});
    return {{"divisor", encode(model, s.divisor)}, {"pieces", std::move(pieces)}};
}

void decode(const SurfaceModel& model, const Json& j, SeparatingDivisor& s)
{
    decode(model, j.at("divisor"), s.divisor);
    s.pieces.clear();
    for (const auto& p : j.at("pieces")) {
        SeparatingPiece piece;
        piece.component = curve_indices(model, p.at("component"));
        piece.fundamental_cycle_used = p.at("fundamental_cycle_used").get<bool>();
        piece.coefficients = read_integers(p.at("coefficients"));
        s.pieces.push_back(std::move(piece));
    }
}

Json encode(const ConditionFlags& f)
{
    return {{"k", f.k}, {"matsusaka", f.matsusaka}, {"laufer_ramanujam", f.laufer_ramanujam}, {"artin", f.artin}};
}

void decode(const Json& j, ConditionFlags& f)
{
    f.k = j.at("k").get<int>();
    f.matsusaka = j.at("matsusaka").get<bool>();
    f.laufer_ramanujam = j.at("laufer_ramanujam").get<bool>();
    f.artin = j.at("artin").get<bool>();
}

Json encode(const SurfaceModel& model, const ThresholdEntry& t)
{
    Json out = {{"id", t.id}, {"statement", t.statement}, {"applicable", t.applicable}};
    if (t.applicable) {
        out["bound"] = encode(t.bound);
        out["strict"] = t.strict;
        out["least_n"] = to_string(t.least_n);
    } else {
        out["omitted_reason"] = t.omitted_reason;
    }
    out["caveats"] = t.caveats;
    Json values = Json::object();
    for (const auto& [k, v] : t.values)
        values[k] = encode(v);
    out["values"] = std::move(values);
    Json divisors = Json::object();
    for (const auto& [k, v] : t.divisors)
        divisors[k] = encode(model, v);
    out["divisors"] = std::move(divisors);
    return out;
}

void decode(const SurfaceModel& model, const Json& j, ThresholdEntry& t)
{
    t = ThresholdEntry{};
    t.id = j.at("id").get<std::string>();
    t.statement = j.at("statement").get<std::string>();
    t.applicable = j.at("applicable").get<bool>();
    if (t.applicable) {
        t.bound = read_rational(j.at("bound"));
        t.strict = j.at("strict").get<bool>();
        t.least_n = read_integer(j.at("least_n"));
    } else {
        t.omitted_reason = j.at("omitted_reason").get<std::string>();
    }
    t.caveats = j.at("caveats").get<std::vector<std::string>>();
    for (const auto& [k, v] : j.at("values").items())
        t.values[k] = read_rational(v);
    for (const auto& [k, v] : j.at("divisors").items())
        decode(model, v, t.divisors[k]);
}

Json encode(const RingGeneration& g)
{
    return {{"case", g.used == RingCase::RationalExceptional ? "rational_exceptional" : "no_fixed_part"},
            {"l", to_string(g.l)},
            {"p", to_string(g.p)},
            {"bound_2m", encode(g.bound)},
            {"m_min", to_string(g.m_min)}};
}

void decode(const Json& j, RingGeneration& g)
{
    g.used = j.at("case").get<std::string>() == "no_fixed_part" ? RingCase::NoFixedPart
                                                                 : RingCase::RationalExceptional;
    g.l = read_integer(j.at("l"));
    g.p = read_integer(j.at("p"));
    g.bound = read_rational(j.at("bound_2m"));
    g.m_min = read_integer(j.at("m_min"));
}

Json encode(const MatsusakaComparison& m)
{
    return {{"fernandez_del_busto", {{"bound", encode(m.fernandez_del_busto)},
                                     {"least_n", to_string(m.least_fernandez_del_busto)}}},
            {"beltrametti_sommese", {{"bound", encode(m.beltrametti_sommese)},
                                     {"least_n", to_string(m.least_beltrametti_sommese)}}},
            {"adjoint", {{"bound", encode(m.adjoint)}, {"least_n", to_string(m.least_adjoint)}}}};
}

void decode(const Json& j, MatsusakaComparison& m)
{
    m.fernandez_del_busto = read_rational(j.at("fernandez_del_busto").at("bound"));
    m.least_fernandez_del_busto = read_integer(j.at("fernandez_del_busto").at("least_n"));
    m.beltrametti_sommese = read_rational(j.at("beltrametti_sommese").at("bound"));
    m.least_beltrametti_sommese = read_integer(j.at("beltrametti_sommese").at("least_n"));
    m.adjoint = read_rational(j.at("adjoint").at("bound"));
    m.least_adjoint = read_integer(j.at("adjoint").at("least_n"));
}

Json encode(const AdjointQuadratic& f)
{
    Json out = {{"linear", encode(f.linear)},
                {"constant", encode(f.constant)},
                {"at_zero", encode(f.at_zero)},
                {"at_one", encode(f.at_one)}};
    out["smaller_root"] = nullptr;
    if (f.smaller_root)
        out["smaller_root"] = {{"lo", encode(f.smaller_root->lo)}, {"hi", encode(f.smaller_root->hi)}};
    return out;
}

void decode(const Json& j, AdjointQuadratic& f)
{
    f.linear = read_rational(j.at("linear"));
    f.constant = read_rational(j.at("constant"));
    f.at_zero = read_rational(j.at("at_zero"));
    f.at_one = read_rational(j.at("at_one"));
    f.smaller_root.reset();
    if (!j.at("smaller_root").is_null())
        f.smaller_root = RationalBracket{read_rational(j.at("smaller_root").at("lo")),
                                         read_rational(j.at("smaller_root").at("hi"))};
}

Json encode(const IntegerBracket& b)
{
    return {{"floor", to_string(b.floor)}, {"ceil", to_string(b.ceil)}};
}

void decode(const Json& j, IntegerBracket& b)
{
    b.floor = read_integer(j.at("floor"));
    b.ceil = read_integer(j.at("ceil"));
}

Json encode(const SurfaceModel& model, const BoundReport& r)
{
    Json out = {{"adjoint_threshold", encode(r.adjoint_threshold)},
                {"least_adjoint_n", to_string(r.least_adjoint_n)},
                {"hodge_defect", encode(r.hodge_defect)},
                {"proportional", r.proportional},
                {"tau", encode(r.tau)}};
    out["quadratic"] = r.quadratic ? encode(*r.quadratic) : Json(nullptr);
    out["critical_n"] = r.critical_n ? encode(*r.critical_n) : Json(nullptr);
    Json corrections = Json::array();
    for (const auto& e : r.corrections)
        corrections.push_back(encode(model, e));
    out["corrections"] = std::move(corrections);
    out["separating"] = encode(model, r.separating);
    out["conditions"] = encode(r.conditions);
    Json thresholds = Json::array();
    for (const auto& t : r.thresholds)
        thresholds.push_back(encode(model, t));
    out["thresholds"] = std::move(thresholds);
    return out;
}

void decode(const SurfaceModel& model, const Json& j, BoundReport& r)
{
    r = BoundReport{};
    r.adjoint_threshold = read_rational(j.at("adjoint_threshold"));
    r.least_adjoint_n = read_integer(j.at("least_adjoint_n"));
    r.hodge_defect = read_rational(j.at("hodge_defect"));
    r.proportional = j.at("proportional").get<bool>();
    decode(j.at("tau"), r.tau);
    if (!j.at("quadratic").is_null())
        r.quadratic = decode_as<AdjointQuadratic>(model, j.at("quadratic"));
    if (!j.at("critical_n").is_null())
        r.critical_n = decode_as<IntegerBracket>(model, j.at("critical_n"));
    for (const auto& e : j.at("corrections"))
        r.corrections.push_back(decode_as<CorrectionDivisor>(model, e));
    decode(model, j.at("separating"), r.separating);
    decode(j.at("conditions"), r.conditions);
    for (const auto& t : j.at("thresholds"))
        r.thresholds.push_back(decode_as<ThresholdEntry>(model, t));
}

namespace {

bool is_rational_node(const Json& j)
{
    return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("decimal");
}

bool is_divisor_node(const Json& j)
{
    return j.is_object() && j.size() == 2 && j.contains("expr") && j.contains("coords");
}

bool is_leaf(const Json& j)
{
    return !j.is_structured() || is_rational_node(j) || is_divisor_node(j) || j.empty();
}

std::string leaf_text(const Json& j)
{
    if (is_rational_node(j)) {
        const auto exact = j["exact"].get<std::string>();
        const auto dec = j["decimal"].get<std::string>();
        return exact == dec ? exact : exact + " (~" + dec + ")";
    }
    if (is_divisor_node(j))
        return j["expr"].get<std::string>();
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "none";
    if (j.is_array())
        return "[]";
    if (j.is_object())
        return "{}";
    return j.dump();
}

bool inline_array(const Json& j)
{
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) {
               return !x.is_structured() || is_rational_node(x) || is_divisor_node(x);
           });
}

void render(const Json& j, std::ostream& out, int indent)
{
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_leaf(value)) {
                out << pad << key << ": " << leaf_text(value) << '\n';
            } else if (inline_array(value)) {
                out << pad << key << ": [";
                for (std::size_t i = 0; i < value.size(); ++i)
                    out << (i ? ", " : "") << leaf_text(value[i]);
                out << "]\n";
            } else {
                out << pad << key << ":\n";
                render(value, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (is_leaf(item)) {
                out << pad << "- " << leaf_text(item) << '\n';
            } else {
                out << pad << "-\n";
                render(item, out, indent + 2);
            }
        }
    } else {
        out << pad << leaf_text(j) << '\n';
    }
}

} // namespace

void render_text(const Json& doc, std::ostream& out)
{
    render(doc, out, 0);
}

} // namespace effbound
