#include "effbound/io.hpp"

#include "effbound/error.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace effbound {

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& msg)
{
    throw Error(Errc::ValidationError, path + ": " + msg);
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''))
            return false;
    return true;
}

Integer read_integer(const Json& v, const std::string& path)
{
    if (v.is_number_integer())
        return Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        try {
            const Rational q = parse_rational(v.get<std::string>());
            if (is_integer(q))
                return q.get_num();
        } catch (const Error&) {
        }
    }
    invalid(path, "expected an integer");
}

Rational read_rational(const Json& v, const std::string& path)
{
    if (v.is_number_integer())
        return Rational(read_integer(v, path));
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const Error&) {
        }
    }
    invalid(path, "expected an integer or a \"p/q\" string");
}

const Json& member(const Json& obj, const char* key, const std::string& path)
{
    auto it = obj.find(key);
    if (it == obj.end())
        invalid(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

IntVector read_int_vector(const Json& v, const std::string& path)
{
    if (!v.is_array())
        invalid(path, "expected an array");
    IntVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(read_integer(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::string read_string(const Json& v, const std::string& path)
{
    if (!v.is_string())
        invalid(path, "expected a string");
    return v.get<std::string>();
}

} // namespace

SurfaceModel parse_surface(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::ParseError, "cannot open surface file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_surface_text(buf.str());
}

SurfaceModel parse_surface_text(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(Errc::ParseError, e.what());
    }
    return parse_surface_json(doc);
}

SurfaceModel parse_surface_json(const Json& doc)
{
    if (!doc.is_object())
        throw Error(Errc::ParseError, "surface file must be a JSON object");
    const Json& schema = member(doc, "schema", "");
    if (!schema.is_number_integer() || schema.get<long long>() != kSurfaceSchema)
        invalid("schema", "unsupported version (expected " + std::to_string(kSurfaceSchema) + ")");

    SurfaceModel::Spec spec;
    spec.name = read_string(member(doc, "name", ""), "name");

    const Json& rank_json = member(doc, "rank", "");
    if (!rank_json.is_number_integer() || rank_json.get<long long>() < 1)
        invalid("rank", "expected a positive integer");
    const std::size_t rank = rank_json.get<std::size_t>();

    const Json& gram = member(doc, "gram", "");
    if (!gram.is_array() || gram.size() != rank)
        invalid("gram", "expected " + std::to_string(rank) + " rows");
    spec.gram = IntMatrix(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        const std::string row_path = "gram[" + std::to_string(i) + "]";
        const IntVector row = read_int_vector(gram[i], row_path);
        if (row.size() != rank)
            invalid(row_path, "expected " + std::to_string(rank) + " entries");
        for (std::size_t j = 0; j < rank; ++j)
            spec.gram(i, j) = row[j];
    }

    spec.canonical = read_int_vector(member(doc, "canonical", ""), "canonical");

    std::set<std::string> names;
    if (auto it = doc.find("basis"); it != doc.end()) {
        if (!it->is_array())
            invalid("basis", "expected an array of names");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "basis[" + std::to_string(i) + "]";
            std::string n = read_string((*it)[i], path);
            if (!is_identifier(n))
                invalid(path, "'" + n + "' is not a valid name");
            if (!names.insert(n).second)
                invalid(path, "duplicate name '" + n + "'");
            spec.basis_names.push_back(std::move(n));
        }
    }

    const Json& curves = member(doc, "curves", "");
    if (!curves.is_array())
        invalid("curves", "expected an array");
    std::set<std::string> curve_names;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const std::string path = "curves[" + std::to_string(i) + "]";
        const Json& c = curves[i];
        if (!c.is_object())
            invalid(path, "expected an object");
        Curve curve;
        curve.name = read_string(member(c, "name", path), path + ".name");
        if (!is_identifier(curve.name))
            invalid(path + ".name", "'" + curve.name + "' is not a valid name");
        if (!curve_names.insert(curve.name).second)
            invalid(path + ".name", "duplicate curve name '" + curve.name + "'");
        curve.coords = read_int_vector(member(c, "coords", path), path + ".coords");
        if (auto e = c.find("effective"); e != c.end()) {
            if (!e->is_boolean())
                invalid(path + ".effective", "expected a boolean");
            curve.effective = e->get<bool>();
        }
        spec.curves.push_back(std::move(curve));
    }

    if (auto it = doc.find("ample_reference"); it != doc.end() && !it->is_null()) {
        if (!it->is_array())
            invalid("ample_reference", "expected an array");
        RatVector h;
        for (std::size_t i = 0; i < it->size(); ++i)
            h.push_back(read_rational((*it)[i], "ample_reference[" + std::to_string(i) + "]"));
        spec.ample_reference = std::move(h);
    }
    return SurfaceModel::create(std::move(spec));
}

Json surface_to_json(const SurfaceModel& model)
{
    Json doc;
    doc["schema"] = kSurfaceSchema;
    doc["name"] = model.name();
    doc["rank"] = model.rank();
    Json gram = Json::array();
    for (std::size_t i = 0; i < model.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < model.rank(); ++j)
            row.push_back(model.gram()(i, j).get_si());
        gram.push_back(std::move(row));
    }
    doc["gram"] = std::move(gram);
    Json k = Json::array();
    for (const auto& x : model.canonical_coords())
        k.push_back(x.get_si());
    doc["canonical"] = std::move(k);
    if (!model.basis_names().empty())
        doc["basis"] = model.basis_names();
    Json curves = Json::array();
    for (const auto& c : model.named_classes()) {
        Json coords = Json::array();
        for (const auto& x : c.coords)
            coords.push_back(x.get_si());
        curves.push_back({{"name", c.name}, {"coords", std::move(coords)}, {"effective", c.effective}});
    }
    doc["curves"] = std::move(curves);
    if (auto h = model.ample_reference()) {
        Json ref = Json::array();
        for (const auto& x : h->coords())
            ref.push_back(to_string(x));
        doc["ample_reference"] = std::move(ref);
    }
    return doc;
}

namespace {

std::optional<DivisorClass> lookup_name(const SurfaceModel& model, std::string_view name)
{
    for (const auto& c : model.named_classes())
        if (c.name == name)
            return DivisorClass(c.coords);
    const auto& basis = model.basis_names();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == name) {
            DivisorClass d = DivisorClass::zero(model.rank());
            d[i] = 1;
            return d;
        }
    return std::nullopt;
}

DivisorClass parse_term(const SurfaceModel& model, std::string_view term, std::string_view whole)
{
    auto bad = [&](const std::string& why) -> DivisorClass {
        throw Error(Errc::ParseError, "divisor '" + std::string(whole) + "': " + why);
    };
    if (term.empty())
        return bad("empty term");
    Rational coeff = 1;
    std::string_view name = term;
    if (auto star = term.find('*'); star != std::string_view::npos) {
        coeff = parse_rational(term.substr(0, star));
        name = term.substr(star + 1);
    }
    if (!is_identifier(name))
        return bad("'" + std::string(term) + "' is not of the form [coefficient*]name");
    auto cls = lookup_name(model, name);
    if (!cls)
        throw Error(Errc::UnknownCurveName, "unknown curve or basis name '" + std::string(name) + "'");
    return coeff * *cls;
}

} // namespace

DivisorClass parse_divisor(const SurfaceModel& model, std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw Error(Errc::ParseError, "empty divisor");
    if (s == "0")
        return DivisorClass::zero(model.rank());

    const bool has_name = std::any_of(s.begin(), s.end(), [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    });
    if (!has_name) {
        RatVector coords;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = s.find(',', start);
            coords.push_back(parse_rational(std::string_view(s).substr(start, comma - start)));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (coords.size() != model.rank())
            throw Error(Errc::ParseError, "divisor '" + std::string(text) + "': expected " +
                                              std::to_string(model.rank()) + " coordinates, got " +
                                              std::to_string(coords.size()));
        return DivisorClass(std::move(coords));
    }

    DivisorClass d = DivisorClass::zero(model.rank());
    std::size_t pos = 0;
    while (pos < s.size()) {
        Rational sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-')
                sign = -sign;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        d += sign * parse_term(model, std::string_view(s).substr(pos, end - pos), text);
        pos = end;
    }
    return d;
}

std::vector<std::size_t> parse_curve_list(const SurfaceModel& model, std::string_view text)
{
    std::vector<std::size_t> out;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = std::min(s.find(',', start), s.size());
        const std::string name = s.substr(start, comma - start);
        if (name.empty())
            throw Error(Errc::ParseError, "curve list '" + std::string(text) + "': empty entry");
        std::size_t i = 0;
        while (i < model.curve_count() && model.curves()[i].name != name)
            ++i;
        if (i == model.curve_count())
            throw Error(Errc::UnknownCurveName, "no effective curve named '" + name + "'");
        if (std::find(out.begin(), out.end(), i) == out.end())
            out.push_back(i);
        start = comma + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string linear_expression(const std::vector<std::string>& names, const RatVector& coeffs)
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c == 0)
            continue;
        const Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += to_string(mag) + "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

std::string format_divisor(const SurfaceModel& model, const DivisorClass& d)
{
    if (!model.basis_names().empty())
        return linear_expression(model.basis_names(), d.coords());
    std::string out = "(";
    for (std::size_t i = 0; i < d.rank(); ++i) {
        if (i)
            out += ", ";
        out += to_string(d[i]);
    }
    return out + ")";
}

std::string format_curves(const SurfaceModel& model, const std::vector<std::size_t>& curves)
{
    std::string out;
    for (std::size_t i : curves) {
        if (!out.empty())
            out += ", ";
        out += model.curves()[i].name;
    }
    return "{" + out + "}";
}

} // namespace effbound
