#include "effbound/cli.hpp"

#include "effbound/error.hpp"
#include "effbound/report.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <sstream>

namespace effbound {

namespace {

/// Raised for malformed command-line values (exit 2 rather than 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a brute-force cross-check disagrees (exit 3).
struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string surface;
    std::string divisor;
    std::string t = "0";
    int k = 0;
    std::optional<long long> n;
    std::string curves;
    bool no_fixed_part = false;
    bool base_point_free = false;
    bool json = false;
    bool text = false;
    bool oracle = false;
    std::string box_margin = "1";
    std::string gram_fault;
};

class Session {
public:
    Session(const Options& opt, std::string command) : opt_(opt), command_(std::move(command)) {}

    int run(std::ostream& out, std::ostream& err);

private:
    const Options& opt_;
    std::string command_;
    std::optional<SurfaceModel> model_;
    std::optional<SurfaceModel> oracle_model_;
    Json inputs_ = Json::object();
    Json caveats_ = Json::array();
    Json oracle_ = Json::array();

    const SurfaceModel& model() const { return *model_; }
    const SurfaceModel& oracle_model() const { return *oracle_model_; }

    DivisorClass divisor_arg(const std::string& text, const char* flag);
    DivisorClass class_a();
    DivisorClass class_t();
    std::optional<DivisorClass> class_a_or_reference();
    Rational margin();
    ThresholdOptions threshold_options();
    void build_oracle_model();

    template <typename Check>
    void cross_check(const std::string& what, Check check, const std::string& skip = "");
    std::string oracle_skip(const DivisorClass& a, const DivisorClass& t, const Rational& level) const;

    Json cmd_validate();
    Json cmd_zariski();
    Json cmd_fundcycle();
    Json cmd_exceptional();
    Json cmd_bounds();
    Json cmd_ek();
    Json cmd_obstructions();
    Json cmd_tau();
    Json cmd_thresholds();
    Json cmd_matsusaka();
    Json cmd_report();

    Json zariski_json(const DivisorClass& d);
    Json cycles_json(const std::vector<std::vector<std::size_t>>& components);
    Json obstructions_json(const DivisorClass& a, const DivisorClass& t, int k);
    Json tau_json(const DivisorClass& a, const DivisorClass& t);
    Json ek_json(const DivisorClass& a, const DivisorClass& t, int k);
};

DivisorClass Session::divisor_arg(const std::string& text, const char* flag)
{
    try {
        return parse_divisor(model(), text);
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError || e.code() == Errc::UnknownCurveName)
            throw UsageError(std::string(flag) + ": " + e.what());
        throw;
    }
}

DivisorClass Session::class_a()
{
    if (opt_.divisor.empty())
        throw UsageError("--divisor is required for '" + command_ + "'");
    return divisor_arg(opt_.divisor, "--divisor");
}

std::optional<DivisorClass> Session::class_a_or_reference()
{
    if (!opt_.divisor.empty())
        return divisor_arg(opt_.divisor, "--divisor");
    return model().ample_reference();
}

DivisorClass Session::class_t()
{
    return divisor_arg(opt_.t, "-T");
}

Rational Session::margin()
{
    try {
        const Rational m = parse_rational(opt_.box_margin);
        if (m < 1)
            throw UsageError("--box-margin must be >= 1");
        return m;
    } catch (const Error& e) {
        throw UsageError(std::string("--box-margin: ") + e.what());
    }
}

ThresholdOptions Session::threshold_options()
{
    ThresholdOptions o;
    o.k = opt_.k;
    if (opt_.n)
        o.n = Integer(std::to_string(*opt_.n));
    o.assert_no_fixed_part = opt_.no_fixed_part;
    o.assert_base_point_free = opt_.base_point_free;
    if (!opt_.curves.empty()) {
        try {
            const auto c = parse_curve_list(model(), opt_.curves);
            if (c.size() != 1)
                throw UsageError("--curves: give one curve to select a component");
            o.component_curve = c.front();
        } catch (const Error& e) {
            throw UsageError(std::string("--curves: ") + e.what());
        }
    }
    return o;
}

void Session::build_oracle_model()
{
    SurfaceModel::Spec spec = model().spec();
    if (!opt_.gram_fault.empty()) {
        std::vector<long long> parts;
        std::size_t start = 0;
        try {
            for (;;) {
                const std::size_t comma = opt_.gram_fault.find(',', start);
                parts.push_back(std::stoll(opt_.gram_fault.substr(start, comma - start)));
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
        } catch (const std::exception&) {
            throw UsageError("bad fault specification");
        }
        if (parts.size() < 2 || parts.size() > 3 || parts[0] < 0 || parts[1] < 0 ||
            static_cast<std::size_t>(parts[0]) >= spec.gram.rows() ||
            static_cast<std::size_t>(parts[1]) >= spec.gram.rows())
            throw UsageError("bad fault specification");
        const auto i = static_cast<std::size_t>(parts[0]);
        const auto j = static_cast<std::size_t>(parts[1]);
        const Integer delta(parts.size() == 3 ? static_cast<long>(parts[2]) : 1L);
        spec.gram(i, j) += delta;
        if (i != j)
            spec.gram(j, i) += delta;
    }
    oracle_model_ = SurfaceModel::unchecked(std::move(spec));
}

// Decided on the model under test, so a faulted oracle model cannot turn a
// mismatch into a skip.
std::string Session::oracle_skip(const DivisorClass& a, const DivisorClass& t, const Rational& level) const
{
    if (!opt_.oracle)
        return "";
    const double points = obstruction_oracle_points(model(), a, t, level);
    if (points <= kOracleMaxPoints)
        return "";
    std::ostringstream msg;
    msg << "doubled box has " << points << " points, above the oracle limit of " << kOracleMaxPoints;
    return msg.str();
}

template <typename Check>
void Session::cross_check(const std::string& what, Check check, const std::string& skip)
{
    if (!opt_.oracle)
        return;
    if (!skip.empty()) {
        oracle_.push_back({{"check", what}, {"agreement", nullptr}, {"detail", "skipped: " + skip}});
        return;
    }
    std::string detail;
    bool agree = false;
    try {
        agree = check(detail);
    } catch (const std::exception& e) {
        detail = std::string("oracle raised: ") + e.what();
    }
    oracle_.push_back({{"check", what}, {"agreement", agree}, {"detail", detail}});
}

Json Session::zariski_json(const DivisorClass& d)
{
    const ZariskiDecomposition z = zariski_decompose(model(), d);
    Json out = encode(model(), z);
    const std::string violation = check_zariski_conditions(model(), d, z);
    out["conditions_hold"] = violation.empty();
    if (!violation.empty())
        out["violation"] = violation;
    out["kappa_is_two"] = kappa_is_two(model(), d);
    const H1Correction h = h1_correction(model(), d);
    out["h1_correction"] = {{"c2", encode(h.c2)}, {"c1", encode(h.c1)}, {"fixed_part_squared", encode(h.f_squared)},
                            {"fixed_part_canonical", encode(h.f_canonical)}};
    cross_check("zariski", [&](std::string& detail) {
        const ZariskiDecomposition o = zariski_oracle(oracle_model(), d);
        if (o == z)
            return true;
        detail = "oracle positive part " + format_divisor(model(), o.positive);
        return false;
    });
    return out;
}

Json Session::cycles_json(const std::vector<std::vector<std::size_t>>& components)
{
    Json cycles = Json::array();
    for (const auto& comp : components) {
        const FundamentalCycle z = fundamental_cycle(model(), comp);
        cycles.push_back(encode(model(), z));
        cross_check("fundamental_cycle " + format_curves(model(), comp), [&](std::string& detail) {
            const FundamentalCycle o = cycle_bruteforce_oracle(oracle_model(), comp);
            if (o == z)
                return true;
            detail = "oracle cycle " + encode(model(), o)["cycle"].get<std::string>();
            return false;
        });
    }
    return cycles;
}

Json Session::obstructions_json(const DivisorClass& a, const DivisorClass& t, int k)
{
    const ObstructionSet s = enumerate_obstructions(model(), a, t, k, margin());
    cross_check("obstructions k=" + std::to_string(k), [&](std::string& detail) {
        const ObstructionSet o = obstruction_oracle(oracle_model(), a, t, k, 4 * kOracleMaxPoints);
        if (o.divisors == s.divisors && o.exceptional == s.exceptional)
            return true;
        detail = "oracle found " + std::to_string(o.divisors.size()) + " divisors, enumeration " +
                 std::to_string(s.divisors.size());
        return false;
    }, oracle_skip(a, t, k));
    return encode(model(), s);
}

Json Session::tau_json(const DivisorClass& a, const DivisorClass& t)
{
    const TauResult tau = obstruction_minimum(model(), a, t);
    cross_check("tau", [&](std::string& detail) {
        if (tau.value.infinite) {
            if (exceptional_curve(oracle_model(), a).empty())
                return true;
            detail = "oracle model has a nonempty exceptional curve";
            return false;
        }
        const ObstructionSet o = obstruction_oracle(oracle_model(), a, t, tau.value.value, 4 * kOracleMaxPoints);
        if (o.witness_minimum && o.witness_minimum->value == tau.value.value)
            return true;
        detail = "oracle minimum differs";
        return false;
    }, tau.value.infinite ? std::string() : oracle_skip(a, t, tau.value.value));
    return encode(model(), tau);
}

Json Session::ek_json(const DivisorClass& a, const DivisorClass& t, int k)
{
    const CorrectionDivisor e = correction_divisor(model(), a, t, k);
    cross_check("correction divisor k=" + std::to_string(k), [&](std::string& detail) {
        const SurfaceModel& om = oracle_model();
        const Integer det = abs(determinant(om.curve_gram(e.curves)));
        for (std::size_t i = 0; i < e.curves.size(); ++i) {
            const std::size_t c = e.curves[i];
            Rational sigma = om.intersect_curve(om.canonical(), c) - om.intersect_curve(t, c) + k;
            if (sigma < 0)
                sigma = 0;
            if (om.intersect_curve(e.divisor, c) != -Rational(det) * sigma) {
                detail = "E_k.C fails on " + om.curves()[c].name;
                return false;
            }
            if (om.intersect_curve(t - e.divisor, c) < om.intersect_curve(om.canonical(), c) + k) {
                detail = "repaired inequality fails on " + om.curves()[c].name;
                return false;
            }
        }
        return true;
    });
    return encode(model(), e);
}

Json Session::cmd_validate()
{
    const SurfaceModel& m = model();
    const Signature sig = signature(m.gram());
    Json out = {{"name", m.name()},
                {"rank", m.rank()},
                {"signature", {sig.positive, sig.negative, sig.zero}},
                {"canonical", encode(m, m.canonical())},
                {"canonical_squared", encode(m.self_intersection(m.canonical()))}};
    Json curves = Json::array();
    for (const auto& c : m.named_classes()) {
        const DivisorClass d(c.coords);
        curves.push_back({{"name", c.name},
                          {"class", encode(m, d)},
                          {"effective", c.effective},
                          {"self_intersection", encode(m.self_intersection(d))},
                          {"arithmetic_genus", to_string(arithmetic_genus(m, d))}});
    }
    out["curves"] = std::move(curves);
    out["ample_reference"] = m.ample_reference() ? encode(m, *m.ample_reference()) : Json(nullptr);
    if (!opt_.divisor.empty()) {
        const DivisorClass a = class_a();
        const Positivity p = positivity(m, a);
        out["divisor"] = {{"class", encode(m, a)},
                          {"self_intersection", encode(m.self_intersection(a))},
                          {"nef_model", p.nef_model},
                          {"big", p.big},
                          {"ample_model", p.ample_model}};
        out["divisor"]["pseudo_effective_model"] =
            p.pseudo_effective_model ? Json(*p.pseudo_effective_model) : Json(nullptr);
    }
    return out;
}

Json Session::cmd_zariski()
{
    return zariski_json(class_a());
}

Json Session::cmd_fundcycle()
{
    std::vector<std::vector<std::size_t>> components;
    if (!opt_.curves.empty()) {
        std::vector<std::size_t> c;
        try {
            c = parse_curve_list(model(), opt_.curves);
        } catch (const Error& e) {
            throw UsageError(std::string("--curves: ") + e.what());
        }
        components.push_back(std::move(c));
    } else if (!opt_.divisor.empty()) {
        const auto e = exceptional_curve(model(), class_a());
        components = connected_components(model(), e);
    } else {
        throw UsageError("fundcycle needs --curves or --divisor");
    }
    return {{"cycles", cycles_json(components)}};
}

Json Session::cmd_exceptional()
{
    if (!opt_.curves.empty()) {
        std::vector<std::size_t> c;
        try {
            c = parse_curve_list(model(), opt_.curves);
        } catch (const Error& e) {
            throw UsageError(std::string("--curves: ") + e.what());
        }
        const auto h = class_a_or_reference();
        if (!h)
            throw Error(Errc::NoAmpleReference, "no --divisor and no ample reference in the surface file");
        const DivisorClass a = construct_polarization(model(), c, *h);
        const Positivity p = positivity(model(), a);
        return {{"curves", format_curves(model(), c)},
                {"reference", encode(model(), *h)},
                {"polarization", encode(model(), a)},
                {"nef_model", p.nef_model},
                {"big", p.big},
                {"exceptional", format_curves(model(), exceptional_curve(model(), a))}};
    }
    const DivisorClass a = class_a();
    const auto e = exceptional_curve(model(), a);
    const auto components = connected_components(model(), e);
    Json comps = Json::array();
    for (const auto& comp : components)
        comps.push_back(format_curves(model(), comp));
    return {{"exceptional", format_curves(model(), e)},
            {"components", std::move(comps)},
            {"rational", is_rational_configuration(model(), e)},
            {"fundamental_cycles", cycles_json(components)}};
}

Json Session::cmd_bounds()
{
    const DivisorClass a = class_a();
    const DivisorClass t = class_t();
    const ThresholdOptions o = threshold_options();
    const BoundReport r = bound_report(model(), a, t, o);
    Json out = encode(model(), r);
    if (opt_.n) {
        const ThresholdCheck c = main_threshold_holds(model(), *o.n, o.k, a, t);
        out["main_threshold"] = {{"n", std::to_string(*opt_.n)},
                                 {"holds", c.holds},
                                 {"numerical_equivalence_branch", c.numerical_equivalence_branch}};
        if (c.numerical_equivalence_branch)
            caveats_.push_back("numerical equivalence: T ~ K + lambda A is checked only numerically");
    }
    obstructions_json(a, t, o.k);
    for (const auto& e : r.corrections)
        ek_json(a, t, e.k);
    return out;
}

Json Session::cmd_ek()
{
    return ek_json(class_a(), class_t(), opt_.k);
}

Json Session::cmd_obstructions()
{
    return obstructions_json(class_a(), class_t(), opt_.k);
}

Json Session::cmd_tau()
{
    return tau_json(class_a(), class_t());
}

Json Session::cmd_thresholds()
{
    const DivisorClass a = class_a();
    const DivisorClass t = class_t();
    const auto entries = theorem_thresholds(model(), a, t, threshold_options());
    Json out = Json::array();
    for (const auto& e : entries)
        out.push_back(encode(model(), e));
    obstructions_json(a, t, opt_.k);
    return {{"thresholds", std::move(out)}};
}

Json Session::cmd_matsusaka()
{
    const auto h = class_a_or_reference();
    if (!h)
        throw Error(Errc::NoAmpleReference, "no --divisor and no ample reference in the surface file");
    const MatsusakaComparison c = matsusaka_compare(model(), *h);
    Json out = encode(c);
    out["class"] = encode(model(), *h);
    out["adjoint_is_smallest"] = c.adjoint <= c.beltrametti_sommese && c.adjoint <= c.fernandez_del_busto;
    return out;
}

Json Session::cmd_report()
{
    const DivisorClass a = class_a();
    const DivisorClass t = class_t();
    Json out;
    out["surface"] = cmd_validate();
    const auto e = exceptional_curve(model(), a);
    out["exceptional"] = {{"curves", format_curves(model(), e)},
                          {"rational", is_rational_configuration(model(), e)},
                          {"fundamental_cycles", cycles_json(connected_components(model(), e))}};
    out["bounds"] = cmd_bounds();
    out["obstructions"] = obstructions_json(a, t, opt_.k);
    out["tau"] = tau_json(a, t);
    if (positivity(model(), a).ample_model)
        out["matsusaka"] = encode(matsusaka_compare(model(), a));
    return out;
}

int Session::run(std::ostream& out, std::ostream& err)
{
    try {
        model_ = parse_surface(opt_.surface);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }

    static const std::map<std::string, Json (Session::*)()> dispatch = {
        {"validate", &Session::cmd_validate},       {"zariski", &Session::cmd_zariski},
        {"fundcycle", &Session::cmd_fundcycle},     {"exceptional", &Session::cmd_exceptional},
        {"bounds", &Session::cmd_bounds},           {"ek", &Session::cmd_ek},
        {"obstructions", &Session::cmd_obstructions}, {"tau", &Session::cmd_tau},
        {"thresholds", &Session::cmd_thresholds},   {"compare-matsusaka", &Session::cmd_matsusaka},
        {"report", &Session::cmd_report},
    };

    Json result;
    try {
        if (opt_.k < 0)
            throw UsageError("-k must be nonnegative");
        build_oracle_model();
        inputs_["surface"] = opt_.surface;
        if (!opt_.divisor.empty())
            inputs_["divisor"] = encode(model(), divisor_arg(opt_.divisor, "--divisor"));
        inputs_["T"] = encode(model(), class_t());
        inputs_["k"] = opt_.k;
        inputs_["n"] = opt_.n ? Json(std::to_string(*opt_.n)) : Json(nullptr);
        if (!opt_.curves.empty())
            inputs_["curves"] = opt_.curves;
        inputs_["box_margin"] = encode(margin());
        inputs_["oracle"] = opt_.oracle;

        caveats_.push_back("relative to model: nef, ample and exceptional are tested against the listed curves only");
        if (opt_.no_fixed_part)
            caveats_.push_back("user-asserted: |A| has no fixed part (--assert-no-fixed-part)");
        if (opt_.base_point_free)
            caveats_.push_back("user-asserted: |A| has no base point (--assert-base-point-free)");

        result = (this->*dispatch.at(command_))();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }

    Json doc;
    doc["command"] = command_;
    doc["surface"] = model().name();
    doc["inputs"] = inputs_;
    doc["caveats"] = caveats_;
    doc["result"] = std::move(result);
    bool agree = true;
    if (opt_.oracle) {
        for (const auto& c : oracle_)
            agree = agree && (c["agreement"].is_null() || c["agreement"].get<bool>());
        doc["oracle"] = {{"checks", oracle_}, {"agreement", agree}};
    }

    if (opt_.json)
        out << doc.dump(2) << '\n';
    else
        render_text(doc, out);

    if (!agree) {
        for (const auto& c : oracle_)
            if (c["agreement"] == false)
                err << "oracle mismatch: " << c["check"].get<std::string>() << ": "
                    << c["detail"].get<std::string>() << '\n';
        return kExitOracleMismatch;
    }
    return kExitOk;
}

} // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact effective-bound calculator for linear systems on surface lattice models", "effbound"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--surface", opt.surface, "surface JSON file")->required();
    app.add_option("--divisor", opt.divisor, "class A (or D for zariski): \"1,2\" or \"2*s + 1/2*f\"");
    app.add_option("-T", opt.t, "twist class T (default 0)");
    app.add_option("-k", opt.k, "obstruction level k >= 0");
    app.add_option("-n", opt.n, "multiple n");
    app.add_option("--curves", opt.curves, "comma list of curve names");
    app.add_flag("--assert-no-fixed-part", opt.no_fixed_part, "assume |A| has no fixed part");
    app.add_flag("--assert-base-point-free", opt.base_point_free, "assume |A| has no base point");
    auto* json = app.add_flag("--json", opt.json, "JSON output");
    auto* text = app.add_flag("--text", opt.text, "text output (default)");
    json->excludes(text);
    app.add_flag("--oracle", opt.oracle, "run brute-force cross-checks; exit 3 on mismatch");
    app.add_option("--box-margin", opt.box_margin, "scale factor >= 1 for obstruction search boxes");
    app.add_option("--inject-gram-fault", opt.gram_fault)->group("");

    const std::vector<std::pair<const char*, const char*>> commands = {
        {"validate", "check the surface file"},
        {"zariski", "Zariski decomposition of --divisor"},
        {"fundcycle", "fundamental cycles of --curves or of E(A)"},
        {"exceptional", "E(A); with --curves, a polarization contracting them"},
        {"bounds", "adjoint thresholds and all derived quantities"},
        {"ek", "correction divisor for level k"},
        {"obstructions", "obstruction divisors at level k"},
        {"tau", "minimum obstruction value"},
        {"thresholds", "per-statement effective thresholds"},
        {"compare-matsusaka", "classical very-ampleness bounds against 2 + M(H,0)"},
        {"report", "everything above for A and T"},
    };
    for (const auto& [name, help] : commands)
        app.add_subcommand(name, help);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Session session(opt, command);
    return session.run(out, err);
}

} // namespace effbound
