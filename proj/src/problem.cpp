#include "toricb/problem.hpp"

#include <algorithm>
#include <sstream>

#include "toricb/bsato.hpp"
#include "toricb/toric.hpp"

namespace toricb {

void ProblemOptions::merge(const ProblemOptions& other) {
    if (other.alpha) alpha = other.alpha;
    if (other.max) max = other.max;
    if (other.mode) mode = other.mode;
    if (other.box_cap) box_cap = other.box_cap;
    if (other.kappa) kappa = other.kappa;
    if (other.schedule) schedule = other.schedule;
    if (other.assume_normal) assume_normal = other.assume_normal;
    if (other.check_normal) check_normal = other.check_normal;
}

namespace {

Rational rational_field(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ProblemError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_number_float()) throw ProblemError(where + ": floats are not accepted, write rationals as \"p/q\"");
    throw ProblemError(where + ": expected a rational");
}

Integer integer_field(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.dump());
    if (j.is_string()) {
        Rational r = rational_field(j, where);
        if (!is_integral(r)) throw ProblemError(where + ": expected an integer");
        return r.get_num();
    }
    if (j.is_number_float()) throw ProblemError(where + ": floats are not accepted");
    throw ProblemError(where + ": expected an integer");
}

unsigned unsigned_field(const Json& j, const std::string& where) {
    Integer x = integer_field(j, where);
    if (x < 0 || !x.fits_uint_p()) throw ProblemError(where + ": expected a nonnegative integer");
    return static_cast<unsigned>(x.get_ui());
}

IntVec int_vector(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ProblemError(where + ": expected an array of integers");
    IntVec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_field(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

bool bool_field(const Json& j, const std::string& where) {
    if (!j.is_boolean()) throw ProblemError(where + ": expected true or false");
    return j.get<bool>();
}

ProblemOptions parse_options(const Json& j) {
    if (!j.is_object()) throw ProblemError("options: expected an object");
    ProblemOptions o;
    for (const auto& [key, value] : j.items()) {
        const std::string where = "options." + key;
        if (key == "alpha") o.alpha = rational_field(value, where);
        else if (key == "max") o.max = rational_field(value, where);
        else if (key == "mode") {
            if (!value.is_string()) throw ProblemError(where + ": expected \"relint\" or \"closed\"");
            try {
                o.mode = parse_membership_mode(value.get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw ProblemError(where + ": " + e.what());
            }
        } else if (key == "box_cap") o.box_cap = unsigned_field(value, where);
        else if (key == "kappa") o.kappa = unsigned_field(value, where);
        else if (key == "schedule") {
            if (!value.is_array()) throw ProblemError(where + ": expected an array");
            std::vector<unsigned> s;
            for (const auto& x : value) s.push_back(unsigned_field(x, where));
            o.schedule = s;
        } else if (key == "assume_normal") o.assume_normal = bool_field(value, where);
        else if (key == "check_normal") o.check_normal = bool_field(value, where);
        else throw ProblemError("unknown option '" + key + "'");
    }
    return o;
}

Json int_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json vec_json(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_json(x));
    return a;
}

Json vecs_json(const std::vector<IntVec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vec_json(v));
    return a;
}

Json rats_json(const std::vector<Rational>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_string(v));
    return a;
}

Json poly_json(const UniPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

std::string factored(const BFunctionResult& r) {
    std::vector<RootMultiplicity> roots = r.roots;
    std::sort(roots.begin(), roots.end(),
              [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root > b.root; });
    std::string out;
    for (const auto& rm : roots) {
        Rational neg = -rm.root;
        std::string f = neg == 0 ? "s" : neg > 0 ? "s+" + to_string(neg) : "s-" + to_string(Rational(-neg));
        out += "(" + f + ")";
        if (rm.multiplicity > 1) out += "^" + std::to_string(rm.multiplicity);
    }
    if (r.unfactored_remainder.degree() > 0) out += "(" + r.unfactored_remainder.to_string() + ")";
    return out.empty() ? "1" : out;
}

Json bfunction_json(const BFunctionResult& r) {
    Json j;
    j["b"] = r.b.to_string();
    j["factored"] = factored(r);
    j["coefficients"] = poly_json(r.b);
    Json roots = Json::array();
    for (const auto& rm : r.roots) roots.push_back({{"root", to_string(rm.root)}, {"multiplicity", rm.multiplicity}});
    j["roots"] = roots;
    j["reflected_roots"] = rats_json(r.reflected_roots());
    j["unfactored_remainder"] = poly_json(r.unfactored_remainder);
    j["box_used"] = r.box_used;
    j["generator_count"] = r.generator_count;
    j["stabilized"] = r.stabilized;
    j["truncation_divisibility"] = r.truncation_divisibility;
    j["lct"] = r.lct ? Json(to_string(*r.lct)) : Json(nullptr);
    j["lct_check"] = r.lct_check;
    Json hist = Json::array();
    for (const auto& step : r.history) {
        Json h;
        h["box"] = step.box;
        h["generator_count"] = step.generator_count;
        h["minimal"] = step.minimal ? Json(step.minimal->to_string()) : Json(nullptr);
        if (step.groebner_verified) h["groebner_verified"] = *step.groebner_verified;
        hist.push_back(h);
    }
    j["history"] = hist;
    return j;
}

Json jumping_json(const SemigroupData& s, const JumpingReport& r) {
    Json j;
    j["lct"] = to_string(r.lct);
    j["bound"] = to_string(r.bound);
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"alpha", to_string(e.alpha)}, {"witness", vec_json(e.witness)},
                           {"image", vec_json(f_map(s, e.witness))}});
    j["entries"] = entries;
    j["search_mode"] = to_string(r.mode);
    j["kappa"] = r.kappa;
    return j;
}

std::string join(const std::vector<Rational>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + to_string(xs[i]);
    return out;
}

BFunctionOptions bfunction_options(const ProblemOptions& o) {
    BFunctionOptions b;
    if (o.schedule) b.schedule = *o.schedule;
    if (o.box_cap) b.cap = *o.box_cap;
    return b;
}

JumpingOptions jumping_options(const ProblemOptions& o) {
    JumpingOptions j;
    if (o.kappa) j.kappa = *o.kappa;
    return j;
}

MonomialIdeal require_ideal(const SemigroupData& s, const ProblemDocument& doc) {
    if (doc.polynomial)
        throw ProblemError("this command needs a monomial ideal; polynomial ideals are supported by 'transport' only");
    if (doc.monomials.empty()) throw ProblemError("document has no ideal");
    return make_monomial_ideal(s, doc.monomials);
}

struct Context {
    const ProblemDocument& doc;
    RunResult& out;
    std::ostringstream summary;
};

void cmd_check(Context& c) {
    const IntMatrix& a = c.doc.matrix;
    StructureReport r = analyze_structure(a);
    Json& j = c.out.report;
    j["full_dimensional"] = r.full_dimensional;
    j["pointed"] = r.pointed;
    j["saturated"] = r.saturated;
    bool good = r.full_dimensional && r.pointed && r.saturated;
    const bool cone_ok = r.full_dimensional && r.pointed;
    c.summary << "full-dimensional: " << (r.full_dimensional ? "yes" : "no") << "\n"
              << "pointed: " << (r.pointed ? "yes" : "no") << "\n"
              << "saturated: " << (r.saturated ? "yes" : "no") << "\n";
    if (cone_ok && c.doc.options.check_normal.value_or(false)) {
        NormalityVerdict v = normality(a);
        j["normal"] = v.normal;
        j["witness"] = v.witness ? vec_json(*v.witness) : Json(nullptr);
        c.summary << "normal: " << (v.normal ? "yes" : "no");
        if (v.witness) c.summary << " (witness " << to_string(*v.witness) << ")";
        c.summary << "\n";
        good = good && v.normal;
    } else {
        j["normal"] = nullptr;
        c.summary << "normal: not checked\n";
    }
    if (!good) c.out.exit_code = ExitCode::structural;
}

void cmd_facets(Context& c, const SemigroupData& s) {
    Json& j = c.out.report;
    j["facets"] = vecs_json(s.facets());
    j["extreme_rays"] = vecs_json(s.extreme_rays());
    j["e"] = vec_json(s.e());
    c.summary << s.facet_count() << " facets:";
    for (const auto& f : s.facets()) c.summary << " " << to_string(f);
    c.summary << "\n";
}

void cmd_transport(Context& c, const SemigroupData& s) {
    Json& j = c.out.report;
    if (c.doc.polynomial) {
        auto images = transport(s, c.doc.polynomials);
        Json polys = Json::array();
        for (const auto& p : images) {
            Json terms = Json::array();
            for (const auto& t : p) terms.push_back({{"coeff", to_string(t.coeff)}, {"exp", vec_json(t.exponent)}});
            polys.push_back(terms);
        }
        j["polynomials"] = polys;
        j["note"] =
            "b-functions of non-monomial ideals are not computed here; the transported generators can be "
            "passed to a D-module system";
        c.summary << "transported " << images.size() << " polynomial generators\n";
        return;
    }
    MonomialIdeal ideal = require_ideal(s, c.doc);
    auto images = transport(s, ideal);
    j["minimal_generators"] = vecs_json(ideal.generators());
    j["generators"] = vecs_json(images);
    c.summary << "transported generators:";
    for (const auto& g : images) c.summary << " " << to_string(g);
    c.summary << "\n";
}

void cmd_bfunction(Context& c, const SemigroupData& s) {
    MonomialIdeal ideal = require_ideal(s, c.doc);
    BFunctionResult r = bfunction(s, ideal, bfunction_options(c.doc.options));
    c.out.report["bfunction"] = bfunction_json(r);
    c.summary << "b(s) = " << factored(r) << "\n"
              << "box " << r.box_used << ", " << (r.stabilized ? "stabilized" : "NOT stabilized") << "\n";
    if (r.unfactored_remainder.degree() > 0)
        c.summary << "warning: factor without rational roots: " << r.unfactored_remainder.to_string() << "\n";
    if (!r.stabilized) c.out.exit_code = ExitCode::uncertified;
}

void cmd_lct(Context& c, const SemigroupData& s) {
    MonomialIdeal ideal = require_ideal(s, c.doc);
    Rational lct = log_canonical_threshold(s, ideal);
    c.out.report["lct"] = to_string(lct);
    c.summary << "lct = " << to_string(lct) << "\n";
}

void cmd_multiplier(Context& c, const SemigroupData& s) {
    MonomialIdeal ideal = require_ideal(s, c.doc);
    if (!c.doc.options.alpha) throw ProblemError("option alpha is required for 'multiplier'");
    MembershipMode mode = c.doc.options.mode.value_or(MembershipMode::relint);
    MultiplierIdealResult r = multiplier_ideal(s, ideal, *c.doc.options.alpha, mode);
    Json& j = c.out.report;
    j["alpha"] = to_string(r.alpha);
    j["mode"] = to_string(r.mode);
    j["generators"] = vecs_json(r.generators);
    j["box_used"] = vec_json(r.box_used);
    j["stabilized"] = r.stabilized;
    c.summary << "J(" << to_string(r.alpha) << ", " << to_string(r.mode) << ") generated by";
    for (const auto& g : r.generators) c.summary << " " << to_string(g);
    c.summary << (r.stabilized ? "\n" : " (NOT stabilized)\n");
    if (!r.stabilized) c.out.exit_code = ExitCode::uncertified;
}

void cmd_jumping(Context& c, const SemigroupData& s) {
    MonomialIdeal ideal = require_ideal(s, c.doc);
    Rational bound = c.doc.options.max ? *c.doc.options.max : log_canonical_threshold(s, ideal) + 1;
    JumpingReport r = jumping_coefficients(s, ideal, bound, jumping_options(c.doc.options));
    c.out.report["jumping"] = jumping_json(s, r);
    std::vector<Rational> alphas;
    for (const auto& e : r.entries) alphas.push_back(e.alpha);
    c.summary << "jumping coefficients in (0, " << to_string(bound) << "]: {" << join(alphas) << "} ("
              << to_string(r.mode) << " search)\n";
    if (r.mode == SearchMode::windowed) c.out.exit_code = ExitCode::uncertified;
}

void cmd_verify(Context& c, const SemigroupData& s) {
    MonomialIdeal ideal = require_ideal(s, c.doc);
    CorrespondenceReport r =
        verify_correspondence(s, ideal, bfunction_options(c.doc.options), jumping_options(c.doc.options));
    Json& j = c.out.report;
    j["verdict"] = to_string(r.verdict);
    j["lct"] = to_string(r.jumping.lct);
    j["lct_is_smallest_root"] = r.lct_is_smallest_root;
    j["missing"] = rats_json(r.missing);
    j["bfunction"] = bfunction_json(r.bfunction);
    j["jumping"] = jumping_json(s, r.jumping);
    std::vector<Rational> alphas;
    for (const auto& e : r.jumping.entries) alphas.push_back(e.alpha);
    c.summary << "b(s) = " << factored(r.bfunction) << "\n"
              << "lct = " << to_string(r.jumping.lct) << "\n"
              << "jumping coefficients in (0, " << to_string(r.jumping.bound) << "]: {" << join(alphas) << "}\n"
              << "verdict: " << to_string(r.verdict) << "\n";
    if (r.verdict == Verdict::fail) c.out.exit_code = ExitCode::failed;
    else if (r.verdict == Verdict::inconclusive || r.jumping.mode == SearchMode::windowed)
        c.out.exit_code = ExitCode::uncertified;
}

}  // namespace

ProblemDocument parse_problem(const Json& j) {
    if (!j.is_object()) throw ProblemError("document must be a JSON object");
    ProblemDocument doc;
    for (const auto& [key, value] : j.items())
        if (key != "matrix" && key != "ideal" && key != "options" && key != "name" && key != "description")
            throw ProblemError("unknown field '" + key + "'");
    if (!j.contains("matrix")) throw ProblemError("missing field 'matrix'");
    const Json& m = j.at("matrix");
    if (!m.is_array() || m.empty()) throw ProblemError("matrix: expected a nonempty array of rows");
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(int_vector(m[i], "matrix[" + std::to_string(i) + "]"));
    for (const auto& r : rows)
        if (r.size() != rows.front().size() || r.empty()) throw ProblemError("matrix: rows must be nonempty and of equal length");
    doc.matrix = IntMatrix::from_rows(rows);
    const std::size_t d = rows.size();

    if (j.contains("ideal")) {
        const Json& id = j.at("ideal");
        if (!id.is_object() || id.size() != 1)
            throw ProblemError("ideal: expected {\"monomial\": [...]} or {\"polynomial\": [...]}");
        if (id.contains("monomial")) {
            const Json& gens = id.at("monomial");
            if (!gens.is_array() || gens.empty()) throw ProblemError("ideal.monomial: expected a nonempty array");
            for (std::size_t i = 0; i < gens.size(); ++i) {
                IntVec v = int_vector(gens[i], "ideal.monomial[" + std::to_string(i) + "]");
                if (v.size() != d) throw ProblemError("ideal.monomial[" + std::to_string(i) + "]: expected length " + std::to_string(d));
                doc.monomials.push_back(std::move(v));
            }
        } else if (id.contains("polynomial")) {
            doc.polynomial = true;
            const Json& gens = id.at("polynomial");
            if (!gens.is_array() || gens.empty()) throw ProblemError("ideal.polynomial: expected a nonempty array");
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const std::string where = "ideal.polynomial[" + std::to_string(i) + "]";
                if (!gens[i].is_array()) throw ProblemError(where + ": expected an array of terms");
                SemigroupPolynomial p;
                for (const auto& t : gens[i]) {
                    if (!t.is_object() || !t.contains("coeff") || !t.contains("exp") || t.size() != 2)
                        throw ProblemError(where + ": terms are {\"coeff\": \"p/q\", \"exp\": [...]}");
                    IntVec e = int_vector(t.at("exp"), where + ".exp");
                    if (e.size() != d) throw ProblemError(where + ".exp: expected length " + std::to_string(d));
                    p.push_back({rational_field(t.at("coeff"), where + ".coeff"), std::move(e)});
                }
                doc.polynomials.push_back(std::move(p));
            }
        } else {
            throw ProblemError("ideal: expected key 'monomial' or 'polynomial'");
        }
    }
    if (j.contains("options")) doc.options = parse_options(j.at("options"));
    return doc;
}

ProblemDocument parse_problem_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ProblemError(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(j);
}

std::vector<unsigned> parse_schedule(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto first = item.find_first_not_of(" \t"), last = item.find_last_not_of(" \t");
        item = first == std::string::npos ? std::string() : item.substr(first, last - first + 1);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw ProblemError("schedule: expected comma-separated nonnegative integers, got '" + text + "'");
        Integer x(item);
        if (!x.fits_uint_p()) throw ProblemError("schedule entry too large");
        out.push_back(static_cast<unsigned>(x.get_ui()));
    }
    if (out.empty()) throw ProblemError("schedule is empty");
    return out;
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> all{"check", "facets", "transport", "bfunction",
                                              "lct", "multiplier", "jumping", "verify"};
    return all;
}

RunResult run(const std::string& command, const ProblemDocument& doc) {
    RunResult out;
    out.report["command"] = command;
    Context c{doc, out, {}};
    try {
        if (std::find(commands().begin(), commands().end(), command) == commands().end())
            throw ProblemError("unknown command '" + command + "'");
        if (command == "check") {
            cmd_check(c);
        } else {
            SemigroupData s = build_semigroup(doc.matrix);
            out.report["dim"] = s.dim();
            out.report["f_matrix"] = vecs_json(s.facets());
            if (command == "facets") {
                cmd_facets(c, s);
            } else {
                if (doc.options.assume_normal.value_or(false)) {
                    out.report["normality"] = "assumed";
                } else {
                    NormalityVerdict v = is_normal(s);
                    if (!v.normal) {
                        out.report["normality"] = "violated";
                        out.report["witness"] = v.witness ? vec_json(*v.witness) : Json(nullptr);
                        throw StructuralError(StructuralError::Kind::not_normal,
                                              "semigroup is not normal; witness " +
                                                  (v.witness ? to_string(*v.witness) : std::string("?")));
                    }
                    out.report["normality"] = "verified";
                }
                s.set_normal(true);
                if (command == "transport") cmd_transport(c, s);
                else if (command == "bfunction") cmd_bfunction(c, s);
                else if (command == "lct") cmd_lct(c, s);
                else if (command == "multiplier") cmd_multiplier(c, s);
                else if (command == "jumping") cmd_jumping(c, s);
                else cmd_verify(c, s);
            }
        }
    } catch (const StructuralError& e) {
        out.exit_code = ExitCode::structural;
        out.report["error"] = e.what();
        c.summary << "structural assumption violated: " << e.what() << "\n";
    } catch (const ProblemError& e) {
        out.exit_code = ExitCode::malformed;
        out.report["error"] = e.what();
        c.summary << "malformed input: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        out.exit_code = ExitCode::malformed;
        out.report["error"] = e.what();
        c.summary << "invalid input: " << e.what() << "\n";
    } catch (const std::exception& e) {
        out.exit_code = ExitCode::malformed;
        out.report["error"] = e.what();
        c.summary << "error: " << e.what() << "\n";
    }
    out.report["exit_code"] = out.exit_code;
    out.summary = c.summary.str();
    return out;
}

}  // namespace toricb
