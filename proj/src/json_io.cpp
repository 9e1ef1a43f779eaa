#include "hylab/json_io.hpp"
#include "hylab/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace hylab {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError(where + ": unknown key \"" + it.key() + "\"");
}

Complex complex_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(where + ": complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

} // namespace

FunctionSpec function_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("function spec: missing \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "expmono") {
        reject_unknown_keys(j, {"kind", "alpha", "beta", "coef"}, "expmono");
        ExpMonomial m;
        if (!j.contains("alpha")) throw ParseError("expmono: missing \"alpha\"");
        m.alpha = j.at("alpha").get<double>();
        m.beta = j.contains("beta") ? complex_from(j.at("beta"), "expmono.beta") : Complex{1, 0};
        m.coef = j.contains("coef") ? complex_from(j.at("coef"), "expmono.coef") : Complex{1, 0};
        return FunctionSpec(m);
    }
    if (kind == "simple" || kind == "sampled") {
        const char* pts_key = kind == "simple" ? "breaks" : "grid";
        reject_unknown_keys(j, {"kind", pts_key, "values"}, kind);
        if (!j.contains(pts_key) || !j.contains("values"))
            throw ParseError(kind + ": missing \"" + pts_key + "\" or \"values\"");
        std::vector<double> pts = j.at(pts_key).get<std::vector<double>>();
        std::vector<Complex> vals;
        for (const auto& v : j.at("values")) vals.push_back(complex_from(v, kind + ".values"));
        if (kind == "simple") return FunctionSpec(SimpleFunction{std::move(pts), std::move(vals)});
        return FunctionSpec(SampledFunction{std::move(pts), std::move(vals)});
    }
    throw ParseError("function spec: unknown kind \"" + kind + "\"");
}

std::string function_to_json(const FunctionSpec& f) {
    json j;
    if (f.is_expmono()) {
        const auto& m = f.expmono();
        j["kind"] = "expmono";
        j["alpha"] = m.alpha;
        j["beta"] = complex_to(m.beta);
        j["coef"] = complex_to(m.coef);
    } else if (f.is_simple()) {
        j["kind"] = "simple";
        j["breaks"] = f.simple().breaks;
        json vals = json::array();
        for (const auto& v : f.simple().values) vals.push_back(complex_to(v));
        j["values"] = vals;
    } else {
        j["kind"] = "sampled";
        j["grid"] = f.sampled().grid;
        json vals = json::array();
        for (const auto& v : f.sampled().values) vals.push_back(complex_to(v));
        j["values"] = vals;
    }
    return j.dump();
}

CompoundCurve curve_from_json(const std::string& text) {
    const json j = parse(text);
    reject_unknown_keys(j, {"pieces", "class"}, "curve");
    if (!j.contains("pieces")) throw ParseError("curve: missing \"pieces\"");
    CompoundCurve curve;
    for (const auto& pj : j.at("pieces")) {
        std::vector<Complex> vs;
        for (const auto& v : pj) vs.push_back(complex_from(v, "curve.pieces"));
        curve.pieces.push_back(Polyline::of(std::move(vs)));
    }
    if (j.contains("class")) {
        const json& cj = j.at("class");
        reject_unknown_keys(cj, {"name", "lambda", "phi", "nu", "c", "orientation", "a", "b"},
                            "curve.class");
        const std::string name = cj.at("name").get<std::string>();
        auto& cls = curve.cls;
        if (name == "monotone")
            cls.kind = CurveClassKind::Monotone;
        else if (name == "lipschitz")
            cls.kind = CurveClassKind::Lipschitz;
        else if (name == "convex")
            cls.kind = CurveClassKind::Convex;
        else if (name == "radial")
            cls.kind = CurveClassKind::Radial;
        else if (name == "comb")
            cls.kind = CurveClassKind::Comb;
        else if (name == "boxed")
            cls.kind = CurveClassKind::Boxed;
        else if (name == "generic")
            cls.kind = CurveClassKind::Generic;
        else
            throw ParseError("curve.class: unknown name \"" + name + "\"");
        if (cj.contains("lambda")) cls.lambda = cj.at("lambda").get<double>();
        if (cj.contains("phi")) cls.phi = cj.at("phi").get<double>();
        if (cj.contains("nu")) cls.nu = cj.at("nu").get<int>();
        if (cj.contains("c")) cls.c = cj.at("c").get<double>();
        if (cj.contains("orientation"))
            cls.horizontal = cj.at("orientation").get<std::string>() == "horizontal";
        if (cj.contains("a")) cls.box_a = cj.at("a").get<std::vector<double>>();
        if (cj.contains("b")) cls.box_b = cj.at("b").get<std::vector<double>>();
    }
    return curve;
}

std::string curve_to_json(const CompoundCurve& c) {
    json j;
    json pieces = json::array();
    for (const auto& p : c.pieces) {
        json vs = json::array();
        for (const auto& v : p.vertices) vs.push_back(complex_to(v));
        pieces.push_back(vs);
    }
    j["pieces"] = pieces;
    static const char* names[] = {"generic", "monotone", "lipschitz", "convex",
                                  "radial",  "comb",     "boxed"};
    json cj;
    cj["name"] = names[static_cast<int>(c.cls.kind)];
    switch (c.cls.kind) {
    case CurveClassKind::Lipschitz:
        cj["lambda"] = c.cls.lambda;
        break;
    case CurveClassKind::Radial:
        cj["phi"] = c.cls.phi;
        cj["nu"] = c.cls.nu;
        cj["c"] = c.cls.c;
        break;
    case CurveClassKind::Comb:
        cj["nu"] = c.cls.nu;
        cj["c"] = c.cls.c;
        cj["orientation"] = c.cls.horizontal ? "horizontal" : "vertical";
        break;
    case CurveClassKind::Boxed:
        cj["nu"] = c.cls.nu;
        cj["c"] = c.cls.c;
        cj["a"] = c.cls.box_a;
        cj["b"] = c.cls.box_b;
        break;
    default:
        break;
    }
    j["class"] = cj;
    return j.dump();
}

ProjectionCertificate certificate_from_json(const std::string& text) {
    const json j = parse(text);
    reject_unknown_keys(j, {"alpha", "k_xi", "k_eta", "provenance"}, "certificate");
    ProjectionCertificate cert;
    cert.alpha = j.at("alpha").get<double>();
    cert.k_xi = j.at("k_xi").get<double>();
    cert.k_eta = j.at("k_eta").get<double>();
    if (j.contains("provenance")) {
        const json& pj = j.at("provenance");
        const std::string kind = pj.at("kind").get<std::string>();
        if (kind == "class-formula") {
            cert.provenance = ProjectionCertificate::Provenance::ClassFormula;
            if (pj.contains("name")) cert.class_name = pj.at("name").get<std::string>();
        } else if (kind == "empirical") {
            cert.provenance = ProjectionCertificate::Provenance::Empirical;
            if (pj.contains("budget")) cert.budget = pj.at("budget").get<long>();
            if (pj.contains("worst_ratio")) cert.worst_ratio = pj.at("worst_ratio").get<double>();
        } else {
            throw ParseError("certificate.provenance: unknown kind");
        }
    }
    return cert;
}

std::string certificate_to_json(const ProjectionCertificate& cert) {
    json j;
    j["alpha"] = cert.alpha;
    j["k_xi"] = cert.k_xi;
    j["k_eta"] = cert.k_eta;
    json pj;
    if (cert.provenance == ProjectionCertificate::Provenance::ClassFormula) {
        pj["kind"] = "class-formula";
        pj["name"] = cert.class_name;
    } else {
        pj["kind"] = "empirical";
        pj["budget"] = cert.budget;
        pj["worst_ratio"] = cert.worst_ratio;
        json w = json::array();
        for (const auto& a : cert.worst_witness)
            w.push_back(json::array({a.piece, a.s0, a.s1}));
        pj["witness"] = w;
    }
    j["provenance"] = pj;
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace hylab
