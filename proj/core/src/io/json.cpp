#include "qadhm/io/json.hpp"

#include <fstream>
#include <sstream>

namespace qadhm::io {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

json poly_terms(const NCPoly& f) {
    json ts = json::array();
    for (const auto& [k, c] : f.terms())
        ts.push_back({{"k", k.k}, {"e", json(k.e)}, {"coef", to_json(c)}});
    return ts;
}

Chart chart_from(const std::string& s) {
    if (s == "I") return Chart::I;
    if (s == "J") return Chart::J;
    if (s == "IJ") return Chart::IJ;
    throw SchemaError("unknown chart '" + s + "'");
}

json matrix_rows(const QMatrix& m) {
    json rows = json::array();
    for (const auto& r : to_strings(m)) rows.push_back(r);
    return rows;
}

const char* kPencilVars[] = {"x", "y", "z", "w"};

json pencil_json(const QPencil& p) {
    json o;
    for (const char* v : kPencilVars) o[v] = matrix_rows(p.coeff(v));
    o["const"] = matrix_rows(p.constant);
    return o;
}

QPencil pencil_from(const json& j, std::size_t rows, std::size_t cols, const char* name) {
    QPencil p({"x", "y", "z", "w"}, rows, cols);
    for (const char* v : kPencilVars) {
        std::string field = std::string(name) + "." + v;
        if (j.contains(v)) p.coeff(v) = matrix_from_json(j.at(v), rows, cols, field.c_str());
    }
    if (j.contains("const")) p.constant = matrix_from_json(j.at("const"), rows, cols, (std::string(name) + ".const").c_str());
    return p;
}

}  // namespace

json to_json(const GaussRational& g) { return g.str(); }

json to_json(const QLaurent& f) {
    json o = json::object();
    for (const auto& [e, c] : f.terms()) o[std::to_string(e)] = c.str();
    return o;
}

json to_json(const QRat& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const QMatrix& m) { return matrix_rows(m); }

json to_json(const ComplexADHMDatum& d) {
    return {{"kind", "complex"}, {"r", d.r}, {"c", d.c},
            {"B11", to_json(d.B11)}, {"B12", to_json(d.B12)}, {"B21", to_json(d.B21)}, {"B22", to_json(d.B22)},
            {"i1", to_json(d.i1)}, {"i2", to_json(d.i2)}, {"j1", to_json(d.j1)}, {"j2", to_json(d.j2)}};
}

json to_json(const RealADHMDatum& d) {
    return {{"kind", "real"}, {"r", d.r}, {"c", d.c}, {"B1", to_json(d.B1)}, {"B2", to_json(d.B2)},
            {"i", to_json(d.i)}, {"j", to_json(d.j)}};
}

json to_json(const ProjPoint& p) { return "[" + p.first.str() + ":" + p.second.str() + "]"; }

json to_json(const StabilityReport& s) {
    json fp = json::array(), cfp = json::array();
    for (const auto& p : s.failing_points) fp.push_back(to_json(p));
    for (const auto& p : s.costable_failing_points) cfp.push_back(to_json(p));
    return {{"stable_everywhere", s.stable_everywhere},
            {"costable_everywhere", s.costable_everywhere},
            {"semistable", s.semistable},
            {"semiregular", s.semiregular},
            {"regular", s.regular},
            {"stability_gcd", s.stability_gcd},
            {"costability_gcd", s.costability_gcd},
            {"failing_points", fp},
            {"costable_failing_points", cfp},
            {"witness_basis", s.witness_subspace ? to_json(*s.witness_subspace) : json(nullptr)}};
}

json to_json(const Monad& m) {
    return {{"r", m.r}, {"c", m.c}, {"alpha", pencil_json(m.alpha)}, {"beta", pencil_json(m.beta)}};
}

json to_json(const SheafClassification& s) {
    json pts = json::array();
    for (const auto& X : s.singular_sample) pts.push_back(point_str(X));
    return {{"kind", to_string(s.kind)}, {"singular_sample", pts}, {"stability", to_json(s.report)}};
}

json to_json(const NCPoly& f) { return {{"chart", to_string(f.chart())}, {"terms", poly_terms(f)}}; }

json to_json(const NCForm& w) {
    json comps = json::array();
    for (unsigned m : w.masks()) comps.push_back({{"dx", mask_str(m)}, {"coef", poly_terms(w.component(m))}});
    return {{"degree", w.degree()}, {"components", comps}};
}

json to_json(const CalculusTable& t) {
    static const char* names[] = {"x11", "x12", "x21", "x22"};
    json rules = json::array(), wedges = json::array();
    for (int b = 0; b < 4; ++b)
        for (int a = 0; a < 4; ++a) {
            json rhs = json::array();
            for (const auto& r : t.rule(b, a))
                rhs.push_back({{"x", names[r.c]}, {"dx", std::string("d") + names[r.d]}, {"coef", to_json(r.coef)}});
            rules.push_back({{"lhs", std::string("d") + names[b] + " " + names[a]}, {"rhs", rhs}});
            if (b < a) continue;
            json wr = json::array();
            for (const auto& r : t.pair_rule(b, a))
                wr.push_back({{"lo", std::string("d") + names[r.lo]}, {"hi", std::string("d") + names[r.hi]},
                              {"coef", to_json(r.coef)}});
            wedges.push_back({{"lhs", std::string("d") + names[b] + "^d" + names[a]}, {"rhs", wr}});
        }
    return {{"p", to_string(t.p)}, {"leibniz", t.leibniz}, {"unknowns", t.unknowns}, {"equations", t.equations},
            {"rank", t.rank}, {"squares_forced", t.squares_forced}, {"dx_x", rules}, {"wedge", wedges}};
}

json to_json(const ChernClass& c) {
    json a = json::array();
    for (const auto& v : c.a) a.push_back(v.get_str());
    return {{"coefficients", a}, {"str", c.str()}};
}

json to_json(const ModuleOperator& op) {
    json rows = json::array();
    for (std::size_t i = 0; i < op.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < op.cols; ++j) row.push_back(op.at(i, j).str());
        rows.push_back(row);
    }
    return {{"rows", op.rows}, {"cols", op.cols}, {"blocks", op.blocks}, {"entries", rows}};
}

GaussRational gauss_from_json(const json& j) {
    if (j.is_number_integer()) return GaussRational(j.get<long>());
    if (!j.is_string()) throw SchemaError("scalar must be a string such as \"1/2+3/1*i\"");
    try {
        return GaussRational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError("bad scalar '" + j.get<std::string>() + "': " + e.what());
    }
}

QLaurent laurent_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return QLaurent(gauss_from_json(j));
    if (!j.is_object()) throw SchemaError("Laurent polynomial must be an object {exponent: scalar}");
    std::vector<QLaurent::Term> ts;
    for (const auto& [k, v] : j.items()) {
        std::size_t used = 0;
        int e = 0;
        try {
            e = std::stoi(k, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != k.size() || k.empty()) throw SchemaError("bad exponent key '" + k + "'");
        ts.emplace_back(e, gauss_from_json(v));
    }
    return QLaurent::from_terms(std::move(ts));
}

QMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const char* name) {
    if (!j.is_array() || j.size() != rows)
        throw SchemaError(std::string(name) + ": expected " + std::to_string(rows) + " rows");
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw SchemaError(std::string(name) + ": row " + std::to_string(i) + " needs " + std::to_string(cols) +
                              " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = gauss_from_json(j[i][k]);
    }
    return m;
}

RealADHMDatum real_datum_from_json(const json& j) {
    if (need(j, "kind") != "real") throw SchemaError("expected kind \"real\"");
    int r = need_int(j, "r"), c = need_int(j, "c");
    if (r < 1 || c < 1) throw SchemaError("r and c must be positive");
    auto uc = static_cast<std::size_t>(c), ur = static_cast<std::size_t>(r);
    RealADHMDatum d = RealADHMDatum::zero(c, r);
    d.B1 = matrix_from_json(need(j, "B1"), uc, uc, "B1");
    d.B2 = matrix_from_json(need(j, "B2"), uc, uc, "B2");
    d.i = matrix_from_json(need(j, "i"), uc, ur, "i");
    d.j = matrix_from_json(need(j, "j"), ur, uc, "j");
    return d;
}

ComplexADHMDatum complex_datum_from_json(const json& j) {
    const json& kind = need(j, "kind");
    if (kind == "real") return embed_real(real_datum_from_json(j));
    if (kind != "complex") throw SchemaError("kind must be \"complex\" or \"real\"");
    int r = need_int(j, "r"), c = need_int(j, "c");
    if (r < 1 || c < 1) throw SchemaError("r and c must be positive");
    auto uc = static_cast<std::size_t>(c), ur = static_cast<std::size_t>(r);
    ComplexADHMDatum d = ComplexADHMDatum::zero(c, r);
    d.B11 = matrix_from_json(need(j, "B11"), uc, uc, "B11");
    d.B12 = matrix_from_json(need(j, "B12"), uc, uc, "B12");
    d.B21 = matrix_from_json(need(j, "B21"), uc, uc, "B21");
    d.B22 = matrix_from_json(need(j, "B22"), uc, uc, "B22");
    d.i1 = matrix_from_json(need(j, "i1"), uc, ur, "i1");
    d.i2 = matrix_from_json(need(j, "i2"), uc, ur, "i2");
    d.j1 = matrix_from_json(need(j, "j1"), ur, uc, "j1");
    d.j2 = matrix_from_json(need(j, "j2"), ur, uc, "j2");
    return d;
}

Monad monad_from_json(const json& j) {
    int r = need_int(j, "r"), c = need_int(j, "c");
    if (r < 0 || c < 1) throw SchemaError("need r >= 0 and c >= 1");
    auto uc = static_cast<std::size_t>(c), n = static_cast<std::size_t>(2 * c + r);
    Monad m;
    m.r = r;
    m.c = c;
    m.alpha = pencil_from(need(j, "alpha"), n, uc, "alpha");
    m.beta = pencil_from(need(j, "beta"), uc, n, "beta");
    return m;
}

NCPoly ncpoly_from_json(const json& j) {
    Chart ch = chart_from(need(j, "chart").get<std::string>());
    const json& ts = need(j, "terms");
    if (!ts.is_array()) throw SchemaError("terms must be an array");
    NCPoly f(ch);
    for (const auto& t : ts) {
        MonoKey key;
        key.k = t.contains("k") ? need_int(t, "k") : 0;
        const json& e = need(t, "e");
        if (!e.is_array() || e.size() != 4) throw SchemaError("e must hold four exponents");
        for (std::size_t g = 0; g < 4; ++g) {
            if (!e[g].is_number_integer() || e[g].get<int>() < 0) throw SchemaError("exponents must be non-negative");
            key.e[g] = e[g].get<int>();
        }
        if (ch != Chart::IJ && key.k != 0) throw SchemaError("det powers only exist in chart IJ");
        if (ch == Chart::IJ && key.e[0] > 0 && key.e[3] > 0)
            throw SchemaError("chart IJ monomials may not contain both x11 and x22");
        f.add_term(key, laurent_from_json(need(t, "coef")));
    }
    return f;
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json error_object(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace qadhm::io
