#include "gg/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace gg {

using json = nlohmann::json;
using boost::multiprecision::mpz_int;

namespace {

json parse_doc(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        int line = 1, col = 1;
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        // Drop nlohmann's own "[id] parse error at ...: " prefix.
        std::string msg = e.what();
        std::size_t colon = msg.find(": ", msg.find("parse error"));
        if (colon != std::string::npos) msg.erase(0, colon + 2);
        throw IoError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg,
                      line, col);
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw IoError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw IoError(std::string(what) + " must be an integer");
    return j.get<int>();
}

Edge as_pair(const json& j) {
    if (!j.is_array() || j.size() != 2) throw IoError("expected a pair [i, j]");
    return make_edge(as_int(j[0], "label"), as_int(j[1], "label"));
}

Rational as_rational(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return parse_rational(j.dump());
    throw IoError("coordinate must be a string or a number");
}

Point as_point(const json& j) {
    if (!j.is_array() || j.size() != 2) throw IoError("expected a point [x, y]");
    return {as_rational(j[0]), as_rational(j[1])};
}

// Base-10 parse; mpz reads a leading 0 as an octal prefix.
mpz_int decimal_int(std::string s) {
    bool neg = !s.empty() && s[0] == '-';
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.erase(0, 1);
    s.erase(0, std::min(s.find_first_not_of('0'), s.size()));
    mpz_int v(s.empty() ? "0" : s);
    return neg ? mpz_int(-v) : v;
}

json point_json(const Point& p) { return json::array({rational_to_string(p.x), rational_to_string(p.y)}); }

}  // namespace

std::string rational_to_string(const Rational& r) {
    mpz_int num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    mpz_int rest = den;
    int twos = 0, fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.str() + "/" + den.str();
    int k = std::max(twos, fives);
    mpz_int scale = 1;
    for (int i = 0; i < k; ++i) scale *= 10;
    mpz_int scaled = num * (scale / den);
    bool neg = scaled < 0;
    std::string digits = (neg ? mpz_int(-scaled) : scaled).str();
    if (k > 0) {
        if (static_cast<int>(digits.size()) <= k) digits.insert(0, k + 1 - digits.size(), '0');
        digits.insert(digits.size() - k, ".");
    }
    return (neg ? "-" : "") + digits;
}

Rational parse_rational(std::string_view s) {
    static const std::regex frac(R"(^([+-]?\d+)/(\d+)$)");
    static const std::regex dec(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
    std::string str(s);
    std::smatch m;
    if (std::regex_match(str, m, frac)) {
        mpz_int den = decimal_int(m[2].str());
        if (den == 0) throw IoError("zero denominator in \"" + str + "\"");
        return Rational(decimal_int(m[1].str()), den);
    }
    if (std::regex_match(str, m, dec) && (m[2].length() + m[3].length()) > 0) {
        std::string digits = m[2].str() + m[3].str();
        long long exp = -static_cast<long long>(m[3].length());
        if (m[4].matched) exp += std::stoll(m[4].str());
        if (exp > 4000 || exp < -4000) throw IoError("exponent out of range in \"" + str + "\"");
        mpz_int num = decimal_int(digits), p10 = 1;
        for (long long i = 0; i < (exp < 0 ? -exp : exp); ++i) p10 *= 10;
        Rational r = exp < 0 ? Rational(num, p10) : Rational(num * p10);
        return m[1].str() == "-" ? Rational(-r) : r;
    }
    throw IoError("not a rational: \"" + str + "\"");
}

std::string graph_to_json(const TriangulationGraph& t) {
    json d = json::array();
    for (Edge e : t.diagonals()) d.push_back({e.a, e.b});
    return json{{"n", t.n()}, {"diagonals", d}}.dump();
}

TriangulationGraph graph_from_json(std::string_view text) {
    json j = parse_doc(text);
    int n = as_int(field(j, "n"), "n");
    const json& ds = field(j, "diagonals");
    if (!ds.is_array()) throw IoError("\"diagonals\" must be an array");
    std::vector<Edge> diags;
    for (const json& d : ds) diags.push_back(as_pair(d));
    return TriangulationGraph::build(n, diags);
}

std::string dominating_set_to_json(const DominatingSet& d) {
    json m = json::array();
    for (Edge e : d.members) m.push_back({e.a, e.b});
    return json{{"mode", d.mode == DomMode::EdgeOnly ? "edge" : "diagonal"}, {"members", m}}.dump();
}

DominatingSet dominating_set_from_json(std::string_view text) {
    json j = parse_doc(text);
    const json& mode = field(j, "mode");
    DominatingSet d;
    if (mode == "edge") d.mode = DomMode::EdgeOnly;
    else if (mode == "diagonal") d.mode = DomMode::DiagonalAllowed;
    else throw IoError("\"mode\" must be \"diagonal\" or \"edge\"");
    const json& ms = field(j, "members");
    if (!ms.is_array()) throw IoError("\"members\" must be an array");
    for (const json& e : ms) d.members.push_back(as_pair(e));
    d.normalize();
    return d;
}

std::string polygon_to_json(const PiecewiseConvexPolygon& P) {
    json vs = json::array(), as = json::array();
    for (const Point& p : P.vertices()) vs.push_back(point_json(p));
    for (const ArcShape& a : P.shapes()) {
        if (a.kind == ArcKind::Segment) {
            as.push_back({{"type", "segment"}});
        } else {
            as.push_back({{"type", "circular"},
                          {"center", point_json(a.center)},
                          {"orientation", a.orientation == ArcOrientation::CCW ? "ccw" : "cw"}});
        }
    }
    return json{{"vertices", vs}, {"arcs", as}}.dump();
}

PiecewiseConvexPolygon polygon_from_json(std::string_view text) {
    json j = parse_doc(text);
    const json& vs = field(j, "vertices");
    const json& as = field(j, "arcs");
    if (!vs.is_array() || !as.is_array()) throw IoError("\"vertices\" and \"arcs\" must be arrays");
    std::vector<Point> pts;
    for (const json& v : vs) pts.push_back(as_point(v));
    std::vector<ArcShape> arcs;
    for (const json& a : as) {
        const json& type = field(a, "type");
        ArcShape s;
        if (type == "segment") {
            s.kind = ArcKind::Segment;
        } else if (type == "circular") {
            s.kind = ArcKind::Circular;
            s.center = as_point(field(a, "center"));
            std::string o = a.value("orientation", "ccw");
            if (o != "ccw" && o != "cw") throw IoError("\"orientation\" must be \"ccw\" or \"cw\"");
            s.orientation = o == "ccw" ? ArcOrientation::CCW : ArcOrientation::CW;
        } else {
            throw IoError("arc \"type\" must be \"segment\" or \"circular\"");
        }
        arcs.push_back(s);
    }
    return PiecewiseConvexPolygon(std::move(pts), std::move(arcs));
}

std::string guard_set_to_json(const GuardSet& g) {
    json gs = json::array();
    for (const Guard& x : g.guards) {
        if (x.kind == Guard::Kind::Arc) gs.push_back({{"arc", x.arc}});
        else gs.push_back({{"diagonal", {x.diagonal.a, x.diagonal.b}}});
    }
    return json{{"mode", g.mode == GuardMode::EdgeGuards ? "edge" : "mobile"}, {"guards", gs}}.dump();
}

GuardSet guard_set_from_json(std::string_view text) {
    json j = parse_doc(text);
    const json& mode = field(j, "mode");
    GuardSet g;
    if (mode == "edge") g.mode = GuardMode::EdgeGuards;
    else if (mode == "mobile") g.mode = GuardMode::MobileGuards;
    else throw IoError("\"mode\" must be \"edge\" or \"mobile\"");
    const json& gs = field(j, "guards");
    if (!gs.is_array()) throw IoError("\"guards\" must be an array");
    for (const json& x : gs) {
        Guard gd;
        if (x.is_object() && x.contains("arc")) {
            gd.kind = Guard::Kind::Arc;
            gd.arc = as_int(x.at("arc"), "arc");
        } else if (x.is_object() && x.contains("diagonal")) {
            gd.kind = Guard::Kind::Diagonal;
            gd.diagonal = as_pair(x.at("diagonal"));
        } else {
            throw IoError("guard must be {\"arc\": i} or {\"diagonal\": [a, b]}");
        }
        g.guards.push_back(gd);
    }
    g.normalize();
    return g;
}

std::string detect_kind(std::string_view text) {
    json j = parse_doc(text);
    if (!j.is_object()) throw IoError("top-level value must be an object");
    if (j.contains("diagonals")) return "graph";
    if (j.contains("vertices")) return "polygon";
    if (j.contains("members")) return "dominating_set";
    if (j.contains("guards")) return "guard_set";
    throw IoError("unrecognised document");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace gg
