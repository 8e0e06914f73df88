// Command-line surface for the superfat library: every operation is exposed
// with explicit seeds, exact arithmetic, and a stable JSON report schema.
//
// Exit codes: 0 success/verified, 1 usage or parse error, 2 verification
// failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superfat/superfat.hpp"

using nlohmann::ordered_json;
using namespace superfat;

namespace {

// ===== Report plumbing ======================================================

struct CommandOutput {
    ordered_json inputs = ordered_json::object();
    std::string field = "Q";
    std::optional<std::uint64_t> seed;
    ordered_json result = ordered_json::object();
    std::string anchor;
};

void render_text(const std::string& key, const ordered_json& value, int indent,
                 std::ostream& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (value.is_object()) {
        out << pad << key << ":\n";
        for (const auto& [k, v] : value.items()) render_text(k, v, indent + 2, out);
    } else if (value.is_array() && !value.empty() &&
               (value.front().is_object() || value.front().is_array())) {
        out << pad << key << ":\n";
        std::size_t i = 0;
        for (const auto& v : value) render_text("[" + std::to_string(i++) + "]", v, indent + 2, out);
    } else if (value.is_string()) {
        out << pad << key << ": " << value.get<std::string>() << "\n";
    } else {
        out << pad << key << ": " << value.dump() << "\n";
    }
}

int emit(const std::string& command, const CommandOutput& o, bool json_mode, int code) {
    if (json_mode) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = command;
        j["inputs"] = o.inputs;
        j["field"] = o.field;
        if (o.seed) j["seed"] = *o.seed;
        j["result"] = o.result;
        j["paper_anchor"] = o.anchor;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << command << " (field " << o.field;
        if (o.seed) std::cout << ", seed " << *o.seed;
        std::cout << ")\n";
        for (const auto& [k, v] : o.inputs.items()) render_text(k, v, 2, std::cout);
        render_text("result", o.result, 2, std::cout);
        std::cout << "  verifies: " << o.anchor << "\n";
        if (code != 0) std::cout << "  VERIFICATION FAILED\n";
    }
    return code;
}

// ===== Field dispatch =======================================================

template <typename F>
int with_field(const std::string& field_text, F&& f) {
    const auto tag = ioparse::FieldTag::parse(field_text);
    switch (tag.kind) {
    case ioparse::FieldTag::Kind::Q: return f(std::type_identity<Rational>{}, tag.str());
    case ioparse::FieldTag::Kind::Qi:
        return f(std::type_identity<GaussianRational>{}, tag.str());
    case ioparse::FieldTag::Kind::Fp: return f(std::type_identity<Fp>{}, tag.str());
    }
    return 1;
}

// ===== Small parsers ========================================================

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (const char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

template <exactcore::FieldType K>
K parse_scalar(const std::string& text) {
    const polyring::RingPtr dummy = PolyRing::standard({"T"});
    const Polynomial<K> f = ioparse::parse_polynomial<K>(text, dummy);
    if (f.total_degree() > 0)
        throw std::invalid_argument("expected a scalar, got '" + text + "'");
    return f.coefficient(polyring::Exponents{0});
}

template <exactcore::FieldType K>
std::vector<K> parse_scalar_csv(const std::string& text) {
    std::vector<K> out;
    for (const auto& part : split_csv(text)) out.push_back(parse_scalar<K>(part));
    return out;
}

template <exactcore::FieldType K>
ordered_json poly_list(const std::vector<Polynomial<K>>& polys) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : polys) arr.push_back(ioparse::print_polynomial(f));
    return arr;
}

/// The graded piece a homogeneous polynomial lives in.
template <exactcore::FieldType K>
polyring::GradedPiece piece_of(const Polynomial<K>& f) {
    if (f.is_zero() || !f.is_homogeneous())
        throw std::invalid_argument("expected a nonzero homogeneous polynomial");
    const auto& ring = f.ring();
    if (ring->is_bigraded()) {
        const auto bd = f.bidegree();
        if (!bd) throw std::invalid_argument("expected a bihomogeneous form");
        return polyring::GradedPiece(ring, bd->first, bd->second);
    }
    return polyring::GradedPiece(ring, static_cast<unsigned>(f.total_degree()));
}

unsigned default_trials() {
    if (const char* env = std::getenv("SUPERFAT_TRIALS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 64) return static_cast<unsigned>(v);
    }
    return 3;
}

// ===== Pinned chord dimensions =============================================

std::optional<std::size_t> expected_secant(const std::string& variety, unsigned d, unsigned s,
                                           std::size_t image_dim, std::size_t ambient) {
    if (variety == "tau2")
        return d == 4 && s == 2 ? std::optional<std::size_t>(13)
                                : std::min<std::size_t>(ambient, 8 * std::size_t{s} - 1);
    if (s == 1) return std::min(image_dim, ambient);
    if (variety == "q2" && s == 2) return d == 2 ? 8 : 11;
    if (variety == "qq2" && s == 2) return d == 2 ? 7 : 9;
    return std::nullopt;
}

} // namespace

// ===== Subcommand handlers ==================================================

namespace {

struct Args {
    std::string field = "Q";
    std::string vars = "x,y";
    std::uint64_t seed = 0;
    bool json = false;
    unsigned trials = default_trials();

    std::string ideal_text;
    std::string form_text;
    std::string forms_text;
    std::string line_text;
    std::string conic_text;
    std::string space_text;
    std::string direction_text;
    std::string point_text;
    std::string ells_text;
    std::string t_text = "1";
    std::string convention = "derivation";
    std::string split_text;
    std::string variety = "q2";
    std::string kind = "union";
    unsigned m = 2;
    unsigned n = 2;
    unsigned d = 3;
    unsigned s = 1;
    unsigned i = 1;
    unsigned t_max = 6;
    unsigned lo = 1;
    unsigned hi = 1;
    std::optional<unsigned> expect;
};

int cmd_check(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto ideal = ioparse::parse_ideal<K>(a.ideal_text, ring);
        const auto report = zerodim::symmetry_degree(ideal);
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"vars", a.vars}, {"ideal", a.ideal_text}};
        o.result["symmetric"] = report.symmetric;
        o.result["m"] = report.m;
        o.result["length"] = report.length;
        o.result["superfat"] = report.superfat;
        if (report.tangent_cone_witness)
            o.result["tangent_cone_witness"] =
                poly_list<K>(report.tangent_cone_witness->generators);
        o.anchor = "an m-symmetric scheme meets every line through its point with length m";
        return emit("check", o, a.json, 0);
    });
}

int cmd_length(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto ideal = ioparse::parse_ideal<K>(a.ideal_text, ring);
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"vars", a.vars}, {"ideal", a.ideal_text}};
        if (a.direction_text.empty()) {
            o.result["length"] = zerodim::length_at_origin(ideal);
            o.anchor = "the length of a zero-dimensional scheme localized at the origin";
        } else {
            o.inputs["direction"] = a.direction_text;
            const auto dir = parse_scalar_csv<K>(a.direction_text);
            const auto len = zerodim::line_intersection_length(ideal, dir);
            if (len)
                o.result["length"] = *len;
            else
                o.result["length"] = "infinite";
            o.anchor = "the length of the scheme's trace on one line through the origin";
        }
        return emit("length", o, a.json, 0);
    });
}

int cmd_hull(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto ideal = ioparse::parse_ideal<K>(a.ideal_text, ring);
        const auto hull = zerodim::superfat_hull(ideal, a.seed);
        const auto report = zerodim::symmetry_degree(hull);
        CommandOutput o;
        o.field = field_name;
        o.seed = a.seed;
        o.inputs = {{"vars", a.vars}, {"ideal", a.ideal_text}};
        o.result["m"] = report.m;
        o.result["length"] = report.length;
        o.result["superfat"] = report.superfat;
        o.result["generators"] = poly_list<K>(hull.generators);
        o.anchor = "every m-symmetric scheme embeds in an m-superfat scheme of length m^n";
        return emit("hull", o, a.json, report.superfat ? 0 : 2);
    });
}

int cmd_square_form(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto ideal = ioparse::parse_ideal<K>(a.ideal_text, ring);
        const auto result = zerodim::two_superfat_square_form(ideal);
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"vars", a.vars}, {"ideal", a.ideal_text}};
        o.result["recovered"] = result.forms.has_value();
        if (result.forms) {
            o.result["l1"] = ioparse::print_polynomial(result.forms->first);
            o.result["l2"] = ioparse::print_polynomial(result.forms->second);
        }
        ordered_json pencil = ordered_json::array();
        for (const auto& q : result.pencil_quadratic) pencil.push_back(q.str());
        o.result["pencil_quadratic"] = pencil;
        o.anchor =
            "a planar 2-superfat scheme is the square pair of two independent linear forms";
        return emit("square-form", o, a.json, 0);
    });
}

int cmd_hypercube(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto forms = ioparse::parse_ideal<K>(a.forms_text, ring);
        const auto cube = zerodim::hypercube_ideal(forms.generators, a.m);
        const auto info = groebner::quotient_info(cube);
        const std::size_t n = ring->nvars();
        std::size_t expected = 1;
        for (std::size_t j = 0; j < n; ++j) expected *= a.m;
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"vars", a.vars}, {"forms", a.forms_text}, {"m", a.m}};
        o.result["length"] = info.dimension ? ordered_json(*info.dimension) : ordered_json();
        o.result["expected"] = expected;
        const bool pass = info.dimension && *info.dimension == expected;
        o.result["matches"] = pass;
        o.result["generators"] = poly_list<K>(cube.generators);
        o.anchor = "m-th powers of n independent linear forms cut out a scheme of length m^n";
        return emit("hypercube", o, a.json, pass ? 0 : 2);
    });
}

int cmd_smooth_family(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const K t = parse_scalar<K>(a.t_text);
        const auto family = zerodim::smoothing_family<K>(a.m, a.n, t);
        const auto info = groebner::quotient_info(family);
        std::size_t expected = 1;
        for (std::size_t j = 0; j < a.n; ++j) expected *= a.m;
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"m", a.m}, {"n", a.n}, {"t", a.t_text}};
        o.result["length"] = info.dimension ? ordered_json(*info.dimension) : ordered_json();
        o.result["expected"] = expected;
        const bool pass = info.dimension && *info.dimension == expected;
        o.result["matches"] = pass;
        o.result["generators"] = poly_list<K>(family.generators);
        o.anchor = "the hypercube ideal is the flat limit of m^n reduced points";
        return emit("smooth-family", o, a.json, pass ? 0 : 2);
    });
}

int cmd_union(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto report = zerodim::union_of_squares_check<K>(a.m);
        const bool elimination =
            !report.elimination_matches || *report.elimination_matches;
        const bool pass =
            report.fat_point_inside_each && report.no_form_in_critical_degree && elimination;
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"m", a.m}};
        o.result["fat_point_inside_each"] = report.fat_point_inside_each;
        o.result["no_form_in_critical_degree"] = report.no_form_in_critical_degree;
        o.result["critical_degree"] = 2 * a.m - 2;
        o.result["elimination_matches"] = report.elimination_matches
                                              ? ordered_json(*report.elimination_matches)
                                              : ordered_json();
        o.result["fat_point_exponent"] = 2 * a.m - 1;
        o.result["pass"] = pass;
        o.anchor = "the 2m-1 squares along distinct lines intersect in the (2m-1)-fat point";
        return emit("union", o, a.json, pass ? 0 : 2);
    });
}

int cmd_perp_union(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto report = zerodim::perpendicular_union_check<K>();
        CommandOutput o;
        o.field = field_name;
        o.result["intersection"] = poly_list<K>(report.intersection.generators);
        o.result["expected"] = poly_list<K>(report.expected.generators);
        o.result["equals_expected"] = report.equals_expected;
        o.result["single_pair_strictly_larger"] = report.single_pair_strictly_larger;
        o.result["symmetric"] = report.expected_report.symmetric;
        o.result["length"] = report.expected_report.length;
        o.result["pass"] = report.passed();
        o.anchor = "two perpendicular squares already cut the length-5 non-symmetric scheme";
        return emit("perp-union", o, a.json, report.passed() ? 0 : 2);
    });
}

int cmd_binomial(const Args& a) {
    const BigInt value = zerodim::binomial_identity(a.m, a.i);
    const bool in_range = a.i >= 1;
    const bool pass = !in_range || value == 0;
    CommandOutput o;
    o.field = "ZZ";
    o.inputs = {{"m", a.m}, {"i", a.i}};
    o.result["value"] = value.str();
    o.result["expected_zero"] = in_range;
    o.result["pass"] = pass;
    o.anchor = "the alternating binomial sums attached to the square union vanish";
    return emit("binomial", o, a.json, pass ? 0 : 2);
}

int cmd_perp(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto ideal = ioparse::parse_ideal<K>(a.ideal_text, ring);
        const auto degrees = split_csv(a.split_text);
        const auto piece = [&] {
            if (ring->is_bigraded()) {
                if (degrees.size() != 2)
                    throw std::invalid_argument("bigraded ring needs --degree a,b");
                return polyring::GradedPiece(
                    ring, static_cast<unsigned>(std::stoul(degrees[0])),
                    static_cast<unsigned>(std::stoul(degrees[1])));
            }
            if (degrees.size() != 1)
                throw std::invalid_argument("singly graded ring needs --degree d");
            return polyring::GradedPiece(ring,
                                         static_cast<unsigned>(std::stoul(degrees[0])));
        }();
        const auto convention = a.convention == "contraction"
                                    ? apolarity::PairingConvention::Contraction
                                    : apolarity::PairingConvention::Derivation;
        const auto perp = apolarity::perp_space(ideal, piece, convention);
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"vars", a.vars},
                    {"ideal", a.ideal_text},
                    {"degree", a.split_text},
                    {"convention", a.convention}};
        o.result["dimension"] = perp.dim();
        o.result["basis"] = poly_list<K>(perp.basis);
        o.anchor = "the annihilator of the ideal inside one graded piece of the dual ring";
        return emit("perp", o, a.json, 0);
    });
}

int cmd_catalecticant(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto form = ioparse::parse_polynomial<K>(a.form_text, ring);
        const auto degrees = split_csv(a.split_text);
        const auto cat = [&] {
            if (ring->is_bigraded()) {
                if (degrees.size() != 2)
                    throw std::invalid_argument("bigraded ring needs --split a,b");
                return apolarity::catalecticant(
                    form, std::pair<unsigned, unsigned>(
                              static_cast<unsigned>(std::stoul(degrees[0])),
                              static_cast<unsigned>(std::stoul(degrees[1]))));
            }
            if (degrees.size() != 1)
                throw std::invalid_argument("singly graded ring needs --split a");
            return apolarity::catalecticant(form,
                                            static_cast<unsigned>(std::stoul(degrees[0])));
        }();
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"vars", a.vars}, {"form", a.form_text}, {"split", a.split_text}};
        o.result["rows"] = cat.matrix.rows();
        o.result["cols"] = cat.matrix.cols();
        o.result["rank"] = cat.rank();
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < cat.matrix.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < cat.matrix.cols(); ++c)
                row.push_back(cat.matrix.at(r, c).str());
            rows.push_back(row);
        }
        o.result["matrix"] = rows;
        o.anchor = "the apolar pairing of a form against complementary-degree monomials";
        return emit("catalecticant", o, a.json, 0);
    });
}

int cmd_member(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto form = ioparse::parse_polynomial<K>(a.form_text, ring);
        const auto space = ioparse::parse_ideal<K>(a.space_text, ring);
        const auto piece = piece_of(form);
        const bool member = apolarity::span_membership(form, space.generators, piece);
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"vars", a.vars}, {"form", a.form_text}, {"space", a.space_text}};
        o.result["member"] = member;
        o.anchor = "membership of a form in the linear span of given forms, by exact rank";
        return emit("member", o, a.json, 0);
    });
}

int cmd_tau2_normal(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto form = ioparse::parse_polynomial<K>(a.form_text, ring);
        const auto line = ioparse::parse_polynomial<K>(a.line_text, ring);
        const auto conic = ioparse::parse_polynomial<K>(a.conic_text, ring);
        const auto normal = apolarity::tau2_normal_form(form, line, conic);
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"vars", a.vars},
                    {"form", a.form_text},
                    {"line", a.line_text},
                    {"conic", a.conic_text}};
        switch (normal.kind) {
        case apolarity::Tau2Kind::SquareFree: o.result["kind"] = "square_free"; break;
        case apolarity::Tau2Kind::DoubleLine: o.result["kind"] = "double_line"; break;
        case apolarity::Tau2Kind::LineMultiple: o.result["kind"] = "line_multiple"; break;
        }
        o.result["factors"] = poly_list<K>(normal.factors);
        o.result["scale"] = normal.scale.str();
        o.result["extension_required"] = normal.extension_required;
        ordered_json residual = ordered_json::array();
        for (const auto& c : normal.residual_quadratic) residual.push_back(c.str());
        o.result["residual_quadratic"] = residual;
        o.anchor =
            "a form l^(d-2) q splits into two lines, a double line, or a multiple of l";
        return emit("tau2-normal", o, a.json, 0);
    });
}

int cmd_qq_monomial(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto ring = ioparse::parse_variables(a.vars);
        const auto ells = ioparse::parse_ideal<K>(a.ells_text, ring);
        const auto coords = parse_scalar_csv<K>(a.point_text);
        if (coords.size() != 4)
            throw std::invalid_argument("--point needs four comma-separated scalars");
        const std::array<K, 4> point = {coords[0], coords[1], coords[2], coords[3]};
        const auto mono = apolarity::qq_monomialize(point, ells.generators, a.d);
        CommandOutput o;
        o.field = field_name;
        o.inputs = {{"vars", a.vars},
                    {"point", a.point_text},
                    {"ells", a.ells_text},
                    {"d", a.d}};
        o.result["form"] = ioparse::print_polynomial(mono.form);
        o.result["scale"] = mono.scale.str();
        o.result["x0"] = ioparse::print_polynomial(mono.x0);
        o.result["x1"] = ioparse::print_polynomial(mono.x1);
        o.result["x2"] = ioparse::print_polynomial(mono.x2);
        o.result["degenerate"] = mono.degenerate;
        o.result["verified"] = true; // the construction checks its own identity
        o.anchor = "points of the incidence quadric monomialize to x0^(d-2) x1 x2";
        return emit("qq-monomial", o, a.json, 0);
    });
}

template <exactcore::FieldType K>
secants::ParamMap<K> build_variety(const std::string& variety, unsigned d, unsigned n) {
    if (variety == "veronese") return secants::veronese<K>(n, d);
    if (variety == "tau2") return secants::tau2<K>(d);
    if (variety == "qq") return secants::qq<K>(d);
    if (variety == "sv") return secants::segre_veronese<K>(d);
    if (variety == "q2") return secants::q2<K>(d);
    if (variety == "qq2") return secants::qq2<K>(d);
    throw std::invalid_argument("unknown variety '" + variety +
                                "' (veronese, tau2, qq, sv, q2, qq2)");
}

int cmd_secant(const Args& a) {
    if (a.d > 8) throw std::invalid_argument("secant supports d <= 8");
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto map = build_variety<K>(a.variety, a.d, a.n);
        const auto est = secants::secant_dimension(map, a.s, a.seed, a.trials);
        const auto expected = a.expect ? std::optional<std::size_t>(*a.expect)
                                       : expected_secant(a.variety, a.d, a.s,
                                                         map.expected_image_dimension,
                                                         map.piece.dim() - 1);
        CommandOutput o;
        o.field = field_name;
        o.seed = a.seed;
        o.inputs = {{"variety", a.variety}, {"d", a.d}, {"s", a.s}};
        if (a.variety == "veronese") o.inputs["n"] = a.n;
        o.result["dim"] = est.projective_dimension;
        o.result["agreeing_trials"] = est.agreeing_trials;
        o.result["trials"] = est.trials;
        o.result["expected"] = expected ? ordered_json(*expected) : ordered_json();
        const bool pass = !expected || est.projective_dimension == *expected;
        o.result["pass"] = pass;
        o.anchor = "the generic tangent space of the s-th chord variety is a sum of s "
                   "tangent spaces";
        return emit("secant", o, a.json, pass ? 0 : 2);
    });
}

int cmd_fill(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto report = secants::fill_degree_check<K>(a.d, a.seed, a.trials);
        CommandOutput o;
        o.field = field_name;
        o.seed = a.seed;
        o.inputs = {{"d", a.d}};
        o.result["s_formula"] = report.s_formula;
        o.result["s_fill"] = report.s_fill;
        o.result["ambient"] = report.ambient;
        o.result["dim_at_fill"] = report.dim_at_fill;
        o.result["dim_below_fill"] = report.dim_below_fill;
        o.result["expected_below"] = report.expected_below;
        o.result["verified"] = report.verified;
        o.anchor = "chords of the osculating family fill at the predicted count, except "
                   "that degree 4 stops at a hypersurface";
        return emit("fill", o, a.json, report.verified ? 0 : 2);
    });
}

int cmd_quadric_check(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto report = secants::quadric_incidence_check<K>(a.d, a.seed);
        const auto caseblock = [](const secants::QuadricCaseReport& c) {
            ordered_json j;
            j["checked"] = c.checked;
            j["quadric_smooth"] = c.quadric_smooth;
            j["samples_factor"] = c.samples_factor;
            j["tangent_section_rank_two"] = c.tangent_section_rank_two;
            j["degenerate_sample_in_tangent"] = c.degenerate_sample_in_tangent;
            return j;
        };
        CommandOutput o;
        o.field = field_name;
        o.seed = a.seed;
        o.inputs = {{"d", a.d}};
        o.result["power_surface"] = caseblock(report.power_surface);
        o.result["two_factor_surface"] = caseblock(report.two_factor_surface);
        o.result["pass"] = report.passed();
        o.anchor = "the family sweeps a smooth quadric whose tangent-plane section is two "
                   "lines";
        return emit("quadric-check", o, a.json, report.passed() ? 0 : 2);
    });
}

ordered_json profile_json(const experiments::HFProfile& profile) {
    ordered_json j;
    j["descriptor"] = profile.descriptor;
    j["degrees"] = profile.degrees;
    j["values"] = profile.values;
    j["expected"] = profile.expected;
    j["matches"] = profile.matches;
    j["all_match"] = profile.all_match();
    return j;
}

int cmd_hf_squares(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto profile = experiments::generic_square_hilbert<K>(a.s, 0, a.t_max, a.seed);
        CommandOutput o;
        o.field = field_name;
        o.seed = a.seed;
        o.inputs = {{"s", a.s}, {"t_max", a.t_max}};
        o.result = profile_json(profile);
        o.anchor = "s generic 2-squares impose min(4s, dim R_t) conditions in degree t";
        return emit("hf-squares", o, a.json, 0);
    });
}

int cmd_hf_superfat(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto report = experiments::superfat_hf_search<K>(a.m, a.trials, a.seed);
        CommandOutput o;
        o.field = field_name;
        o.seed = a.seed;
        o.inputs = {{"m", a.m}, {"trials", a.trials}};
        o.result["attained"] = report.attained;
        o.result["trials"] = report.trials;
        o.result["best"] = profile_json(report.best);
        o.anchor = "search for an m-superfat plane point with the maximal Hilbert function";
        return emit("hf-superfat", o, a.json, 0);
    });
}

int cmd_sweep(const Args& a) {
    return with_field(a.field, [&](auto k, const std::string& field_name) {
        using K = typename decltype(k)::type;
        const auto kind = [&] {
            if (a.kind == "union") return experiments::SweepKind::Union;
            if (a.kind == "binomial") return experiments::SweepKind::Binomial;
            if (a.kind == "fill") return experiments::SweepKind::Fill;
            if (a.kind == "secant") return experiments::SweepKind::Secant;
            throw std::invalid_argument("unknown sweep kind '" + a.kind +
                                        "' (union, binomial, fill, secant)");
        }();
        const auto table = experiments::sweep<K>(kind, a.lo, a.hi, a.seed);
        CommandOutput o;
        o.field = field_name;
        o.seed = a.seed;
        o.inputs = {{"kind", a.kind}, {"lo", a.lo}, {"hi", a.hi}};
        ordered_json rows = ordered_json::array();
        for (const auto& row : table.rows) {
            ordered_json r;
            r["label"] = row.label;
            r["pass"] = row.pass;
            r["seed"] = row.seed;
            r["detail"] = row.detail;
            rows.push_back(r);
        }
        o.result["rows"] = rows;
        o.result["all_pass"] = table.all_pass();
        if (!a.json)
            for (const auto& row : table.rows)
                std::cerr << row.label << ": " << (row.pass ? "pass" : "FAIL") << " ("
                          << row.milliseconds << " ms)\n";
        o.anchor = "parameter campaign over the verified statements";
        return emit("sweep", o, a.json, table.all_pass() ? 0 : 2);
    });
}

} // namespace

// ===== Entry point ==========================================================

int main(int argc, char** argv) {
    CLI::App app{"superfat: exact zero-dimensional schemes, apolarity, and chord "
                 "dimensions"};
    app.require_subcommand(1);
    Args a;

    const auto common = [&](CLI::App* cmd, bool seeded = false) {
        cmd->add_option("--field", a.field, "Field tag: Q, Qi, or Fp:<prime>")
            ->capture_default_str();
        cmd->add_flag("--json", a.json, "Emit the JSON report instead of text");
        if (seeded)
            cmd->add_option("--seed", a.seed, "Random seed (printed in the report)")
                ->capture_default_str();
    };

    auto* check = app.add_subcommand(
        "check", "Decide m-symmetry, length, and superfatness of a scheme at the origin");
    common(check);
    check->add_option("--vars", a.vars, "Variables, e.g. x,y")->capture_default_str();
    check->add_option("--ideal", a.ideal_text, "Ideal text, e.g. [x^2, y^2]")->required();

    auto* length = app.add_subcommand(
        "length", "Length at the origin, or of the trace on one line (--direction)");
    common(length);
    length->add_option("--vars", a.vars, "Variables")->capture_default_str();
    length->add_option("--ideal", a.ideal_text, "Ideal text")->required();
    length->add_option("--direction", a.direction_text, "Line direction, e.g. 1,0");

    auto* hull = app.add_subcommand(
        "hull", "Grow an m-symmetric scheme to an m-superfat scheme containing it");
    common(hull, true);
    hull->add_option("--vars", a.vars, "Variables")->capture_default_str();
    hull->add_option("--ideal", a.ideal_text, "Ideal text")->required();

    auto* square_form = app.add_subcommand(
        "square-form", "Recover the two squared linear forms of a planar 2-superfat scheme");
    common(square_form);
    square_form->add_option("--vars", a.vars, "Variables")->capture_default_str();
    square_form->add_option("--ideal", a.ideal_text, "Ideal text")->required();

    auto* hypercube = app.add_subcommand(
        "hypercube", "Check that m-th powers of independent forms have colength m^n");
    common(hypercube);
    hypercube->add_option("--vars", a.vars, "Variables")->capture_default_str();
    hypercube->add_option("--forms", a.forms_text, "Linear forms, e.g. [x, x+y]")->required();
    hypercube->add_option("--m", a.m, "Power")->required();

    auto* smooth = app.add_subcommand(
        "smooth-family", "The reduced m^n-point degeneration of the hypercube ideal");
    common(smooth);
    smooth->add_option("--m", a.m, "Power")->required();
    smooth->add_option("--n", a.n, "Number of variables")->required();
    smooth->add_option("--t", a.t_text, "Family parameter (nonzero scalar)")
        ->capture_default_str();

    auto* union_cmd = app.add_subcommand(
        "union", "The 2m-1 squares along distinct lines intersect in the (2m-1)-fat point");
    common(union_cmd);
    union_cmd->add_option("--m", a.m, "Exponent m (1..5)")->required();

    auto* perp_union = app.add_subcommand(
        "perp-union", "Two perpendicular squares cut the length-5 non-symmetric scheme");
    common(perp_union);

    auto* binomial = app.add_subcommand(
        "binomial", "The alternating binomial sums of the square union vanish");
    binomial->add_flag("--json", a.json, "Emit the JSON report instead of text");
    binomial->add_option("--m", a.m, "Row index m >= 1")->required();
    binomial->add_option("--i", a.i, "Column index")->required();

    auto* perp = app.add_subcommand(
        "perp", "Annihilator of an ideal inside one graded piece of the dual ring");
    common(perp);
    perp->add_option("--vars", a.vars, "Variables (singly or bigraded)")->required();
    perp->add_option("--ideal", a.ideal_text, "Ideal text")->required();
    perp->add_option("--degree", a.split_text, "Degree d, or a,b for bigraded rings")
        ->required();
    perp->add_option("--convention", a.convention, "derivation or contraction")
        ->capture_default_str();

    auto* cat = app.add_subcommand(
        "catalecticant", "Apolar pairing matrix of a form at one degree split");
    common(cat);
    cat->add_option("--vars", a.vars, "Variables (singly or bigraded)")->required();
    cat->add_option("--form", a.form_text, "Homogeneous form")->required();
    cat->add_option("--split", a.split_text, "Row degree a, or a,b for bigraded rings")
        ->required();

    auto* member = app.add_subcommand(
        "member", "Decide membership of a form in the span of given forms");
    common(member);
    member->add_option("--vars", a.vars, "Variables")->required();
    member->add_option("--form", a.form_text, "Form to test")->required();
    member->add_option("--space", a.space_text, "Spanning forms, e.g. [x^2, y^2]")
        ->required();

    auto* tau2n = app.add_subcommand(
        "tau2-normal", "Normal form of l^(d-2) q: two lines, a double line, or a multiple");
    common(tau2n);
    tau2n->add_option("--vars", a.vars, "Three variables")->capture_default_str();
    tau2n->add_option("--form", a.form_text, "The product form")->required();
    tau2n->add_option("--line", a.line_text, "The repeated linear factor")->required();
    tau2n->add_option("--conic", a.conic_text, "The quadratic cofactor")->required();

    auto* qqm = app.add_subcommand(
        "qq-monomial", "Monomialize an incidence-quadric point to x0^(d-2) x1 x2");
    common(qqm);
    qqm->add_option("--vars", a.vars, "Three variables")->capture_default_str();
    qqm->add_option("--point", a.point_text, "Quadric point a0,a1,a2,a3")->required();
    qqm->add_option("--ells", a.ells_text, "Independent linear forms, e.g. [x0, x1, x2]")
        ->required();
    qqm->add_option("--d", a.d, "Total degree (>= 2)")->required();

    auto* secant = app.add_subcommand(
        "secant", "Chord-variety dimension by summing tangent spaces at random points");
    common(secant, true);
    secant->add_option("--variety", a.variety, "veronese, tau2, qq, sv, q2, or qq2")
        ->capture_default_str();
    secant->add_option("--d", a.d, "Degree (or bidegree half)")->required();
    secant->add_option("--s", a.s, "Number of chords")->capture_default_str();
    secant->add_option("--n", a.n, "Source dimension (veronese only)")->capture_default_str();
    secant->add_option("--trials", a.trials, "Agreement trials")->capture_default_str();
    secant->add_option("--expect", a.expect, "Assert this projective dimension (exit 2 on mismatch)");

    auto* fill = app.add_subcommand(
        "fill", "Verify the chord count that fills the osculating family's span");
    common(fill, true);
    fill->add_option("--d", a.d, "Degree (3..8)")->required();
    fill->add_option("--trials", a.trials, "Agreement trials")->capture_default_str();

    auto* quadric = app.add_subcommand(
        "quadric-check", "The incidence quadric and its two-line tangent section");
    common(quadric, true);
    quadric->add_option("--d", a.d, "Degree (>= 2)")->required();

    auto* hfsq = app.add_subcommand(
        "hf-squares", "Hilbert function of s generic 2-squares against min(4s, dim R_t)");
    common(hfsq, true);
    hfsq->add_option("--s", a.s, "Number of 2-square points")->required();
    hfsq->add_option("--t-max", a.t_max, "Largest degree")->capture_default_str();

    auto* hfsf = app.add_subcommand(
        "hf-superfat", "Search random m-superfat points for a maximal Hilbert function");
    common(hfsf, true);
    hfsf->add_option("--m", a.m, "Order m >= 2")->required();
    hfsf->add_option("--trials", a.trials, "Samples to draw")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Parameter campaign over one verified family");
    common(sweep, true);
    sweep->add_option("--kind", a.kind, "union, binomial, fill, or secant")->required();
    sweep->add_option("--lo", a.lo, "Range start")->required();
    sweep->add_option("--hi", a.hi, "Range end")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (check->parsed()) return cmd_check(a);
        if (length->parsed()) return cmd_length(a);
        if (hull->parsed()) return cmd_hull(a);
        if (square_form->parsed()) return cmd_square_form(a);
        if (hypercube->parsed()) return cmd_hypercube(a);
        if (smooth->parsed()) return cmd_smooth_family(a);
        if (union_cmd->parsed()) return cmd_union(a);
        if (perp_union->parsed()) return cmd_perp_union(a);
        if (binomial->parsed()) return cmd_binomial(a);
        if (perp->parsed()) return cmd_perp(a);
        if (cat->parsed()) return cmd_catalecticant(a);
        if (member->parsed()) return cmd_member(a);
        if (tau2n->parsed()) return cmd_tau2_normal(a);
        if (qqm->parsed()) return cmd_qq_monomial(a);
        if (secant->parsed()) return cmd_secant(a);
        if (fill->parsed()) return cmd_fill(a);
        if (quadric->parsed()) return cmd_quadric_check(a);
        if (hfsq->parsed()) return cmd_hf_squares(a);
        if (hfsf->parsed()) return cmd_hf_superfat(a);
        if (sweep->parsed()) return cmd_sweep(a);
    } catch (const ioparse::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
