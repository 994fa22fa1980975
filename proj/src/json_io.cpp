#include "isodiam/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isodiam {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("json: missing field '") + key + "'");
    return j.at(key);
}

std::vector<double> numbers(const json& j, const char* key)
{
    const json& a = field(j, key);
    if (!a.is_array())
        throw std::invalid_argument(std::string("json: field '") + key + "' is not an array");
    std::vector<double> out;
    out.reserve(a.size());
    for (const auto& x : a) {
        if (!x.is_number())
            throw std::invalid_argument(std::string("json: non-numeric entry in '") + key + "'");
        out.push_back(x.get<double>());
    }
    return out;
}

int dimension_of(const json& j)
{
    const json& n = field(j, "n");
    if (!n.is_number_integer())
        throw std::invalid_argument("json: field 'n' must be an integer");
    return n.get<int>();
}

}  // namespace

json profile_to_json(const RadialProfile& p)
{
    return json{{"n", p.n()},
                {"radii", std::vector<double>(p.radii().begin(), p.radii().end())},
                {"angles", std::vector<double>(p.angles().begin(), p.angles().end())}};
}

RadialProfile profile_from_json(const json& j)
{
    try {
        return RadialProfile(Dimension(dimension_of(j)), numbers(j, "radii"), numbers(j, "angles"));
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("profile: ") + e.what());
    }
}

json polytope_to_json(const Polytope& f)
{
    return json{{"n", f.n}, {"vertices", f.vertices}};
}

Polytope polytope_from_json(const json& j)
{
    const int n = dimension_of(j);
    const json& v = field(j, "vertices");
    if (!v.is_array())
        throw std::invalid_argument("polytope: 'vertices' is not an array");
    std::vector<std::vector<double>> pts;
    for (const auto& q : v) {
        if (!q.is_array())
            throw std::invalid_argument("polytope: vertex is not an array");
        std::vector<double> x;
        for (const auto& c : q) {
            if (!c.is_number())
                throw std::invalid_argument("polytope: non-numeric coordinate");
            x.push_back(c.get<double>());
        }
        pts.push_back(std::move(x));
    }
    return convex_hull(pts, n);
}

IndicatorSet oracle_from_json(const json& j)
{
    int n = dimension_of(j);
    const json& balls = field(j, "balls");
    if (!balls.is_array())
        throw std::invalid_argument("oracle: 'balls' is not an array");
    std::vector<SignedBall> out;
    for (const auto& b : balls) {
        SignedBall s;
        s.center = numbers(b, "center");
        const json& r = field(b, "radius");
        if (!r.is_number())
            throw std::invalid_argument("oracle: radius must be a number");
        s.radius = r.get<double>();
        if (b.contains("sign")) {
            if (!b.at("sign").is_number_integer())
                throw std::invalid_argument("oracle: sign must be +1 or -1");
            s.sign = b.at("sign").get<int>();
        }
        out.push_back(std::move(s));
    }
    try {
        return ball_oracle(Dimension(n), std::move(out));
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("oracle: ") + e.what());
    }
}

json deficit_report_json(const DeficitReport& r)
{
    return json{{"scale", r.scale},
                {"diameter", r.diameter},
                {"volume", r.volume},
                {"delta", r.delta},
                {"r_out", r.r_out},
                {"r_in", r.r_in},
                {"r_in_axis_restricted", r.r_in_axis_restricted},
                {"hausdorff_lo", r.hausdorff_lo},
                {"hausdorff_hi", r.hausdorff_hi},
                {"symdiff_min", r.symdiff_min},
                {"symdiff_t", r.symdiff_t},
                {"thm_main_margin", r.thm_main_margin}};
}

json convex_report_json(const ConvexReport& r)
{
    return json{{"perimeter", r.perimeter},
                {"volume", r.volume},
                {"diameter", r.diameter},
                {"delta_prime", r.delta_prime},
                {"t_F", r.t_F}};
}

json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
    }
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

}  // namespace isodiam
