#include "sdc/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sdc::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

bool parse_double(const std::string& s, double& out) {
    const char* c = s.c_str();
    char* end = nullptr;
    errno = 0;
    out = std::strtod(c, &end);
    while (end && *end == ' ') ++end;
    return end != c && end && *end == '\0' && errno == 0;
}

bool parse_int64(const std::string& s, int64_t& out) {
    const char* c = s.c_str();
    char* end = nullptr;
    errno = 0;
    out = std::strtoll(c, &end, 10);
    while (end && *end == ' ') ++end;
    return end != c && end && *end == '\0' && errno == 0;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return in;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), long(e.byte));
    }
}

}  // namespace

LoadedGrid2 read_grid_csv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    long line_no = 0;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(split(line, ','));
        if (rows.back().size() != rows.front().size())
            throw ParseError(path + ": ragged row", line_no);
    }
    if (rows.empty()) throw ParseError(path + ": empty grid", line_no);

    LoadedGrid2 g;
    const int h = int(rows.size()), w = int(rows.front().size());
    g.integral = true;
    g.igrid.width = g.dgrid.width = w;
    g.igrid.height = g.dgrid.height = h;
    for (long r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            int64_t iv;
            if (!parse_int64(strip(rows[r][c]), iv)) {
                g.integral = false;
                r = h;  // fall through to the double pass
                break;
            }
            g.igrid.values.push_back(iv);
        }
    if (!g.integral) g.igrid.values.clear();
    for (long r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            double dv;
            if (!parse_double(strip(rows[r][c]), dv))
                throw ParseError(path + ": bad number '" + rows[r][c] + "'", r + 1);
            g.dgrid.values.push_back(dv);
        }
    return g;
}

std::vector<Box2> read_boxes_csv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<Box2> boxes;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split(line, ',');
        if (cols.size() != 4) throw ParseError(path + ": box needs a,b,c,d", line_no);
        Box2 b;
        int64_t v[4];
        for (int i = 0; i < 4; ++i)
            if (!parse_int64(strip(cols[i]), v[i]))
                throw ParseError(path + ": bad box coordinate", line_no);
        b.a = int(v[0]);
        b.b = int(v[1]);
        b.c = int(v[2]);
        b.d = int(v[3]);
        boxes.push_back(b);
    }
    return boxes;
}

sat::GridN<double> read_grid_nd_json(const std::string& path) {
    const nlohmann::json j = load_json(path);
    sat::GridN<double> g;
    if (!j.contains("dims") || !j.contains("values"))
        throw ParseError(path + ": need dims and values", 0);
    g.dims = j["dims"].get<std::vector<int>>();
    g.values = j["values"].get<std::vector<double>>();
    return g;
}

std::vector<sat::BoxN> read_boxes_nd_json(const std::string& path) {
    const nlohmann::json j = load_json(path);
    if (!j.contains("boxes")) throw ParseError(path + ": need boxes", 0);
    std::vector<sat::BoxN> out;
    for (const auto& jb : j["boxes"]) {
        sat::BoxN b;
        b.lo = jb["lo"].get<std::vector<int>>();
        b.hi = jb["hi"].get<std::vector<int>>();
        out.push_back(std::move(b));
    }
    return out;
}

Series read_series_csv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    Series s;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split(line, ',');
        if (cols.size() != 2) throw ParseError(path + ": series needs t,value", line_no);
        double t, v;
        if (!parse_double(strip(cols[0]), t) || !parse_double(strip(cols[1]), v)) {
            if (line_no == 1) continue;  // header row
            throw ParseError(path + ": bad number", line_no);
        }
        s.t.push_back(t);
        s.value.push_back(v);
    }
    if (s.t.size() < 2) throw ParseError(path + ": series needs at least 2 samples", line_no);
    return s;
}

Curve2D read_curve_csv(const std::string& path, bool closed) {
    std::ifstream in = open_or_throw(path);
    std::vector<double> t, x, y;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split(line, ',');
        if (cols.size() != 2 && cols.size() != 3)
            throw ParseError(path + ": curve needs t,x,y or x,y", line_no);
        double v[3];
        bool ok = true;
        for (size_t i = 0; i < cols.size(); ++i) ok = ok && parse_double(strip(cols[i]), v[i]);
        if (!ok) {
            if (line_no == 1) continue;  // header row
            throw ParseError(path + ": bad number", line_no);
        }
        if (cols.size() == 3) {
            t.push_back(v[0]);
            x.push_back(v[1]);
            y.push_back(v[2]);
        } else {
            x.push_back(v[0]);
            y.push_back(v[1]);
        }
    }
    try {
        return make_curve(std::move(t), std::move(x), std::move(y), closed);
    } catch (const InvalidInput& e) {
        throw ParseError(path + ": " + e.what(), line_no);
    }
}

GRD read_grd_json(const std::string& path) {
    const nlohmann::json j = load_json(path);
    if (!j.contains("vertices")) throw ParseError(path + ": need vertices", 0);
    GRD g;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2) throw ParseError(path + ": vertex needs [x,y]", 0);
        g.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    try {
        g.validate();
    } catch (const InvalidInput& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
    return g;
}

LimitConfig read_limit_config_json(const std::string& path, LimitConfig base) {
    const nlohmann::json j = load_json(path);
    if (j.contains("h0")) base.h0 = j["h0"].get<double>();
    if (j.contains("ratio")) base.ratio = j["ratio"].get<double>();
    if (j.contains("steps")) base.steps = j["steps"].get<int>();
    if (j.contains("zero_tol")) base.zero_tol = j["zero_tol"].get<double>();
    if (j.contains("tail_len")) base.tail_len = j["tail_len"].get<int>();
    base.validate();
    return base;
}

}  // namespace sdc::io
