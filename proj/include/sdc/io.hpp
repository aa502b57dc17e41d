#pragma once

#include <string>
#include <vector>

#include "sdc/curve.hpp"
#include "sdc/limits.hpp"
#include "sdc/sat.hpp"
#include "sdc/slanted.hpp"

namespace sdc::io {

// 2-D grid from CSV (one row per line). Values that all parse as integers
// load into the exact 64-bit path; anything else loads as doubles.
struct LoadedGrid2 {
    bool integral = false;
    sat::Grid2<int64_t> igrid;
    sat::Grid2<double> dgrid;
};
LoadedGrid2 read_grid_csv(const std::string& path);

// Inclusive 0-based boxes, one per line: "a,b,c,d" (x then y range).
struct Box2 {
    int a, b, c, d;
};
std::vector<Box2> read_boxes_csv(const std::string& path);

// n-D grid descriptor: {"dims":[...], "values":[...]}; axis 0 varies fastest.
sat::GridN<double> read_grid_nd_json(const std::string& path);

// Boxes: {"boxes": [{"lo":[...], "hi":[...]}, ...]} (inclusive cells).
std::vector<sat::BoxN> read_boxes_nd_json(const std::string& path);

// Series CSV: "t,value" per line (header optional).
struct Series {
    std::vector<double> t, value;
};
Series read_series_csv(const std::string& path);

// Curve CSV: "t,x,y" or "x,y" per line (implicit t = row index).
Curve2D read_curve_csv(const std::string& path, bool closed);

// GRD JSON: {"vertices": [[x,y], ...]}.
GRD read_grd_json(const std::string& path);

// LimitConfig overrides from a JSON object file: {"h0":..., "ratio":...,
// "steps":..., "zero_tol":..., "tail_len":...} (all optional).
LimitConfig read_limit_config_json(const std::string& path, LimitConfig base);

}  // namespace sdc::io
