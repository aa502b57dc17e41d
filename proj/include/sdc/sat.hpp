#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sdc/core.hpp"

namespace sdc::sat {

// Dense row-major grids and their cumulative tables. Integer grids use a
// 64-bit accumulator (exact up to 2^63 total mass), floating grids accumulate
// in double. Tables carry one zero sentinel hyperplane per axis so the
// 4-/8-/2^k-term inclusion-exclusion queries never index out of bounds.
// Cell ranges are inclusive at both ends and 0-based.

template <typename T>
struct Grid2 {
    int width = 0, height = 0;
    std::vector<T> values;  // row-major, values[y*width + x]

    T at(int x, int y) const { return values[size_t(y) * width + x]; }
};

template <typename T>
struct Table2 {
    int width = 0, height = 0;   // grid dimensions (table is (w+1) x (h+1))
    std::vector<T> cum;

    T entry(int x, int y) const { return cum[size_t(y) * (width + 1) + x]; }

    // Sum of grid cells in [a..b] x [c..d].
    T region_sum(int a, int b, int c, int d) const {
        if (a < 0 || c < 0 || b >= width || d >= height || a > b || c > d)
            throw RangeError("region_sum_2d: box outside grid");
        return entry(b + 1, d + 1) - entry(a, d + 1) - entry(b + 1, c) + entry(a, c);
    }
};

template <typename T>
struct Grid3 {
    int nx = 0, ny = 0, nz = 0;
    std::vector<T> values;  // values[(z*ny + y)*nx + x]

    T at(int x, int y, int z) const { return values[(size_t(z) * ny + y) * nx + x]; }
};

template <typename T>
struct Table3 {
    int nx = 0, ny = 0, nz = 0;
    std::vector<T> cum;

    T entry(int x, int y, int z) const {
        return cum[(size_t(z) * (ny + 1) + y) * (nx + 1) + x];
    }

    T region_sum(int a, int b, int c, int d, int e, int f) const {
        if (a < 0 || c < 0 || e < 0 || b >= nx || d >= ny || f >= nz || a > b || c > d || e > f)
            throw RangeError("region_sum_3d: box outside grid");
        return entry(b + 1, d + 1, f + 1) - entry(b + 1, d + 1, e) - entry(b + 1, c, f + 1) +
               entry(b + 1, c, e) - entry(a, d + 1, f + 1) + entry(a, c, f + 1) +
               entry(a, d + 1, e) - entry(a, c, e);
    }
};

template <typename T>
struct GridN {
    std::vector<int> dims;      // dims[0] fastest-varying (lexicographic flat order)
    std::vector<T> values;

    size_t cell_count() const {
        size_t n = 1;
        for (int d : dims) n *= size_t(d);
        return n;
    }
};

struct BoxN {
    std::vector<int> lo, hi;  // inclusive cell coordinates
};

template <typename T>
struct TableN {
    std::vector<int> dims;
    std::vector<T> cum;        // shape dims[i]+1, same axis order
    std::vector<size_t> stride;

    T entry(const std::vector<int>& idx) const {
        size_t off = 0;
        for (size_t i = 0; i < idx.size(); ++i) off += stride[i] * size_t(idx[i]);
        return cum[off];
    }
};

template <typename T>
Table2<T> build_sat_2d(const Grid2<T>& g);

template <typename T>
Table3<T> build_sat_3d(const Grid3<T>& g);

template <typename T>
TableN<T> build_sat_nd(const GridN<T>& g);

// 2^k-corner query; corner_evals, when given, counts table entries touched.
template <typename T>
T region_sum_nd(const TableN<T>& table, const BoxN& box, size_t* corner_evals = nullptr);

extern template Table2<int64_t> build_sat_2d<int64_t>(const Grid2<int64_t>&);
extern template Table2<double> build_sat_2d<double>(const Grid2<double>&);
extern template Table3<int64_t> build_sat_3d<int64_t>(const Grid3<int64_t>&);
extern template Table3<double> build_sat_3d<double>(const Grid3<double>&);
extern template TableN<int64_t> build_sat_nd<int64_t>(const GridN<int64_t>&);
extern template TableN<double> build_sat_nd<double>(const GridN<double>&);
extern template int64_t region_sum_nd<int64_t>(const TableN<int64_t>&, const BoxN&, size_t*);
extern template double region_sum_nd<double>(const TableN<double>&, const BoxN&, size_t*);

}  // namespace sdc::sat
