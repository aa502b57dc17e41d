#include "sdc/sat.hpp"

namespace sdc::sat {

template <typename T>
Table2<T> build_sat_2d(const Grid2<T>& g) {
    if (g.width < 1 || g.height < 1 || g.values.size() != size_t(g.width) * g.height)
        throw InvalidInput("build_sat_2d: empty or inconsistent grid");
    Table2<T> t;
    t.width = g.width;
    t.height = g.height;
    const int W = g.width + 1;
    t.cum.assign(size_t(W) * (g.height + 1), T(0));
    for (int y = 0; y < g.height; ++y) {
        T row = T(0);
        for (int x = 0; x < g.width; ++x) {
            row += g.at(x, y);
            t.cum[size_t(y + 1) * W + (x + 1)] = t.cum[size_t(y) * W + (x + 1)] + row;
        }
    }
    return t;
}

template <typename T>
Table3<T> build_sat_3d(const Grid3<T>& g) {
    if (g.nx < 1 || g.ny < 1 || g.nz < 1 ||
        g.values.size() != size_t(g.nx) * g.ny * g.nz)
        throw InvalidInput("build_sat_3d: empty or inconsistent grid");
    Table3<T> t;
    t.nx = g.nx;
    t.ny = g.ny;
    t.nz = g.nz;
    const size_t X = g.nx + 1, Y = g.ny + 1, Z = g.nz + 1;
    t.cum.assign(X * Y * Z, T(0));
    auto at = [&](int x, int y, int z) -> T& { return t.cum[(size_t(z) * Y + y) * X + x]; };
    for (int z = 1; z <= g.nz; ++z)
        for (int y = 1; y <= g.ny; ++y)
            for (int x = 1; x <= g.nx; ++x)
                at(x, y, z) = g.at(x - 1, y - 1, z - 1) + at(x - 1, y, z) + at(x, y - 1, z) +
                              at(x, y, z - 1) - at(x - 1, y - 1, z) - at(x - 1, y, z - 1) -
                              at(x, y - 1, z - 1) + at(x - 1, y - 1, z - 1);
    return t;
}

template <typename T>
TableN<T> build_sat_nd(const GridN<T>& g) {
    const size_t k = g.dims.size();
    if (k < 1) throw InvalidInput("build_sat_nd: need at least one dimension");
    size_t n = 1;
    for (int d : g.dims) {
        if (d < 1) throw InvalidInput("build_sat_nd: dimension < 1");
        n *= size_t(d);
    }
    if (g.values.size() != n) throw InvalidInput("build_sat_nd: values length != product of dims");

    TableN<T> t;
    t.dims = g.dims;
    t.stride.resize(k);
    size_t total = 1;
    for (size_t i = 0; i < k; ++i) {
        t.stride[i] = total;
        total *= size_t(g.dims[i] + 1);
    }
    t.cum.assign(total, T(0));

    // Copy grid values into the interior (all coordinates >= 1), then take a
    // running sum along each axis in turn.
    {
        std::vector<int> idx(k, 0);
        for (size_t flat = 0; flat < n; ++flat) {
            size_t off = 0;
            for (size_t i = 0; i < k; ++i) off += t.stride[i] * size_t(idx[i] + 1);
            t.cum[off] = g.values[flat];
            for (size_t i = 0; i < k; ++i) {
                if (++idx[i] < g.dims[i]) break;
                idx[i] = 0;
            }
        }
    }
    for (size_t axis = 0; axis < k; ++axis) {
        const size_t s = t.stride[axis];
        const size_t extent = size_t(t.dims[axis] + 1);
        // Sweep all lines parallel to `axis`.
        std::vector<int> idx(k, 0);
        size_t lines = total / extent;
        for (size_t line = 0; line < lines; ++line) {
            size_t base = 0;
            for (size_t i = 0; i < k; ++i)
                if (i != axis) base += t.stride[i] * size_t(idx[i]);
            for (size_t j = 1; j < extent; ++j) t.cum[base + j * s] += t.cum[base + (j - 1) * s];
            for (size_t i = 0; i < k; ++i) {
                if (i == axis) continue;
                if (++idx[i] <= t.dims[i]) break;
                idx[i] = 0;
            }
        }
    }
    return t;
}

template <typename T>
T region_sum_nd(const TableN<T>& table, const BoxN& box, size_t* corner_evals) {
    const size_t k = table.dims.size();
    if (box.lo.size() != k || box.hi.size() != k)
        throw InvalidInput("region_sum_nd: box dimension mismatch");
    for (size_t i = 0; i < k; ++i) {
        if (box.lo[i] > box.hi[i]) throw RangeError("region_sum_nd: lo > hi");
        if (box.lo[i] < 0 || box.hi[i] >= table.dims[i])
            throw RangeError("region_sum_nd: box outside grid");
    }
    T acc = T(0);
    std::vector<int> idx(k);
    const size_t corners = size_t(1) << k;
    for (size_t mask = 0; mask < corners; ++mask) {
        int parity = 0;
        for (size_t i = 0; i < k; ++i) {
            if (mask & (size_t(1) << i)) {
                idx[i] = box.lo[i];  // lower face, sign flips
                ++parity;
            } else {
                idx[i] = box.hi[i] + 1;
            }
        }
        const T v = table.entry(idx);
        acc += (parity & 1) ? -v : v;
        if (corner_evals) ++*corner_evals;
    }
    return acc;
}

template Table2<int64_t> build_sat_2d<int64_t>(const Grid2<int64_t>&);
template Table2<double> build_sat_2d<double>(const Grid2<double>&);
template Table3<int64_t> build_sat_3d<int64_t>(const Grid3<int64_t>&);
template Table3<double> build_sat_3d<double>(const Grid3<double>&);
template TableN<int64_t> build_sat_nd<int64_t>(const GridN<int64_t>&);
template TableN<double> build_sat_nd<double>(const GridN<double>&);
template int64_t region_sum_nd<int64_t>(const TableN<int64_t>&, const BoxN&, size_t*);
template double region_sum_nd<double>(const TableN<double>&, const BoxN&, size_t*);

}  // namespace sdc::sat
