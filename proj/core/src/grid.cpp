#include "tlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tlab/report_io.hpp"

namespace tlab {

Box::Box(std::vector<double> lo_, std::vector<double> hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.size() != hi.size() || lo.empty()) throw InvalidInputError("box: lo/hi size mismatch");
    for (size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < hi[i])) throw InvalidInputError("box: requires lo < hi on every axis");
}

Box Box::centered(double radius, int m) {
    if (!(radius > 0.0)) throw InvalidInputError("box: radius must be positive");
    return Box(std::vector<double>(m, -radius), std::vector<double>(m, radius));
}

bool Box::contains(const Box& inner, double tol) const {
    if (inner.dim() != dim()) return false;
    for (int i = 0; i < dim(); ++i)
        if (inner.lo[i] < lo[i] - tol || inner.hi[i] > hi[i] + tol) return false;
    return true;
}

GridField::GridField(const SpaceSignature& sig, Box box, std::vector<int> shape)
    : sig_(sig), box_(std::move(box)), shape_(std::move(shape)) {
    if (box_.dim() != sig_.m) throw InvalidInputError("grid: box dimension must equal m");
    if (static_cast<int>(shape_.size()) != sig_.m)
        throw InvalidInputError("grid: shape must have m entries");
    spacing_.resize(sig_.m);
    for (int i = 0; i < sig_.m; ++i) {
        if (shape_[i] < 5) throw InvalidInputError("grid: needs at least 5 nodes per axis");
        spacing_[i] = (box_.hi[i] - box_.lo[i]) / (shape_[i] - 1);
    }
    strides_.assign(sig_.m, 1);
    for (int i = sig_.m - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * static_cast<size_t>(shape_[i + 1]);
    num_nodes_ = strides_[0] * static_cast<size_t>(shape_[0]);
    samples_.assign(sig_.n, std::vector<double>(num_nodes_, 0.0));
}

GridField GridField::sample(const SpaceSignature& sig, const Box& box,
                            const std::vector<int>& shape, const std::vector<Expression>& fns) {
    if (static_cast<int>(fns.size()) != sig.n)
        throw InvalidInputError("grid sample: expected n functions");
    GridField f(sig, box, shape);
    f.for_each_node([&](const std::vector<int>& idx) {
        const auto x = f.coords(idx);
        const size_t flat = f.flat_index(idx);
        for (int a = 0; a < sig.n; ++a) {
            const double v = fns[a].eval(x);
            if (!std::isfinite(v)) throw EvalDomainError("non-finite sample", fns[a].print());
            f.samples_[a][flat] = v;
        }
    });
    return f;
}

double GridField::max_spacing() const {
    return *std::max_element(spacing_.begin(), spacing_.end());
}

size_t GridField::flat_index(const std::vector<int>& idx) const {
    size_t flat = 0;
    for (int i = 0; i < sig_.m; ++i) {
        if (idx[i] < 0 || idx[i] >= shape_[i]) throw InvalidInputError("grid index out of range");
        flat += strides_[i] * static_cast<size_t>(idx[i]);
    }
    return flat;
}

std::vector<int> GridField::unflatten(size_t flat) const {
    std::vector<int> idx(sig_.m);
    for (int i = 0; i < sig_.m; ++i) {
        idx[i] = static_cast<int>(flat / strides_[i]);
        flat %= strides_[i];
    }
    return idx;
}

std::vector<double> GridField::coords(const std::vector<int>& idx) const {
    std::vector<double> x(sig_.m);
    for (int i = 0; i < sig_.m; ++i) x[i] = box_.lo[i] + spacing_[i] * idx[i];
    return x;
}

int GridField::boundary_margin(const std::vector<int>& idx) const {
    int margin = shape_[0];
    for (int i = 0; i < sig_.m; ++i)
        margin = std::min({margin, idx[i], shape_[i] - 1 - idx[i]});
    return margin;
}

void GridField::for_each_node(const std::function<void(const std::vector<int>&)>& fn) const {
    std::vector<int> idx(sig_.m, 0);
    while (true) {
        fn(idx);
        int axis = sig_.m - 1;
        while (axis >= 0) {
            if (++idx[axis] < shape_[axis]) break;
            idx[axis] = 0;
            --axis;
        }
        if (axis < 0) return;
    }
}

double GridField::interpolate_clamped(int alpha, const std::vector<double>& x) const {
    std::vector<int> base(sig_.m);
    std::vector<double> w(sig_.m);
    for (int i = 0; i < sig_.m; ++i) {
        double t = (x[i] - box_.lo[i]) / spacing_[i];
        t = std::clamp(t, 0.0, static_cast<double>(shape_[i] - 1));
        int cell = static_cast<int>(std::floor(t));
        cell = std::min(cell, shape_[i] - 2);
        base[i] = cell;
        w[i] = t - cell;
    }
    double acc = 0.0;
    const int corners = 1 << sig_.m;
    std::vector<int> idx(sig_.m);
    for (int c = 0; c < corners; ++c) {
        double weight = 1.0;
        for (int i = 0; i < sig_.m; ++i) {
            const bool high = (c >> i) & 1;
            idx[i] = base[i] + (high ? 1 : 0);
            weight *= high ? w[i] : 1.0 - w[i];
        }
        if (weight != 0.0) acc += weight * samples_[alpha][flat_index(idx)];
    }
    return acc;
}

Jet2 fd_jet(const GridField& field, const std::vector<int>& index, int min_margin) {
    const auto& sig = field.sig();
    if (static_cast<int>(index.size()) != sig.m)
        throw InvalidInputError("fd_jet: index must have m entries");
    const int margin = field.boundary_margin(index);
    const int required = std::max(1, min_margin);
    if (margin < required)
        throw BoundaryProximityError("fd_jet: node is " + std::to_string(margin) +
                                     " cells from the boundary, need " + std::to_string(required));

    const auto& h = field.spacing();
    Jet2 jet(sig);
    jet.base = field.coords(index);

    std::vector<int> idx = index;
    for (int a = 0; a < sig.n; ++a) {
        const double center = field.at(a, index);
        jet.value[a] = center;
        for (int i = 0; i < sig.m; ++i) {
            idx = index;
            idx[i] += 1;
            const double up = field.at(a, idx);
            idx[i] -= 2;
            const double dn = field.at(a, idx);
            jet.du(a, i) = (up - dn) / (2.0 * h[i]);
            jet.d2u(a, i, i) = (up - 2.0 * center + dn) / (h[i] * h[i]);
        }
        for (int i = 0; i < sig.m; ++i)
            for (int j = i + 1; j < sig.m; ++j) {
                idx = index;
                idx[i] += 1; idx[j] += 1;
                const double pp = field.at(a, idx);
                idx[j] -= 2;
                const double pm = field.at(a, idx);
                idx[i] -= 2;
                const double mm = field.at(a, idx);
                idx[j] += 2;
                const double mp = field.at(a, idx);
                const double mixed = (pp - pm - mp + mm) / (4.0 * h[i] * h[j]);
                jet.d2u(a, i, j) = mixed;
                jet.d2u(a, j, i) = mixed;
            }
    }
    return jet;
}

void write_grid_csv(const GridField& field, const std::filesystem::path& path) {
    const auto& sig = field.sig();
    std::vector<std::string> header;
    for (int i = 1; i <= sig.m; ++i) header.push_back("i" + std::to_string(i));
    for (int a = 1; a <= sig.n; ++a) header.push_back("u" + std::to_string(a));
    CsvWriter csv(std::move(header));
    field.for_each_node([&](const std::vector<int>& idx) {
        std::vector<std::string> cells;
        cells.reserve(sig.m + sig.n);
        for (int i = 0; i < sig.m; ++i) cells.push_back(std::to_string(idx[i]));
        for (int a = 0; a < sig.n; ++a) cells.push_back(format_g17(field.at(a, idx)));
        csv.add_row_mixed(cells);
    });
    csv.save(path);
}

GridField read_grid_csv(const std::filesystem::path& path, const SpaceSignature& sig,
                        const Box& box, const std::vector<int>& shape) {
    GridField field(sig, box, shape);
    std::istringstream in(read_text_file(path));
    std::string line;
    if (!std::getline(in, line)) throw InvalidInputError("grid csv: empty file " + path.string());

    std::vector<char> seen(field.num_nodes(), 0);
    std::vector<int> idx(sig.m);
    size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::istringstream cells(line);
        std::string cell;
        for (int i = 0; i < sig.m; ++i) {
            if (!std::getline(cells, cell, ','))
                throw InvalidInputError("grid csv: short row " + std::to_string(row));
            idx[i] = std::stoi(cell);
        }
        const size_t flat = field.flat_index(idx);
        for (int a = 0; a < sig.n; ++a) {
            if (!std::getline(cells, cell, ','))
                throw InvalidInputError("grid csv: short row " + std::to_string(row));
            const double v = std::stod(cell);
            if (!std::isfinite(v))
                throw InvalidInputError("grid csv: non-finite sample at row " + std::to_string(row));
            field.values(a)[flat] = v;
        }
        seen[flat] = 1;
    }
    for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw InvalidInputError("grid csv: missing node in " + path.string());
    return field;
}

} // namespace tlab
