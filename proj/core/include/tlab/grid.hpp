#pragma once

// Axis-aligned rectangular grids holding the n graph functions, with
// second-order central-difference jets.

#include <filesystem>
#include <functional>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/expression.hpp"
#include "tlab/jet2.hpp"
#include "tlab/signature.hpp"

namespace tlab {

struct Box {
    std::vector<double> lo, hi;

    Box() = default;
    Box(std::vector<double> lo_, std::vector<double> hi_);
    static Box centered(double radius, int m);

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const Box& inner, double tol = 1e-12) const;
};

class GridField {
public:
    GridField() = default;
    GridField(const SpaceSignature& sig, Box box, std::vector<int> shape);

    /// Fill from expressions; rejects non-finite samples.
    static GridField sample(const SpaceSignature& sig, const Box& box,
                            const std::vector<int>& shape, const std::vector<Expression>& fns);

    const SpaceSignature& sig() const { return sig_; }
    const Box& box() const { return box_; }
    const std::vector<int>& shape() const { return shape_; }
    const std::vector<double>& spacing() const { return spacing_; }
    double max_spacing() const;
    size_t num_nodes() const { return num_nodes_; }

    size_t flat_index(const std::vector<int>& idx) const;
    std::vector<int> unflatten(size_t flat) const;
    std::vector<double> coords(const std::vector<int>& idx) const;

    double at(int alpha, const std::vector<int>& idx) const {
        return samples_[alpha][flat_index(idx)];
    }
    double& at(int alpha, const std::vector<int>& idx) {
        return samples_[alpha][flat_index(idx)];
    }
    const std::vector<double>& values(int alpha) const { return samples_[alpha]; }
    std::vector<double>& values(int alpha) { return samples_[alpha]; }

    /// Cells between idx and the nearest face, minimized over axes.
    int boundary_margin(const std::vector<int>& idx) const;
    bool is_boundary(const std::vector<int>& idx) const { return boundary_margin(idx) == 0; }

    void for_each_node(const std::function<void(const std::vector<int>&)>& fn) const;

    /// Multilinear interpolation at a point clamped into the box.
    double interpolate_clamped(int alpha, const std::vector<double>& x) const;

private:
    SpaceSignature sig_;
    Box box_;
    std::vector<int> shape_;
    std::vector<double> spacing_;
    std::vector<size_t> strides_;
    size_t num_nodes_ = 0;
    std::vector<std::vector<double>> samples_; // n arrays
};

/// Second-order central-difference jet at a grid node. The public contract
/// requires min_margin cells (default 2) between the node and every face;
/// the stencil itself touches only the immediate neighbours.
Jet2 fd_jet(const GridField& field, const std::vector<int>& index, int min_margin = 2);

/// Flat CSV exchange format: header i1..im,u1..un, one row per node.
void write_grid_csv(const GridField& field, const std::filesystem::path& path);
GridField read_grid_csv(const std::filesystem::path& path, const SpaceSignature& sig,
                        const Box& box, const std::vector<int>& shape);

} // namespace tlab
