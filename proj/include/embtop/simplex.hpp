#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace embtop {

/// Vertex labels are non-negative integers; their integer order is the
/// canonical order used everywhere (simplex normal form, orientation signs).
using VertexId = std::int32_t;

/// A single face: a strictly increasing, nonempty vertex sequence.
class Simplex {
public:
    Simplex() = delete;

    /// Builds the canonical form from an arbitrary vertex list.
    /// Throws std::invalid_argument on an empty list, a negative id, or a
    /// repeated vertex.
    static Simplex of(std::vector<VertexId> vertices);

    /// Unchecked fast path: `vertices` must already be strictly increasing.
    static Simplex from_sorted(std::vector<VertexId> vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    std::span<const VertexId> vertices() const { return verts_; }
    VertexId operator[](std::size_t i) const { return verts_[i]; }

    bool contains(VertexId v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool is_subset_of(const Simplex& other) const {
        return std::includes(other.verts_.begin(), other.verts_.end(),
                             verts_.begin(), verts_.end());
    }

    /// Face with `v` removed; throws if `v` is absent or this is a vertex.
    Simplex without(VertexId v) const;

    /// Face with `v` added; throws if `v` is already present.
    Simplex with(VertexId v) const;

    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        return std::lexicographical_compare_three_way(
            a.verts_.begin(), a.verts_.end(), b.verts_.begin(), b.verts_.end());
    }

private:
    explicit Simplex(std::vector<VertexId> sorted) : verts_(std::move(sorted)) {}
    std::vector<VertexId> verts_;
};

}  // namespace embtop
