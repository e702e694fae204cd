#pragma once

#include "sandpile/configuration.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sandpile {

using VertexId = std::uint32_t;

/// Append-only intern table of shapes. Heights live in one contiguous arena;
/// lookup is open addressing over ids.
class ShapeStore {
public:
    static std::uint64_t hash(std::span<const Height> heights) noexcept;

    std::size_t size() const noexcept { return offsets_.size() - 1; }

    std::span<const Height> at(VertexId id) const noexcept
    {
        return {arena_.data() + offsets_[id], static_cast<std::size_t>(offsets_[id + 1] - offsets_[id])};
    }

    std::optional<VertexId> find(std::span<const Height> heights) const noexcept
    {
        return find(heights, hash(heights));
    }
    std::optional<VertexId> find(std::span<const Height> heights, std::uint64_t h) const noexcept;

    /// Appends a shape that is not yet present and returns its id.
    VertexId insert(std::span<const Height> heights, std::uint64_t h);
    VertexId insert(std::span<const Height> heights) { return insert(heights, hash(heights)); }

private:
    void grow();

    std::vector<Height> arena_;
    std::vector<std::uint64_t> offsets_{0};
    // Each slot packs (low hash bits << 32) | id, or holds kEmpty.
    std::vector<std::uint64_t> slots_;
    std::size_t mask_ = 0;

    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
    static std::uint64_t slot_value(VertexId id, std::uint64_t h) noexcept { return (h << 32) | id; }
};

}  // namespace sandpile
