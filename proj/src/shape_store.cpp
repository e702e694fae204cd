#include "sandpile/shape_store.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sandpile {

std::uint64_t ShapeStore::hash(std::span<const Height> heights) noexcept
{
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ heights.size();
    for (Height v : heights) {
        h ^= static_cast<std::uint32_t>(v);
        h *= 0xBF58476D1CE4E5B9ULL;
        h ^= h >> 31;
    }
    return h;
}

std::optional<VertexId> ShapeStore::find(std::span<const Height> heights, std::uint64_t h) const noexcept
{
    if (slots_.empty()) {
        return std::nullopt;
    }
    const std::uint64_t tag = h << 32;
    for (std::size_t s = (h >> 32) & mask_;; s = (s + 1) & mask_) {
        const std::uint64_t slot = slots_[s];
        if (slot == kEmpty) {
            return std::nullopt;
        }
        if ((slot & ~std::uint64_t{0xFFFFFFFF}) == tag) {
            const auto id = static_cast<VertexId>(slot);
            const auto stored = at(id);
            if (std::equal(stored.begin(), stored.end(), heights.begin(), heights.end())) {
                return id;
            }
        }
    }
}

VertexId ShapeStore::insert(std::span<const Height> heights, std::uint64_t h)
{
    if (size() >= std::numeric_limits<VertexId>::max() - 1) {
        throw std::length_error("shape store exceeds the vertex id range");
    }
    if (2 * (size() + 1) > slots_.size()) {
        grow();
    }
    const auto id = static_cast<VertexId>(size());
    arena_.insert(arena_.end(), heights.begin(), heights.end());
    offsets_.push_back(arena_.size());
    std::size_t s = (h >> 32) & mask_;
    while (slots_[s] != kEmpty) {
        s = (s + 1) & mask_;
    }
    slots_[s] = slot_value(id, h);
    return id;
}

void ShapeStore::grow()
{
    const std::size_t capacity = std::max<std::size_t>(64, slots_.size() * 2);
    slots_.assign(capacity, kEmpty);
    mask_ = capacity - 1;
    for (VertexId id = 0; id < size(); ++id) {
        const std::uint64_t h = hash(at(id));
        std::size_t s = (h >> 32) & mask_;
        while (slots_[s] != kEmpty) {
            s = (s + 1) & mask_;
        }
        slots_[s] = slot_value(id, h);
    }
}

}  // namespace sandpile
