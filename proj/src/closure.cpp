#include "gk/aut.hpp"

#include <string>

namespace gk {

GroupClosure::GroupClosure(std::vector<Collineation> elements)
    : elements_(std::move(elements)), index_(elements_.begin(), elements_.end()) {}

namespace {

// Frontier elements multiplied per parallel block; bounds the product buffer.
constexpr std::size_t kBlock = 2048;

void check_cap(std::size_t size, std::size_t cap) {
    if (size > cap) {
        throw LimitError("group closure exceeded " + std::to_string(cap) + " elements");
    }
}

}  // namespace

GroupClosure group_closure(const TowerField& f, std::span<const Collineation> gens,
                           std::size_t max_elements) {
    if (gens.empty()) throw ArgumentError("closure of an empty generator list");
    std::unordered_set<Collineation, CollineationHash> seen;
    std::vector<Collineation> elements{col::identity(f)};
    seen.insert(elements.front());

    std::size_t level_begin = 0;
    std::vector<Collineation> products;
    while (level_begin < elements.size()) {
        const std::size_t level_end = elements.size();
        for (std::size_t block = level_begin; block < level_end; block += kBlock) {
            const std::size_t block_end = std::min(block + kBlock, level_end);
            const std::size_t rows = block_end - block;
            products.resize(rows * gens.size());
            const auto total = static_cast<std::int64_t>(products.size());
#pragma omp parallel for schedule(static)
            for (std::int64_t k = 0; k < total; ++k) {
                const auto idx = static_cast<std::size_t>(k);
                products[idx] = col::multiply(f, elements[block + idx / gens.size()], gens[idx % gens.size()]);
            }
            for (const auto& c : products) {
                if (seen.insert(c).second) {
                    elements.push_back(c);
                    check_cap(elements.size(), max_elements);
                }
            }
        }
        level_begin = level_end;
    }
    return GroupClosure(std::move(elements));
}

namespace serial {

GroupClosure group_closure(const TowerField& f, std::span<const Collineation> gens,
                           std::size_t max_elements) {
    if (gens.empty()) throw ArgumentError("closure of an empty generator list");
    std::unordered_set<Collineation, CollineationHash> seen;
    std::vector<Collineation> elements{col::identity(f)};
    seen.insert(elements.front());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : gens) {
            Collineation c = col::multiply(f, elements[i], g);
            if (seen.insert(c).second) {
                elements.push_back(std::move(c));
                check_cap(elements.size(), max_elements);
            }
        }
    }
    return GroupClosure(std::move(elements));
}

}  // namespace serial

}  // namespace gk
