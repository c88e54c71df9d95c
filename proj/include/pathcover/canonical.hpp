#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

inline constexpr int kMaxCanonicalVertices = 9;

// Upper-triangle adjacency string in graph6 bit order, (0,1) as the most
// significant bit, minimised over all vertex relabelings. Equal forms of
// equal order mean isomorphic graphs.
struct CanonicalForm {
    int n = 0;
    std::uint64_t code = 0;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Code of g under its current labeling (not minimised).
CanonicalForm labeled_code(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

// True iff g's own labeling already attains the minimal code.
bool is_canonically_labeled(const Graph& g);

// The graph whose labeled code is `form`.
Graph graph_from_code(const CanonicalForm& form);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace pathcover

template <>
struct std::hash<pathcover::CanonicalForm> {
    std::size_t operator()(const pathcover::CanonicalForm& f) const noexcept
    {
        return std::hash<std::uint64_t>{}(f.code * 64 + static_cast<std::uint64_t>(f.n));
    }
};
