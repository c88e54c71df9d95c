#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace pathcover {

// (psi_1, ..., psi_n). Indexing through psi() is 1-based like the path length.
class PathSequence {
public:
    PathSequence() = default;
    explicit PathSequence(std::vector<int> values) : values_(std::move(values)) {}

    int order() const noexcept { return static_cast<int>(values_.size()); }
    int psi(int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<int>& values() const noexcept { return values_; }

    // "(5,2,1,1,1)"
    std::string str() const;

    friend bool operator==(const PathSequence&, const PathSequence&) = default;
    friend auto operator<=>(const PathSequence&, const PathSequence&) = default;

private:
    std::vector<int> values_;
};

// Accepts "5,2,1,1,1", "(5,2,1,1,1)" or whitespace separated values.
PathSequence parse_sequence(std::string_view text);

}  // namespace pathcover
