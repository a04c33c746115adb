#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seqmine/errors.hpp"

namespace seqmine {

/// Parses a token as a signed integer, or nullopt if it is not one.
inline std::optional<std::int64_t> as_integer(std::string_view token) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

/// Natural token order: integers compare numerically and sort before
/// non-numeric tokens, which compare lexicographically.
struct TokenLess {
    bool operator()(std::string_view a, std::string_view b) const {
        auto ia = as_integer(a);
        auto ib = as_integer(b);
        if (ia && ib) return *ia != *ib ? *ia < *ib : a < b;
        if (ia || ib) return ia.has_value();
        return a < b;
    }
};

/// An item is a dense code into an ItemDictionary. Codes are assigned in
/// natural token order, so comparing codes compares items.
struct Item {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(Item, Item) = default;
};

using Sequence = std::vector<Item>;
using Pattern = std::vector<Item>;

/// Bidirectional mapping between item tokens and codes.
class ItemDictionary {
public:
    ItemDictionary() = default;

    /// Builds a dictionary over the distinct tokens given, in natural order.
    explicit ItemDictionary(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
        std::sort(tokens_.begin(), tokens_.end(), TokenLess{});
        tokens_.erase(std::unique(tokens_.begin(), tokens_.end()), tokens_.end());
        for (std::uint32_t i = 0; i < tokens_.size(); ++i) codes_.emplace(tokens_[i], i);
    }

    std::size_t size() const noexcept { return tokens_.size(); }

    const std::string& token(Item item) const { return tokens_.at(item.code); }

    std::optional<Item> find(std::string_view token) const {
        auto it = codes_.find(std::string(token));
        if (it == codes_.end()) return std::nullopt;
        return Item{it->second};
    }

    Item at(std::string_view token) const {
        if (auto item = find(token)) return *item;
        throw InvalidParams("unknown item '" + std::string(token) + "'");
    }

    const std::vector<std::string>& tokens() const noexcept { return tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, std::uint32_t> codes_;
};

using DictionaryPtr = std::shared_ptr<const ItemDictionary>;

}  // namespace seqmine

template <>
struct std::hash<seqmine::Item> {
    std::size_t operator()(seqmine::Item item) const noexcept {
        return std::hash<std::uint32_t>{}(item.code);
    }
};
