#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace daylens {

// The five lifestyle domains. `other` is the complement category: any tag
// that belongs to none of the first four lands there.
enum class Category : std::uint8_t { social, leisure, health, work, other };

inline constexpr std::size_t kCategoryCount = 5;

inline constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::social, Category::leisure, Category::health, Category::work,
    Category::other};

constexpr std::string_view to_string(Category c) {
  switch (c) {
    case Category::social:  return "social";
    case Category::leisure: return "leisure";
    case Category::health:  return "health";
    case Category::work:    return "work";
    case Category::other:   return "other";
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view name);

// Which crisp axis a linguistic variable fuzzifies: accumulated hours or
// the weighted score.
enum class QuantityKind : std::uint8_t { time, score };

constexpr std::string_view to_string(QuantityKind k) {
  return k == QuantityKind::time ? "time" : "score";
}

std::optional<QuantityKind> parse_quantity_kind(std::string_view name);

// Fixed-size value map keyed by Category. Zero-initialized.
template <typename T>
struct PerCategory {
  std::array<T, kCategoryCount> values{};

  T& operator[](Category c) { return values[static_cast<std::size_t>(c)]; }
  const T& operator[](Category c) const {
    return values[static_cast<std::size_t>(c)];
  }

  bool operator==(const PerCategory&) const = default;
};

}  // namespace daylens
