#include "daylens/category.hpp"

namespace daylens {

std::optional<Category> parse_category(std::string_view name) {
  for (Category c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<QuantityKind> parse_quantity_kind(std::string_view name) {
  if (name == "time") return QuantityKind::time;
  if (name == "score") return QuantityKind::score;
  return std::nullopt;
}

}  // namespace daylens
