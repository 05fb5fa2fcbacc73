#include "daylens/catalog.hpp"

#include <cmath>

#include "daylens/error.hpp"

namespace daylens {

std::vector<CatalogViolation> validate_catalog(const TagCatalog& catalog) {
  std::vector<CatalogViolation> out;
  auto weight_ok = [](double w) {
    return std::isfinite(w) && w >= kWeightMin && w <= kWeightMax;
  };
  if (!weight_ok(catalog.default_other_weight)) {
    out.push_back({"", "default_other_weight outside [-100, 100]"});
  }
  for (const auto& [tag, weights] : catalog.entries) {
    if (tag.empty()) {
      out.push_back({tag, "empty tag name"});
    }
    if (tag == kHomeTag) {
      out.push_back({tag, "home tag must not appear in a catalog; it is handled by the home profile"});
    }
    bool all_zero = true;
    for (const auto& [cat, w] : weights) {
      if (!weight_ok(w)) {
        out.push_back({tag, std::string("weight for ") + std::string(to_string(cat)) +
                                " outside [-100, 100]"});
      }
      if (w != 0.0) all_zero = false;
    }
    // A tag spanning several categories must matter to at least one of them.
    if (weights.size() >= 2 && all_zero) {
      out.push_back({tag, "tag in multiple categories with all weights 0"});
    }
  }
  return out;
}

std::set<Category> categories_of(const TagCatalog& catalog, const Tag& tag) {
  if (tag == kHomeTag) {
    throw InputError("the home tag has no catalog categories; use the home profile");
  }
  auto it = catalog.entries.find(tag);
  if (it == catalog.entries.end() || it->second.empty()) {
    return {Category::other};  // complement set
  }
  std::set<Category> cats;
  for (const auto& [cat, w] : it->second) cats.insert(cat);
  return cats;
}

double tag_weight(const TagCatalog& catalog, const Tag& tag, Category cat) {
  auto it = catalog.entries.find(tag);
  if (it == catalog.entries.end() || it->second.empty()) {
    return cat == Category::other ? catalog.default_other_weight : 0.0;
  }
  auto w = it->second.find(cat);
  return w == it->second.end() ? 0.0 : w->second;
}

}  // namespace daylens
