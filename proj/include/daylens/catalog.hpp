#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "daylens/category.hpp"

namespace daylens {

// A tag names the kind of place a visit happened at ("gym", "cafe", ...).
// `home`, `work` and `unknown` are reserved: `home` is handled by the home
// profile and never appears in a catalog, `work` is the registered
// workplace, `unknown` is what POI resolution falls back to.
using Tag = std::string;

inline constexpr std::string_view kHomeTag = "home";
inline constexpr std::string_view kWorkTag = "work";
inline constexpr std::string_view kUnknownTag = "unknown";
inline constexpr std::string_view kTravelTag = "travel";

// Intensity weights are confined to [-100, 100]; negative means the place
// works against the category's purpose (hospital vs. gym).
inline constexpr double kWeightMin = -100.0;
inline constexpr double kWeightMax = 100.0;

// Maps each tag to its per-category intensity weights. Tags absent from the
// map belong to the complement category `other` and score at
// default_other_weight.
struct TagCatalog {
  std::map<Tag, std::map<Category, double>> entries;
  double default_other_weight = 10.0;
};

struct CatalogViolation {
  Tag tag;
  std::string rule;

  bool operator==(const CatalogViolation&) const = default;
};

// Returns every invariant violation in the catalog; empty means valid.
// Violations are data, not failures.
std::vector<CatalogViolation> validate_catalog(const TagCatalog& catalog);

// The categories a tag belongs to: the keys of its catalog entry, or
// {other} when it has none. Throws InputError for the home tag.
std::set<Category> categories_of(const TagCatalog& catalog, const Tag& tag);

// Intensity of `tag` with respect to `cat`: the catalog weight if present,
// default_other_weight for an uncataloged tag's `other` membership, else 0.
double tag_weight(const TagCatalog& catalog, const Tag& tag, Category cat);

}  // namespace daylens
