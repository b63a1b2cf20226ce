#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradreg/algebra.hpp"
#include "gradreg/regularity.hpp"

namespace gradreg {

// One pinned presentation per name plus the asserted facts the verify suite
// gates on.  noetherian and bdc (balanced dualizing complex) are assertions:
// neither is decidable from truncated data.  a0Semisimple and the Gorenstein
// data are re-derived or re-verified by the tool wherever they matter.
struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string presentation;  // parse_presentation-ready JSON
    bool noetherian = false;
    bool bdc = false;
    bool a0Semisimple = false;
    std::optional<ASGorensteinData> gorenstein;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

AlgebraHandle catalog_build(const CatalogEntry& e, long long N);

}  // namespace gradreg
