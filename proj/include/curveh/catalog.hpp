#pragma once

// Named curves and arrangements with the reference values quoted for them.

#include <optional>
#include <string>
#include <vector>

#include "curveh/arrangement.hpp"

namespace curveh {

class UnknownCatalogName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
    std::string name;         // canonical, with the parameter if any, e.g. "cor11-family:5"
    std::string description;
    Arrangement arrangement;  // components of the curve; irreducible pieces of higher degree are "curve:" components
    std::optional<std::vector<int>> stated_exponents;
    std::optional<std::string> stated_class;  // "Free", "Type2A", ...
    std::optional<long> stated_tau;
    std::optional<int> stated_type;
    std::string note;

    Poly poly() const { return arrangement.defining_poly(); }
};

/// Accepts "name", "name:N" and "name(N)".
CatalogEntry catalog(const std::string& spec);

std::vector<std::string> catalog_names();

}  // namespace curveh
