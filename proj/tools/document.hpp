#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "barbridge/analogous.hpp"
#include "barbridge/extension.hpp"
#include "barbridge/persistence.hpp"

namespace barbridge::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "barbridge/1";

// Sorted keys, two-space indent, doubles at 17 significant digits, trailing
// newline. Parsing the output and dumping it again gives the same bytes.
std::string canonical_json(const Json& j);

// FNV-1a 64-bit over the shape and the %.17g text of each entry, as hex.
std::string digest(std::size_t rows, std::size_t cols, const std::vector<double>& entries);

// Bar ids ordered by value length (longest first), then birth, then id.
// Infinite bars are longest.
std::vector<BarId> ranked_bars(const PersistenceResult& r);

Json chain_json(const Chain& c);
Json representation_json(const BarRepresentation& rep);
Json barcode_json(const PersistenceResult& r, bool with_cycles);

// Grades are read on the scale of `target` (the complex the extension lands in).
Json extension_json(const ExtensionResult& e, const ParameterScale& target);
Json bar_extension_json(const BarExtensionResult& e, const PersistenceResult& source,
                        const ParameterScale& target);

Json analogous_json(const AnalogousBarsResult& r, const AnalogousInputs& in);

}  // namespace barbridge::cli
