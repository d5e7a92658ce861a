#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hodgekit/defcone.hpp"
#include "hodgekit/gysin.hpp"
#include "hodgekit/hodge.hpp"
#include "hodgekit/spectral.hpp"
#include "hodgekit/splitting.hpp"
#include "hodgekit/thom_whitney.hpp"

namespace hodge {

// Ordered JSON keeps emission order stable, which keeps reports byte-stable.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m);  // array of rows of scalar strings
Matrix matrix_from_json(const Json& j);
Matrix matrix_from_json(const Json& j, size_t rows, size_t cols);

Json basis_to_json(const Matrix& basis);  // array of column vectors
Subspace subspace_from_json(const Json& j, size_t ambient);

Json filtration_to_json(const FilteredSpace& f);
FilteredSpace filtration_from_json(const Json& j, size_t ambient);

Json mhs_to_json(const MixedHodge& m);
MixedHodge mhs_from_json(const Json& j);

Json shs_to_json(const SplitHodge& s);
SplitHodge shs_from_json(const Json& j);

Json sts_to_json(const SplitTwistor& s);
SplitTwistor sts_from_json(const Json& j);

Json frep_to_json(const FRep& f);
FRep frep_from_json(const Json& j);

Json complex_to_json(const FilteredComplex& c);
FilteredComplex complex_from_json(const Json& j);

Json dga_to_json(const Dga& a);
Dga dga_from_json(const Json& j);

Json gysin_to_json(const GysinInput& g);
GysinInput gysin_from_json(const Json& j);

Json codga_to_json(const CosimplicialDga& c);
CosimplicialDga codga_from_json(const Json& j);

Json defcone_to_json(const DefConeInput& d);
DefConeInput defcone_from_json(const Json& j);

// The "kind" discriminator; parse failure if absent.
std::string json_kind(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Compact single-line JSON, or an indented key: value listing.
std::string render_report(const Json& report, bool as_text);

}  // namespace hodge
