#pragma once

#include <nlohmann/json.hpp>

#include "gswitch/core/colouring.hpp"
#include "gswitch/core/switching.hpp"
#include "gswitch/ramsey/bounds.hpp"
#include "gswitch/ramsey/verify.hpp"

namespace gswitch {

/// Field order is fixed (ordered_json) so equal inputs give byte-identical
/// output. Colours and vertices are 1-based, as in the text format.
using Json = nlohmann::ordered_json;

Json to_json(const BoundCertificate& c);
Json to_json(const CliqueWitness& w);
/// The colouring is embedded as its text-format lines.
Json to_json(const LowerCheck& c, const EdgeColouring& g, const ColourGroup& group,
             const RamseyTarget& target);
Json to_json(const ExhaustiveCheck& c, int n, const ColourGroup& group,
             const RamseyTarget& target);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace gswitch
