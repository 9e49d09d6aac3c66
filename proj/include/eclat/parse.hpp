#pragma once

#include <string>

#include "eclat/canon.hpp"
#include "eclat/model.hpp"

namespace eclat {

/// Parses and fully resolves an eclat-model/1 descriptor document. All
/// cross-references (fields, params, projection sources, superseded_by) are
/// resolved or a ReferenceError is thrown; domain problems throw
/// DomainError; malformed JSON throws SyntaxError with position info.
ModelDescriptor parse_model(const std::string& text);
ModelDescriptor parse_model_json(const json& doc);
ModelDescriptor parse_model_file(const std::string& path);

/// Serializes back to a descriptor document. parse(serialize(m)) == m.
json serialize_model(const ModelDescriptor& model);

/// Structural equality via canonical serialization.
bool models_equal(const ModelDescriptor& a, const ModelDescriptor& b);

} // namespace eclat
