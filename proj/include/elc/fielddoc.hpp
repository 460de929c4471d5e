#ifndef ELC_FIELDDOC_HPP
#define ELC_FIELDDOC_HPP

#include <string>
#include <string_view>

#include "elc/tensor.hpp"

namespace elc {

// JSON tensor-field document:
//   { "dim": 3, "order": 2, "variance": "cc",
//     "components": { "11": "1 x2^2", ... } }
// Index strings use digits 1..n, one per slot; omitted components are zero;
// variance flags are 'c' (covariant) / 'v' (contravariant). An order-0 field
// uses the single key "".
TensorField field_from_json(std::string_view json_text);
std::string field_to_json(const TensorField& t, bool pretty = true);

} // namespace elc

#endif
