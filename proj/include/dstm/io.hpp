#pragma once

#include <string>

#include "dstm/fields.hpp"
#include "dstm/tensor.hpp"

namespace dstm {

// Tensor file format: a JSON document with fields
//   shape   — list of positive integers
//   degree  — integer
//   entries — list of entries in lexicographic order of I_p; each entry is
//             a rational string "num/den", an integer string, or a JSON
//             integer
// Writes are canonical (entries as "num/den" strings), so a written file
// re-parses to an identical tensor.
Tensor<RationalField> parse_tensor_json(const std::string& text);
Tensor<RationalField> read_tensor_file(const std::string& path);

std::string tensor_json(const Tensor<RationalField>& t);
void write_tensor_file(const std::string& path, const Tensor<RationalField>& t);

} // namespace dstm
