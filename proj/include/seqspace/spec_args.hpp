#pragma once

#include <string>

#include "seqspace/specs.hpp"

namespace seqspace {

/// Sequence argument in any accepted surface form: a JSON object, "@file"
/// (JSON or CSV; the last field of each CSV row is the value), the inline
/// shorthand "list:v1,v2,...;tail=zero|const:c|repeat", or a bare closed-form
/// expression in n.
SeqSpec parse_seq_arg(const std::string& raw);

/// Matrix argument: a JSON object, "@file", or the shorthands
/// zero | identity | diag:EXPR | triangle:EXPR | bare closed form in n,k.
MatrixSpec parse_matrix_arg(const std::string& raw);

/// Exponent argument with its declared sup: `bound_flag` wins when positive,
/// otherwise the bound is inferred from a finite description (a constant
/// expression or an explicit list); anything else is an error naming the
/// --<which>-bound flag to pass.
ExponentSeq parse_exponent_arg(const std::string& raw, double bound_flag, const char* which);

}  // namespace seqspace
