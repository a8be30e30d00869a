#pragma once

#include <stdexcept>
#include <string>

namespace cmreg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CMREG_DEFINE_ERROR(name)                          \
    struct name : error {                                 \
        explicit name(const std::string& m) : error(m) {} \
    }

CMREG_DEFINE_ERROR(segment_too_large);   // lex segment size exceeds monomial count
CMREG_DEFINE_ERROR(not_a_lex_segment);   // shadow output failed the lex-segment check
CMREG_DEFINE_ERROR(zero_series);         // numerator identically zero
CMREG_DEFINE_ERROR(dimension_zero);      // operation requires dim >= 1
CMREG_DEFINE_ERROR(not_admissible);      // not the coefficient data of a graded quotient
CMREG_DEFINE_ERROR(level_out_of_range);  // regularity level p outside 1..d
CMREG_DEFINE_ERROR(index_out_of_range);  // coefficient index outside stored range
CMREG_DEFINE_ERROR(unit_ideal);          // degree-0 generator supplied as input
CMREG_DEFINE_ERROR(too_many_forms);      // regular sequence longer than variable count
CMREG_DEFINE_ERROR(not_an_o_sequence);   // Hilbert function violates Macaulay growth
CMREG_DEFINE_ERROR(truncation_unsound);  // lexification degree cap too small
CMREG_DEFINE_ERROR(not_strongly_stable); // oracle requires a strongly stable ideal
CMREG_DEFINE_ERROR(invalid_spec);        // malformed input document or parameters
CMREG_DEFINE_ERROR(internal_inconsistency); // a built-in cross-check failed

#undef CMREG_DEFINE_ERROR

} // namespace cmreg
