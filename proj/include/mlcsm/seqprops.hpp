#pragma once

#include "mlcsm/rational.hpp"

#include <span>
#include <stdexcept>

namespace mlcsm {

struct SequenceProps {
    bool logconcave = false;
    bool no_internal_zeros = false;
    bool nonnegative = false;

    bool all() const { return logconcave && no_internal_zeros && nonnegative; }
};

/// Checks s[i-1]*s[i+1] <= s[i]^2 for interior i, consecutiveness of the
/// nonzero support, and entrywise nonnegativity.
inline SequenceProps logconcave_no_internal_zeros(std::span<const Integer> s) {
    if (s.empty()) throw std::invalid_argument("empty sequence");
    SequenceProps props;
    props.logconcave = true;
    for (size_t i = 1; i + 1 < s.size(); ++i)
        if (s[i - 1] * s[i + 1] > s[i] * s[i]) props.logconcave = false;
    int first_nonzero = -1, last_nonzero = -1;
    int nonzero_count = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 0) {
            if (first_nonzero < 0) first_nonzero = static_cast<int>(i);
            last_nonzero = static_cast<int>(i);
            ++nonzero_count;
        }
    }
    props.no_internal_zeros =
        nonzero_count == 0 || last_nonzero - first_nonzero + 1 == nonzero_count;
    props.nonnegative = true;
    for (const Integer& x : s)
        if (x < 0) props.nonnegative = false;
    return props;
}

}  // namespace mlcsm
