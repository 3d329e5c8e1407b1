#pragma once

#include <stdexcept>

namespace conmat {

// Bad user input: malformed complexes, invalid partitions, inadmissible
// orderings. The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A broken internal invariant (a bug, not bad input). The CLI maps this
// to exit code 2.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace conmat
