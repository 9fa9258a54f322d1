#pragma once

#include <stdexcept>

namespace waring {

// A configured resource cap (modulus size, table bytes, window length) was hit.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two supposedly-agreeing computation routes disagreed, or a certified-to-exist
// object could not be found. Always a bug or a broken hypothesis; fatal.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace waring
