// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 domain error (bad input data, cap exceeded,
// irreducible web), 2 usage error.

#pragma once

#include <ostream>

namespace krtl::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace krtl::cli
