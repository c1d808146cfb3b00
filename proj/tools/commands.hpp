#pragma once

#include "json_io.hpp"

namespace lgr::cli {

// Dimension caps for the expensive operations; LGR_MAX_N overrides both.
struct Caps {
  int ma = 5;
  int plucker = 6;
};

Caps caps_from_env();

// Executes one job spec with inline payloads and returns the bare result
// value; the caller wraps it as {"result": ...}.
io::Json run_command(const io::Json& spec, const Caps& caps);

// Ready-made job files keyed by file name.
io::Json fixture_jobs();

}  // namespace lgr::cli
