#pragma once

#include "options.hpp"

namespace grasshopper::cli {

int cmd_construct(const RunConfig& c);
int cmd_verify(const RunConfig& c);
int cmd_sweep(const RunConfig& c);
int cmd_retention(const RunConfig& c);

}  // namespace grasshopper::cli
