#pragma once

#include "srsdual/automata.hpp"
#include "srsdual/srs.hpp"

namespace srsdual {

// Accepts exactly the words containing no left-hand side.
Dfa irr_dfa(const Srs& system);

}  // namespace srsdual
