#pragma once

#include "amt/fpla.hpp"
#include "amt/level.hpp"
#include "amt/scomplex.hpp"
#include "amt/invariants.hpp"
#include "amt/chain.hpp"
#include "amt/oracle.hpp"
#include "amt/io.hpp"
#include "amt/svg.hpp"
