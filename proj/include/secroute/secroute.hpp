#pragma once

#include "secroute/analytic.hpp"
#include "secroute/bench.hpp"
#include "secroute/edge_game.hpp"
#include "secroute/error.hpp"
#include "secroute/matrix_game.hpp"
#include "secroute/meta_game.hpp"
#include "secroute/paths.hpp"
#include "secroute/random.hpp"
#include "secroute/roadmap.hpp"
#include "secroute/roadmap_io.hpp"
#include "secroute/stage_game.hpp"
