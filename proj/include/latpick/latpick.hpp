#ifndef LATPICK_LATPICK_HPP
#define LATPICK_LATPICK_HPP

#include "error.hpp"
#include "arithmetic.hpp"
#include "lattice_core.hpp"
#include "polygon.hpp"
#include "triangulation.hpp"
#include "measures.hpp"
#include "farey.hpp"
#include "io.hpp"
#include "svg.hpp"
#include "cross_check.hpp"

#endif
