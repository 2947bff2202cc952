#pragma once

// Umbrella header for the whole library.

#include "core.hpp"
#include "trig.hpp"
#include "disk.hpp"
#include "triangle.hpp"
#include "square.hpp"
#include "deformation.hpp"
#include "surface.hpp"
#include "certify.hpp"
#include "parity.hpp"
#include "hexagon.hpp"
#include "json_io.hpp"
#include "svg.hpp"
