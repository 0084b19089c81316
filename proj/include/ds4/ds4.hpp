// ds4.hpp
// Umbrella header for the de Sitter group library.

#pragma once

#include "ds4/algebra.hpp"
#include "ds4/cmatrix.hpp"
#include "ds4/gamma.hpp"
#include "ds4/generators.hpp"
#include "ds4/group.hpp"
#include "ds4/orbits.hpp"
#include "ds4/qmat2.hpp"
#include "ds4/quaternion.hpp"
#include "ds4/random.hpp"
