/// \file fcc.hpp
/// \brief Umbrella header for the fcc trigonometric toolkit.
#pragma once

#include "fcc/boundary.hpp"
#include "fcc/index_sets.hpp"
#include "fcc/interpolation.hpp"
#include "fcc/kernels.hpp"
#include "fcc/lattice.hpp"
#include "fcc/probes.hpp"
#include "fcc/regular_tetra.hpp"
#include "fcc/summation.hpp"
#include "fcc/symmetry.hpp"
#include "fcc/tetra_coords.hpp"
#include "fcc/transforms.hpp"
#include "fcc/trig_basis.hpp"
#include "fcc/verify.hpp"
