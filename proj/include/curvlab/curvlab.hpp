#pragma once

/**
 * @file curvlab.hpp
 * @brief Umbrella header for the whole library.
 */

#include "curvlab/rational.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/lp.hpp"
#include "curvlab/polytope.hpp"
#include "curvlab/seminorm.hpp"
#include "curvlab/group.hpp"
#include "curvlab/null_category.hpp"
#include "curvlab/arrow.hpp"
#include "curvlab/axioms.hpp"
#include "curvlab/sampling.hpp"
#include "curvlab/complex.hpp"
#include "curvlab/scene.hpp"
#include "curvlab/report.hpp"
#include "curvlab/svg.hpp"
#include "curvlab/commands.hpp"
