#pragma once

// Umbrella header for the library (the CLI lives in gdecomp/cli.hpp).

#include "gdecomp/canonical.hpp"
#include "gdecomp/decomposition.hpp"
#include "gdecomp/error.hpp"
#include "gdecomp/extremity.hpp"
#include "gdecomp/flow.hpp"
#include "gdecomp/grid.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/io.hpp"
#include "gdecomp/linear_algebra.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/matrix_ops.hpp"
#include "gdecomp/membership.hpp"
#include "gdecomp/permutation.hpp"
#include "gdecomp/qso.hpp"
#include "gdecomp/rational.hpp"
#include "gdecomp/saturation.hpp"
#include "gdecomp/subset_sums.hpp"
