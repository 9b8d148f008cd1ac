#pragma once

#include "spnodes/chebyshev.hpp"
#include "spnodes/diffmat.hpp"
#include "spnodes/errors.hpp"
#include "spnodes/interp.hpp"
#include "spnodes/linalg.hpp"
#include "spnodes/nodes.hpp"
#include "spnodes/quadrature.hpp"
#include "spnodes/search1d.hpp"
#include "spnodes/testfunctions.hpp"
#include "spnodes/volterra.hpp"
