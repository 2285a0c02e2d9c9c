#pragma once

#include "dgrover/errors.hpp"
#include "dgrover/roots_of_unity.hpp"
#include "dgrover/dihedral.hpp"
#include "dgrover/representation.hpp"
#include "dgrover/spectrum.hpp"
#include "dgrover/grover_walk.hpp"
#include "dgrover/chebyshev.hpp"
#include "dgrover/pst.hpp"
#include "dgrover/set_expression.hpp"
#include "dgrover/report.hpp"
