#pragma once

#include "quasicut/blowup.hpp"
#include "quasicut/cutting.hpp"
#include "quasicut/delzant.hpp"
#include "quasicut/examples.hpp"
#include "quasicut/field.hpp"
#include "quasicut/intlinalg.hpp"
#include "quasicut/linalg.hpp"
#include "quasicut/parse.hpp"
#include "quasicut/polyhedra.hpp"
#include "quasicut/quasilattice.hpp"
#include "quasicut/report.hpp"
#include "quasicut/svg.hpp"
#include "quasicut/toric_group.hpp"
