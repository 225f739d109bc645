#pragma once

#include "lly/rational.hpp"
#include "lly/graph.hpp"
#include "lly/embedding.hpp"
#include "lly/io.hpp"
#include "lly/simplex.hpp"
#include "lly/min_cost_flow.hpp"
#include "lly/transport.hpp"
#include "lly/curvature.hpp"
#include "lly/families.hpp"
#include "lly/parallel.hpp"
#include "lly/report.hpp"
#include "lly/structure.hpp"
#include "lly/verify.hpp"
