#pragma once

#include "bimoore/bipartite_graph.hpp"
#include "bimoore/bounds.hpp"
#include "bimoore/canonical.hpp"
#include "bimoore/constructions.hpp"
#include "bimoore/enumerate.hpp"
#include "bimoore/errors.hpp"
#include "bimoore/gf.hpp"
#include "bimoore/graph6.hpp"
#include "bimoore/io.hpp"
#include "bimoore/metrics.hpp"
#include "bimoore/polynomial.hpp"
#include "bimoore/spectrum.hpp"
