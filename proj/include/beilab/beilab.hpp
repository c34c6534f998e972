#pragma once

#include "beilab/betti.hpp"
#include "beilab/campaign.hpp"
#include "beilab/closedness.hpp"
#include "beilab/edge_ideal.hpp"
#include "beilab/errors.hpp"
#include "beilab/field.hpp"
#include "beilab/graph.hpp"
#include "beilab/graph_enum.hpp"
#include "beilab/graph_io.hpp"
#include "beilab/groebner.hpp"
#include "beilab/hochster.hpp"
#include "beilab/monomial.hpp"
#include "beilab/polynomial.hpp"
#include "beilab/regularity.hpp"
#include "beilab/resolution.hpp"
#include "beilab/simplicial.hpp"
