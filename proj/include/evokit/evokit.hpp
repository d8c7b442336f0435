#pragma once

#include "evokit/error.hpp"
#include "evokit/field.hpp"
#include "evokit/matrix.hpp"
#include "evokit/subspace.hpp"
#include "evokit/algebra.hpp"
#include "evokit/series.hpp"
#include "evokit/graph.hpp"
#include "evokit/constructions.hpp"
#include "evokit/isomorphism.hpp"
#include "evokit/io.hpp"
#include "evokit/random.hpp"
#include "evokit/checks.hpp"
