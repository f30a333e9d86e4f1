#pragma once

#include "antiramsey/coloring.hpp"
#include "antiramsey/constructions.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/family.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/host_graph.hpp"
#include "antiramsey/io.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/rainbow_search.hpp"
#include "antiramsey/triangle_packing.hpp"
