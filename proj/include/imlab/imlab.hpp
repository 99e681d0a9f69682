#pragma once

#include "imlab/formula.hpp"
#include "imlab/frame.hpp"
#include "imlab/generator.hpp"
#include "imlab/hilbert.hpp"
#include "imlab/io.hpp"
#include "imlab/opspace.hpp"
#include "imlab/relation.hpp"
#include "imlab/search.hpp"
#include "imlab/semantics.hpp"
#include "imlab/topology.hpp"
#include "imlab/tritop.hpp"
#include "imlab/world_set.hpp"
