#pragma once

#include "genuslab/catalog.hpp"
#include "genuslab/classify.hpp"
#include "genuslab/clique.hpp"
#include "genuslab/commuting.hpp"
#include "genuslab/embed/bounds.hpp"
#include "genuslab/embed/planarity.hpp"
#include "genuslab/embed/rotation_search.hpp"
#include "genuslab/embed/surface.hpp"
#include "genuslab/graph.hpp"
#include "genuslab/group.hpp"
#include "genuslab/io.hpp"
