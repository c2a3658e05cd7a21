#pragma once

#include "evenmwis/bags.hpp"
#include "evenmwis/error.hpp"
#include "evenmwis/even_separator.hpp"
#include "evenmwis/generators.hpp"
#include "evenmwis/graph.hpp"
#include "evenmwis/io.hpp"
#include "evenmwis/mwis.hpp"
#include "evenmwis/recognition.hpp"
#include "evenmwis/sfm.hpp"
#include "evenmwis/star_separation.hpp"
#include "evenmwis/vertex_set.hpp"
#include "evenmwis/weights.hpp"
