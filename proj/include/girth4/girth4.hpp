#pragma once

#include "girth4/graph.hpp"
#include "girth4/metrics.hpp"
#include "girth4/planarity.hpp"
#include "girth4/construct.hpp"
#include "girth4/verify.hpp"
#include "girth4/io.hpp"
