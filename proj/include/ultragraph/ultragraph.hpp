#pragma once

#include "ultragraph/error.hpp"
#include "ultragraph/weight.hpp"
#include "ultragraph/disjoint_set.hpp"
#include "ultragraph/graph.hpp"
#include "ultragraph/metrics.hpp"
#include "ultragraph/structure.hpp"
#include "ultragraph/extension.hpp"
#include "ultragraph/oracle.hpp"
#include "ultragraph/io.hpp"
