#ifndef BARVIS_BARVIS_HPP
#define BARVIS_BARVIS_HPP

#include "barvis/bar_layout.hpp"
#include "barvis/embedding.hpp"
#include "barvis/errors.hpp"
#include "barvis/flow_network.hpp"
#include "barvis/geometry.hpp"
#include "barvis/graph.hpp"
#include "barvis/io.hpp"
#include "barvis/one_planar.hpp"
#include "barvis/oracle.hpp"
#include "barvis/planarity.hpp"
#include "barvis/quasi_planar.hpp"
#include "barvis/rational.hpp"
#include "barvis/st_planar.hpp"
#include "barvis/svg.hpp"

#endif  // BARVIS_BARVIS_HPP
