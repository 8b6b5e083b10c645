#ifndef BGCTP_BGCTP_HPP
#define BGCTP_BGCTP_HPP

#include "bgctp/arborescence.hpp"
#include "bgctp/dijkstra.hpp"
#include "bgctp/errors.hpp"
#include "bgctp/frontier.hpp"
#include "bgctp/generate.hpp"
#include "bgctp/graph.hpp"
#include "bgctp/io.hpp"
#include "bgctp/kruskal.hpp"
#include "bgctp/milp.hpp"
#include "bgctp/oracle.hpp"
#include "bgctp/rng.hpp"
#include "bgctp/scaling.hpp"
#include "bgctp/solver.hpp"

#endif // BGCTP_BGCTP_HPP
