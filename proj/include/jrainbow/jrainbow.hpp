#pragma once

#include <jrainbow/catalogue.hpp>
#include <jrainbow/colouring.hpp>
#include <jrainbow/errors.hpp>
#include <jrainbow/families.hpp>
#include <jrainbow/graph.hpp>
#include <jrainbow/io.hpp>
#include <jrainbow/oracle.hpp>
#include <jrainbow/rational.hpp>
#include <jrainbow/solver.hpp>
