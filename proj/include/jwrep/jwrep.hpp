#pragma once

#include "jwrep/braid.hpp"
#include "jwrep/density.hpp"
#include "jwrep/diagrams.hpp"
#include "jwrep/duality.hpp"
#include "jwrep/errors.hpp"
#include "jwrep/fibonacci.hpp"
#include "jwrep/hecke.hpp"
#include "jwrep/io.hpp"
#include "jwrep/jones.hpp"
#include "jwrep/parallel.hpp"
#include "jwrep/random.hpp"
#include "jwrep/stats.hpp"
