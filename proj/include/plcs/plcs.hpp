#pragma once

#include "plcs/seqcore.hpp"
#include "plcs/parallel.hpp"
#include "plcs/breakout.hpp"
#include "plcs/monotone.hpp"
#include "plcs/solver.hpp"
#include "plcs/oracle.hpp"
