#pragma once

#include "formula.hpp"
#include "parser.hpp"
#include "nmatrix.hpp"
#include "translation.hpp"
#include "table.hpp"
#include "refinement.hpp"
#include "oracle.hpp"
#include "decision.hpp"
#include "io.hpp"
