#pragma once

#include "tspread/borel.hpp"
#include "tspread/classify.hpp"
#include "tspread/dot.hpp"
#include "tspread/graph.hpp"
#include "tspread/ideal.hpp"
#include "tspread/json_report.hpp"
#include "tspread/monomial.hpp"
#include "tspread/sorted_graph.hpp"
#include "tspread/spread_word.hpp"
#include "tspread/sweep.hpp"
