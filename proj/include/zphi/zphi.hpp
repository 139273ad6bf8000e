#pragma once

#include "zphi/integer.hpp"
#include "zphi/kernel.hpp"
#include "zphi/fib.hpp"
#include "zphi/extrema.hpp"
#include "zphi/formula.hpp"
#include "zphi/parser.hpp"
#include "zphi/evaluator.hpp"
#include "zphi/checker.hpp"
#include "zphi/plot.hpp"
