#pragma once

#include "capacity.hpp"
#include "clique.hpp"
#include "construction.hpp"
#include "errors.hpp"
#include "graphs.hpp"
#include "limits.hpp"
#include "number_theory.hpp"
#include "parse.hpp"
#include "streams.hpp"
#include "verify.hpp"
