#pragma once

#include "bounds.hpp"
#include "experiment.hpp"
#include "explicit_graph.hpp"
#include "extremal.hpp"
#include "hidden_graph.hpp"
#include "matching.hpp"
#include "max_clique.hpp"
#include "probe_algorithms.hpp"
#include "probe_ledger.hpp"
#include "ratio.hpp"
#include "transcript.hpp"
#include "verify.hpp"
