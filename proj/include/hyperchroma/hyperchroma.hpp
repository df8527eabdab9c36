#pragma once

#include "hyperchroma/census.hpp"
#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/io.hpp"
#include "hyperchroma/log.hpp"
#include "hyperchroma/oracles.hpp"
#include "hyperchroma/pipeline.hpp"
#include "hyperchroma/process.hpp"
#include "hyperchroma/resample.hpp"
#include "hyperchroma/rng.hpp"
#include "hyperchroma/seqclaim.hpp"
#include "hyperchroma/verify.hpp"
