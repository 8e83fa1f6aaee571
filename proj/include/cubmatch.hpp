#pragma once

#include "cubmatch/multigraph.hpp"
#include "cubmatch/canonical.hpp"
#include "cubmatch/matching.hpp"
#include "cubmatch/lambda.hpp"
#include "cubmatch/decomposition.hpp"
#include "cubmatch/constructions.hpp"
#include "cubmatch/families.hpp"
#include "cubmatch/verify.hpp"
#include "cubmatch/io.hpp"
