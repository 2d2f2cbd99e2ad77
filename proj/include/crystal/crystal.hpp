#pragma once

// Umbrella header.

#include "crystal/cartan.hpp"
#include "crystal/errors.hpp"
#include "crystal/g2_data.hpp"
#include "crystal/graph.hpp"
#include "crystal/io.hpp"
#include "crystal/lemma.hpp"
#include "crystal/path.hpp"
#include "crystal/rational.hpp"
#include "crystal/tensor.hpp"
