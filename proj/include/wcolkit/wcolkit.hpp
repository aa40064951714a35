#pragma once

#include "wcolkit/bollobas.hpp"
#include "wcolkit/error.hpp"
#include "wcolkit/formula.hpp"
#include "wcolkit/generators.hpp"
#include "wcolkit/graph.hpp"
#include "wcolkit/graph_io.hpp"
#include "wcolkit/lemma.hpp"
#include "wcolkit/minor_model.hpp"
#include "wcolkit/model_io.hpp"
#include "wcolkit/numeric.hpp"
#include "wcolkit/profile.hpp"
#include "wcolkit/rng.hpp"
#include "wcolkit/transduction.hpp"
#include "wcolkit/vertex_cover.hpp"
#include "wcolkit/wcol.hpp"
