#pragma once

#include "dpcanvas/canvas.hpp"
#include "dpcanvas/canvas_text.hpp"
#include "dpcanvas/certify.hpp"
#include "dpcanvas/correspondence.hpp"
#include "dpcanvas/error.hpp"
#include "dpcanvas/generate.hpp"
#include "dpcanvas/girth5.hpp"
#include "dpcanvas/harness.hpp"
#include "dpcanvas/plane_graph.hpp"
#include "dpcanvas/random.hpp"
#include "dpcanvas/rational.hpp"
#include "dpcanvas/solver.hpp"
#include "dpcanvas/structure.hpp"
#include "dpcanvas/thomassen.hpp"
