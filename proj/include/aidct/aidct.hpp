#pragma once

// Exact algebraic-integer 8x8 DCT engine: error-free 2-D transform over the
// basis {1, z1, z2, z1z2}, expansion-factor reconstruction, a cycle-accurate
// model of the row-parallel buffer architecture, and an accuracy harness.

#include "aidct/ai_quad.hpp"
#include "aidct/audit.hpp"
#include "aidct/checked.hpp"
#include "aidct/frs.hpp"
#include "aidct/harness.hpp"
#include "aidct/highprec.hpp"
#include "aidct/io.hpp"
#include "aidct/pipeline.hpp"
#include "aidct/transform.hpp"
