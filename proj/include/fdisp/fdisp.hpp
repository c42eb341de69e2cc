#pragma once

// Everything in one include.

#include "fdisp/rational.hpp"
#include "fdisp/multipoly.hpp"
#include "fdisp/gausspoly.hpp"
#include "fdisp/matrix.hpp"
#include "fdisp/polytext.hpp"
#include "fdisp/determinant.hpp"
#include "fdisp/coupled.hpp"
#include "fdisp/series.hpp"
#include "fdisp/lagrangian.hpp"
#include "fdisp/lagparse.hpp"
#include "fdisp/roots.hpp"
#include "fdisp/branches.hpp"
#include "fdisp/asymptotics.hpp"
#include "fdisp/crosspoint.hpp"
#include "fdisp/mechanalog.hpp"
#include "fdisp/models/kirchhoff.hpp"
#include "fdisp/models/mindlin.hpp"
#include "fdisp/models/twt.hpp"
#include "fdisp/models/wing.hpp"
#include "fdisp/verify.hpp"
