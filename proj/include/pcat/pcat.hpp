#pragma once

#include "pcat/errors.hpp"
#include "pcat/partition.hpp"
#include "pcat/enumerate.hpp"
#include "pcat/text_format.hpp"
#include "pcat/half_power.hpp"
#include "pcat/combination.hpp"
#include "pcat/rational.hpp"
#include "pcat/sparse_operator.hpp"
#include "pcat/realize.hpp"
#include "pcat/linalg.hpp"
#include "pcat/echelon.hpp"
#include "pcat/gram.hpp"
#include "pcat/duality.hpp"
#include "pcat/fattening.hpp"
#include "pcat/classical.hpp"
#include "pcat/closure.hpp"
#include "pcat/experiments.hpp"
#include "pcat/checks.hpp"
#include "pcat/cache.hpp"
#include "pcat/report.hpp"
