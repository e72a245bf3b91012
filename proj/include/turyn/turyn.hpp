#pragma once

#include "turyn/errors.hpp"
#include "turyn/sequence.hpp"
#include "turyn/correlation.hpp"
#include "turyn/theorem1.hpp"
#include "turyn/parallel.hpp"
#include "turyn/falsifier.hpp"
#include "turyn/barker.hpp"
#include "turyn/report.hpp"
