#pragma once

#include "momo/averages/adversarial.hpp"
#include "momo/averages/cone.hpp"
#include "momo/averages/observable.hpp"
#include "momo/averages/partition.hpp"
#include "momo/averages/report.hpp"
#include "momo/averages/stats.hpp"
