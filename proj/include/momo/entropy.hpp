#pragma once

#include "momo/entropy/mix.hpp"
