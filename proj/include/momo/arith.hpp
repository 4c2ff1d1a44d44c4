#pragma once

#include "momo/arith/arith_seq.hpp"
#include "momo/arith/characters.hpp"
#include "momo/arith/pretentious.hpp"
#include "momo/arith/sieve.hpp"
