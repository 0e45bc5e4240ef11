#pragma once

#include "mawkit/antidictionary.hpp"
#include "mawkit/automaton.hpp"
#include "mawkit/error.hpp"
#include "mawkit/extremal.hpp"
#include "mawkit/rauzy.hpp"
#include "mawkit/serialize.hpp"
#include "mawkit/words.hpp"
