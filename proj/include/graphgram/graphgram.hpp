#pragma once

// Umbrella header.

#include "graphgram/core.hpp"
#include "graphgram/generators.hpp"
#include "graphgram/grammar.hpp"
#include "graphgram/induction.hpp"
#include "graphgram/io.hpp"
#include "graphgram/lexicon.hpp"
#include "graphgram/matching.hpp"
