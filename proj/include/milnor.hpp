// Umbrella header for the library (everything except the CLI layer).

#ifndef MILNOR_HPP_
#define MILNOR_HPP_

#include "milnor/conj_aut.hpp"
#include "milnor/engine.hpp"
#include "milnor/error.hpp"
#include "milnor/gauss_diagram.hpp"
#include "milnor/magnus.hpp"
#include "milnor/moves.hpp"
#include "milnor/spun.hpp"
#include "milnor/text.hpp"
#include "milnor/word.hpp"

#endif
