#ifndef DQN_DQN_HPP
#define DQN_DQN_HPP

#include "dimension.hpp"
#include "errors.hpp"
#include "free_algebra.hpp"
#include "groebner.hpp"
#include "io.hpp"
#include "parse.hpp"
#include "pbw.hpp"
#include "scalar.hpp"

#endif
