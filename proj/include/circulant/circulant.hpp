#pragma once

#include "circulant/constructors.hpp"
#include "circulant/core.hpp"
#include "circulant/dot.hpp"
#include "circulant/enumeration.hpp"
#include "circulant/errors.hpp"
#include "circulant/io.hpp"
#include "circulant/perfection.hpp"
#include "circulant/verification.hpp"
#include "circulant/words.hpp"
