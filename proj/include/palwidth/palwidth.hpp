#pragma once

#include "palwidth/baumslag.hpp"
#include "palwidth/certificate.hpp"
#include "palwidth/core.hpp"
#include "palwidth/freeword.hpp"
#include "palwidth/heisenberg.hpp"
#include "palwidth/literals.hpp"
#include "palwidth/palrewrite.hpp"
#include "palwidth/random.hpp"
#include "palwidth/verify.hpp"
#include "palwidth/widthsearch.hpp"
#include "palwidth/wreath.hpp"
